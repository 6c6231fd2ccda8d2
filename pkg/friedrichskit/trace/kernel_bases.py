# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import logging
import threading
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..common.endpoint import Endpoint
from ..common.errors import DecompositionDefectError
from ..common.operator_variant import OperatorVariant
from ..common.scalar_field import ScalarField
from ..common.tolerance_config import ToleranceConfig
from ..ode.ode_integrator import OdeIntegrator, default_integrator
from ..util.math_utils import compress, conj_transpose, eigenvalue_range, numerical_rank
from .trace_form import TraceForm, build_trace_form, full_index
from .trace_subspace import TraceSubspace

KERNEL_CACHE_SIZE = 64
"""
The number of kernel bases kept in the module cache.
"""

PROJECTION_RESIDUAL_TOL = 1e-10
"""
The largest relative residual accepted when splitting a trace vector.
"""

# the logger of the current module
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class KernelBases:
    """
    The traces of the kernels of the maximal operators T₁ and T̃₁.
    """

    K: TraceSubspace
    """
    The traces of ker T₁.
    """

    K_tilde: TraceSubspace
    """
    The traces of ker T̃₁.
    """

    k_columns: np.ndarray
    """
    The unnormalised trace columns of ker T₁, e.g., the columns of [I; Φ(b)].
    """

    kt_columns: np.ndarray
    """
    The unnormalised trace columns of ker T̃₁, e.g., the columns of [I; Ψ(b)].
    """

    form: TraceForm

    singular_blocks: Tuple = ()
    """
    The reports of the singular endpoint analysis of the flagged blocks.
    """

    @property
    def field(self) -> ScalarField:
        return self.form.field

    @property
    def d_plus(self) -> int:
        """
        The deficiency index dim ker T₁.
        """
        return self.K.dim

    @property
    def d_minus(self) -> int:
        """
        The deficiency index dim ker T̃₁.
        """
        return self.K_tilde.dim

    @property
    def effective_dimension(self) -> int:
        return self.form.dimension

    def stacked_basis(self) -> np.ndarray:
        return np.hstack([self.K.basis, self.K_tilde.basis])

    def kernel_projectors(self, rank_tol: float = 1e-8) -> Tuple[np.ndarray, np.ndarray]:
        """
        Gets the matrices of the oblique projections p_k and p_k̃ of the trace
        space onto the kernel traces along each other.

        :param rank_tol: the relative singular value threshold.
        :return: the pair (P_k, P_k̃), with P_k + P_k̃ = I.
        :raise DecompositionDefectError: if the trace space is not the direct
            sum of the kernel traces.
        """
        m = self._checked_stack(rank_tol)
        inverse = np.linalg.inv(m)
        d = self.d_plus
        pk = self.K.basis @ inverse[:d, :]
        pkt = self.K_tilde.basis @ inverse[d:, :]
        return pk, pkt

    def _checked_stack(self, rank_tol: float) -> np.ndarray:
        m = self.stacked_basis()
        dim = self.effective_dimension
        if m.shape[1] != dim or numerical_rank(m, rank_tol) != dim:
            raise DecompositionDefectError(
                f"The kernel traces of dimensions {self.d_plus} and {self.d_minus} "
                f"do not split the trace space of dimension {dim}.")
        return m


@dataclass(frozen=True)
class DecompositionReport:
    """
    The numerical evidence of the splitting of the trace space into the
    kernel traces, which are orthogonal for the boundary form, and on which the
    form is negative and positive definite, respectively.
    """

    effective_dimension: int

    rank: int
    """
    The numerical rank of the stacked kernel bases.
    """

    orthogonality_residual: float
    """
    The largest |k̃*Qk| over the orthonormal basis pairs, relative to ‖Q‖.
    """

    k_margin: float
    """
    The smallest eigenvalue of −K*QK.
    """

    kt_margin: float
    """
    The smallest eigenvalue of K̃*QK̃.
    """

    signature: Tuple[int, int, int]
    """
    The numbers of positive, negative and zero eigenvalues of Q.
    """

    tolerance: float

    @property
    def is_direct_sum(self) -> bool:
        return self.rank == self.effective_dimension

    @property
    def is_orthogonal(self) -> bool:
        return self.orthogonality_residual <= self.tolerance

    @property
    def is_definite(self) -> bool:
        return self.k_margin > 0 and self.kt_margin > 0

    @property
    def passed(self) -> bool:
        return self.is_direct_sum and self.is_orthogonal and self.is_definite

    def to_dict(self) -> dict:
        return {
            "effective_dimension": self.effective_dimension,
            "rank": self.rank,
            "orthogonality_residual": self.orthogonality_residual,
            "k_margin": _finite_or_none(self.k_margin),
            "kt_margin": _finite_or_none(self.kt_margin),
            "signature": list(self.signature),
            "passed": self.passed,
        }


def _finite_or_none(value: float) -> Optional[float]:
    return value if np.isfinite(value) else None


def kernel_traces(spec: FriedrichsSpec,
                  tol: Optional[ToleranceConfig] = None,
                  integrator: Optional[OdeIntegrator] = None) -> KernelBases:
    """
    Computes the traces of the kernels of the maximal operators.

    The regular components contribute the columns of [I; Φ(b)] and [I; Ψ(b)],
    where Φ and Ψ are the fundamental matrices of T₁ and T̃₁ anchored at a. A
    flagged block contributes the unit vector of its trace at the regular end
    to each kernel whose element is square integrable near the singular end.

    :param spec: the validated specification.
    :param tol: the tolerances, by default the tolerances of the specification.
    :param integrator: the ODE integrator, by default the shared integrator;
        results computed with the shared integrator are cached.
    :return: the kernel traces.
    """
    tol = tol or spec.tolerances
    if integrator is None:
        return _cached_kernel_traces(spec, tol)
    return _kernel_traces(spec, tol, integrator)


@cached(cache=LRUCache(maxsize=KERNEL_CACHE_SIZE),
        key=lambda spec, tol: hashkey(spec, tol),
        lock=threading.Lock())
def _cached_kernel_traces(spec: FriedrichsSpec, tol: ToleranceConfig) -> KernelBases:
    return _kernel_traces(spec, tol, default_integrator())


def _kernel_traces(spec: FriedrichsSpec, tol: ToleranceConfig,
                   integrator: OdeIntegrator) -> KernelBases:
    # imported here since the defect package depends on this module
    from ..defect.singular_block import analyze_spec_block

    qf = build_trace_form(spec)
    n = spec.n
    flagged = spec.degenerate_blocks()
    regular = [k for k in range(n) if k not in flagged]
    k_full = []
    kt_full = []
    if regular:
        sub = spec.restrict(regular)
        for variant, target in ((OperatorVariant.MAXIMAL, k_full),
                                (OperatorVariant.ADJOINT_MAXIMAL, kt_full)):
            phi = integrator.fundamental_matrix(sub, variant, anchor=spec.a)
            for j in range(len(regular)):
                column = np.zeros(2 * n, dtype=complex)
                for i, k in enumerate(regular):
                    column[full_index(n, (Endpoint.LEFT, k))] = phi.start[i, j]
                    column[full_index(n, (Endpoint.RIGHT, k))] = phi.end[i, j]
                target.append(column)
    reports = []
    for block in flagged:
        report = analyze_spec_block(spec, block, tol)
        reports.append(report)
        unit = np.zeros(2 * n, dtype=complex)
        unit[full_index(n, (report.endpoint.other(), block))] = 1.0
        if report.kernel_in_l2:
            k_full.append(unit)
        if report.adjoint_kernel_in_l2:
            kt_full.append(unit)
    k_columns = _effective_columns(k_full, qf)
    kt_columns = _effective_columns(kt_full, qf)
    kb = KernelBases(K=TraceSubspace.span(k_columns, tol.rank_tol),
                     K_tilde=TraceSubspace.span(kt_columns, tol.rank_tol),
                     k_columns=k_columns,
                     kt_columns=kt_columns,
                     form=qf,
                     singular_blocks=tuple(reports))
    logger.info("The kernel traces have the dimensions (%d, %d).", kb.d_plus, kb.d_minus)
    return kb


def _effective_columns(columns, qf: TraceForm) -> np.ndarray:
    if not columns:
        return np.zeros((qf.dimension, 0), dtype=complex)
    return qf.restrict(np.stack(columns, axis=1))


def project_kernels(t: np.ndarray, kb: KernelBases,
                    rank_tol: float = 1e-8) -> Tuple[np.ndarray, np.ndarray]:
    """
    Splits a trace vector into its components in the kernel traces.

    :param t: the effective trace vector.
    :param kb: the kernel traces.
    :param rank_tol: the relative singular value threshold.
    :return: the pair (k, k̃) with t = k + k̃, k ∈ K and k̃ ∈ K̃.
    :raise DecompositionDefectError: if the kernel traces do not split the
        trace space.
    """
    t = np.asarray(t, dtype=complex)
    m = kb._checked_stack(rank_tol)
    coefficients, *_ = np.linalg.lstsq(m, t, rcond=None)
    residual = float(np.linalg.norm(m @ coefficients - t))
    if residual > PROJECTION_RESIDUAL_TOL * max(1.0, float(np.linalg.norm(t))):
        raise DecompositionDefectError(f"The splitting residual {residual!r} is too large.")
    d = kb.d_plus
    return kb.K.basis @ coefficients[:d], kb.K_tilde.basis @ coefficients[d:]


def check_decomposition(kb: KernelBases,
                        qf: Optional[TraceForm] = None,
                        tol: Optional[ToleranceConfig] = None) -> DecompositionReport:
    """
    Checks that the trace space is the boundary-form orthogonal direct sum of
    the kernel traces, with the form negative definite on K and positive
    definite on K̃.
    """
    qf = qf or kb.form
    tol = tol or ToleranceConfig()
    scale = max(qf.norm, np.finfo(float).tiny)
    cross = conj_transpose(kb.K_tilde.basis) @ qf.Q @ kb.K.basis
    residual = float(np.max(np.abs(cross))) / scale if cross.size else 0.0
    k_margin = eigenvalue_range(-compress(kb.K.basis, qf.Q))[0] if kb.d_plus else np.inf
    kt_margin = eigenvalue_range(compress(kb.K_tilde.basis, qf.Q))[0] if kb.d_minus else np.inf
    rank = numerical_rank(kb.stacked_basis(), tol.rank_tol) if qf.dimension else 0
    return DecompositionReport(effective_dimension=qf.dimension,
                               rank=rank,
                               orthogonality_residual=residual,
                               k_margin=float(k_margin),
                               kt_margin=float(kt_margin),
                               signature=qf.signature(tol.psd_tol),
                               tolerance=tol.consistency_tol)
