# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from logging import Logger, getLogger
from typing import Optional

import numpy as np
from frozendict import frozendict

from ..coefficients.parts_decomposition import PartsDecomposition
from ..common.errors import InternalInconsistencyError
from ..common.tolerance_config import ToleranceConfig
from ..trace.cone import compressed_eigenvalues, cone_test
from ..trace.kernel_bases import KernelBases
from ..trace.subspace_algebra import is_selfadjoint_type, is_symmetric, ortho_complement
from ..trace.trace_form import TraceForm
from ..trace.trace_subspace import TraceSubspace
from ..util.math_utils import numerical_rank
from .classifying_map import ClassifyingMap, build_U
from .realisation_report import BijectivityCheck, CategoryFlags, RealisationReport


def is_bijective(v: TraceSubspace, kb: KernelBases,
                 rank_tol: float = 1e-8) -> BijectivityCheck:
    """
    Tests whether the realisation with boundary subspace V is bijective, i.e.
    whether V ∔ ker T₁ is the whole trace space.

    :param v: the boundary subspace.
    :param kb: the kernel traces.
    :param rank_tol: the relative singular value threshold.
    :return: the verdict, which is truthy for bijective realisations, with the
        ranks involved.
    """
    dim = kb.effective_dimension
    stacked = np.hstack([v.basis, kb.K.basis])
    rank = numerical_rank(stacked, rank_tol) if stacked.shape[1] else 0
    intersection = v.intersection(kb.K, rank_tol).dim
    bijective = rank == dim and v.dim + kb.d_plus == dim and intersection == 0
    return BijectivityCheck(bijective=bijective,
                            rank=rank,
                            dim_v=v.dim,
                            d_plus=kb.d_plus,
                            effective_dimension=dim,
                            intersection_dim=intersection)


class Classifier:
    """
    Classifies realisations of a joint pair of maximal operators by their
    boundary subspaces.

    Every category is decided twice, by the geometry of V and V^[⊥] with
    respect to the boundary form and by the properties of the classifying
    operator U; the two routes must agree.
    """

    def __init__(self, tol: Optional[ToleranceConfig] = None) -> None:
        self._tol = tol or ToleranceConfig()
        self._logger = getLogger(self.__class__.__name__)

    @property
    def logger(self) -> Logger:
        return self._logger

    def set_logging_level(self, level: int | str) -> None:
        self._logger.setLevel(level)

    @property
    def tolerances(self) -> ToleranceConfig:
        return self._tol

    def classify(self,
                 v: TraceSubspace,
                 kb: KernelBases,
                 qf: Optional[TraceForm] = None,
                 parts: Optional[PartsDecomposition] = None) -> RealisationReport:
        """
        Classifies a realisation.

        :param v: the boundary subspace V.
        :param kb: the kernel traces.
        :param qf: the boundary form, by default the form of the kernel traces.
        :param parts: the decomposition of the specification, whose bound μ is
            added to the diagnostics.
        :return: the report.
        :raise InternalInconsistencyError: if the two routes disagree.
        """
        qf = qf or kb.form
        tol = self._tol
        if v.ambient_dimension != qf.dimension:
            raise ValueError(f"The boundary subspace lives in a space of dimension "
                             f"{v.ambient_dimension}, expected {qf.dimension}.")
        v_perp = ortho_complement(v, qf, tol.rank_tol)
        bijectivity = is_bijective(v, kb, tol.rank_tol)
        cone = cone_test(v, qf, tol.psd_tol)
        cone_perp = cone_test(v_perp, qf, tol.psd_tol)
        in_w_plus = cone.is_nonneg()
        geometric = CategoryFlags(
            bijective=bijectivity.bijective,
            in_w_plus=in_w_plus,
            signed_boundary_map=in_w_plus and cone_perp.is_nonpos(),
            symmetric=is_symmetric(v, qf, tol.consistency_tol, tol.rank_tol),
            selfadjoint_type=is_selfadjoint_type(v, qf, tol.consistency_tol, tol.rank_tol),
            maximal_nonnegative=in_w_plus and v.dim == kb.d_minus,
        )
        u = build_U(v, kb, tol.rank_tol) if bijectivity.intersection_dim == 0 else None
        operator_flags = self._operator_flags(u, tol)
        differences = geometric.differences(operator_flags)
        if differences:
            self._logger.error("The classification routes disagree on %s.", differences)
            raise InternalInconsistencyError(f"The subspace and operator criteria "
                                             f"disagree on {differences}.")
        diagnostics = {
            "dim_V": v.dim,
            "d_plus": kb.d_plus,
            "d_minus": kb.d_minus,
            "rank_V_plus_K": bijectivity.rank,
            "dim_V_cap_K": bijectivity.intersection_dim,
            "cone_V": cone.value,
            "cone_V_perp": cone_perp.value,
            "form_eigenvalues_V": [float(w) for w in compressed_eigenvalues(v, qf)],
            "form_eigenvalues_V_perp": [float(w) for w in compressed_eigenvalues(v_perp, qf)],
        }
        if u is not None:
            diagnostics["norm_indefinite"] = u.norm_indefinite
            diagnostics["isometry_defect"] = u.isometry_defect()
        if parts is not None:
            diagnostics["mu"] = parts.mu
        self._logger.debug("Classified a boundary subspace of dimension %d: %s",
                           v.dim, geometric)
        return RealisationReport(V=v, V_perp=v_perp, flags=geometric, U=u,
                                 diagnostics=frozendict(diagnostics))

    def _operator_flags(self, u: Optional[ClassifyingMap],
                        tol: ToleranceConfig) -> CategoryFlags:
        # a subspace meeting ker T₁ contains vectors with ⟦t|t⟧ < 0
        if u is None:
            return CategoryFlags(False, False, False, False, False, False)
        contraction = u.is_contraction(tol.consistency_tol)
        isometry = u.is_isometry(tol.consistency_tol)
        full = u.has_full_domain
        return CategoryFlags(
            bijective=full,
            in_w_plus=contraction,
            signed_boundary_map=contraction and full,
            symmetric=isometry,
            selfadjoint_type=u.is_unitary(tol.consistency_tol, tol.rank_tol),
            maximal_nonnegative=contraction and full,
        )


def classify(v: TraceSubspace,
             kb: KernelBases,
             qf: Optional[TraceForm] = None,
             parts: Optional[PartsDecomposition] = None,
             tol: Optional[ToleranceConfig] = None) -> RealisationReport:
    """
    Classifies a realisation.

    See `Classifier.classify`.
    """
    return Classifier(tol).classify(v, kb, qf, parts)
