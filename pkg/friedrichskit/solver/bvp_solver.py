# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import logging
from dataclasses import dataclass, replace
from logging import Logger, getLogger
from typing import Optional, Sequence

import numpy as np
from tenacity import (
    Retrying,
    before_sleep_log,
    retry_if_exception_type,
    stop_after_attempt,
)

from ..classification.classifier import Classifier
from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..coefficients.parts_decomposition import PartsDecomposition
from ..coefficients.spec_validator import validate_spec
from ..common.errors import (
    IllConditionedError,
    NotBijectiveError,
    PreconditionNotSignedError,
    ResidualCheckError,
    UnsupportedSpecError,
)
from ..common.operator_variant import OperatorVariant
from ..common.tolerance_config import ToleranceConfig
from ..expression import ExprNode, parse_expression
from ..ode.identities import IdentityCheck, green_identity
from ..ode.ode_integrator import OdeIntegrator, default_integrator
from ..ode.operator_image import apply_operator
from ..ode.quadrature import integrate_on_nodes, l2_norm
from ..ode.trajectory import ExpressionTrajectory
from ..trace.boundary_condition import BoundaryCondition
from ..trace.kernel_bases import KernelBases, kernel_traces
from ..trace.subspace_algebra import ortho_complement
from ..trace.trace_subspace import TraceSubspace
from ..util.common_utils import get_iterable_or_tqdm
from ..util.math_utils import conj_transpose, null_space_basis, numerical_rank
from .apriori import AprioriReport, AprioriTrial
from .boundary_value_solution import BoundaryValueSolution
from .random_rhs import RandomRhsGenerator

DUALITY_TOL = 1e-7
"""
The relative tolerance of the duality check ⟨T₁u, v⟩ = ⟨u, T̃₁v⟩.
"""

APRIORI_TOL = 1e-7
"""
The relative slack allowed in the a priori estimates.
"""

MIN_TRIALS_TO_SHOW_PROGRESS = 10

DENSE_REFINEMENT = 4
"""
The factor by which the number of dense output intervals grows before each
new attempt of a solution failing its residual check.
"""

RTOL_REFINEMENT = 10.0
"""
The factor by which the relative tolerance of the integrator is tightened
before each new attempt of a solution failing its residual check.
"""

# the logger of the current module
logger = logging.getLogger(__name__)

BoundarySpec = TraceSubspace | BoundaryCondition

Forcing = Sequence[ExprNode | str]


@dataclass(frozen=True)
class DualityReport:
    """
    The solutions u of T₁u = f with trace in V and v of T̃₁v = g with trace in
    V^[⊥], together with both sides of ⟨T₁u, v⟩ − ⟨u, T̃₁v⟩ = ⟦u|v⟧.
    """

    u: BoundaryValueSolution

    v: BoundaryValueSolution

    identity: IdentityCheck

    scale: float
    """
    The scale ‖f‖‖v‖ + ‖u‖‖g‖ of the inner products, at least 1.
    """

    @property
    def inner_difference(self) -> complex:
        return self.identity.volume_term

    @property
    def boundary_form(self) -> complex:
        return self.identity.boundary_term

    @property
    def passed(self) -> bool:
        bound = DUALITY_TOL * self.scale
        return abs(self.inner_difference) <= bound and abs(self.boundary_form) <= bound

    def to_dict(self) -> dict:
        return {
            "inner_difference": abs(self.inner_difference),
            "boundary_form": abs(self.boundary_form),
            "passed": self.passed,
            "u": self.u.to_dict(),
            "v": self.v.to_dict(),
        }


class BoundaryValueSolver:
    """
    Solves T₁u = f for a bijective realisation, and T̃₁v = g for its adjoint,
    by superposition of a particular solution and the fundamental matrix.

    A solution whose L² residual exceeds the solver tolerance is computed again
    with a tighter integrator tolerance and a finer dense output, up to
    `ode_retries` attempts. An integrator created with fixed tolerances is not
    refined.
    """

    def __init__(self,
                 tol: Optional[ToleranceConfig] = None,
                 integrator: Optional[OdeIntegrator] = None,
                 show_progress: bool = False) -> None:
        self._tol = tol
        self._integrator = integrator
        self._show_progress = show_progress
        self._logger = getLogger(self.__class__.__name__)

    @property
    def logger(self) -> Logger:
        return self._logger

    def set_logging_level(self, level: int | str) -> None:
        self._logger.setLevel(level)

    def solve(self, spec: FriedrichsSpec, v: BoundarySpec,
              f: Forcing) -> BoundaryValueSolution:
        """
        Solves T₁u = f with the trace of u in V.

        :param spec: the non-degenerate specification.
        :param v: the boundary subspace V of a bijective realisation.
        :param f: the components of the right hand side, as expressions.
        :return: the solution.
        :raise UnsupportedSpecError: if the specification is degenerate.
        :raise NotBijectiveError: if the realisation is not bijective.
        :raise IllConditionedError: if the linear system for the initial value
            is ill conditioned.
        :raise ResidualCheckError: if the residual of the solution stays above
            `solver_tol · max(1, ‖f‖)` after all refined attempts.
        """
        kb, parts = self._prepare(spec)
        subspace = _subspace_of(v)
        return self._solve(spec, kb, parts, subspace, kb.K,
                           OperatorVariant.MAXIMAL, f)

    def adjoint_solve(self, spec: FriedrichsSpec, v: BoundarySpec,
                      g: Forcing) -> BoundaryValueSolution:
        """
        Solves T̃₁v = g with the trace of v in V^[⊥], the adjoint realisation of
        the realisation with boundary subspace V.

        See `solve`.
        """
        kb, parts = self._prepare(spec)
        tol = self._tolerances(spec)
        perp = ortho_complement(_subspace_of(v), kb.form, tol.rank_tol)
        return self._solve(spec, kb, parts, perp, kb.K_tilde,
                           OperatorVariant.ADJOINT_MAXIMAL, g)

    def duality_check(self, spec: FriedrichsSpec, v: BoundarySpec,
                      f: Forcing, g: Forcing) -> DualityReport:
        """
        Solves the realisation and its adjoint, and compares ⟨T₁u, v⟩ with
        ⟨u, T̃₁v⟩ and the boundary form ⟦u|v⟧ with zero.
        """
        u = self.solve(spec, v, f)
        w = self.adjoint_solve(spec, v, g)
        identity = green_identity(spec, u.u, w.u)
        scale = max(1.0, u.rhs_norm * w.solution_norm + u.solution_norm * w.rhs_norm)
        report = DualityReport(u=u, v=w, identity=identity, scale=scale)
        self._logger.debug("Duality residuals: inner %g, boundary %g.",
                           abs(report.inner_difference), abs(report.boundary_form))
        return report

    def check_apriori(self, spec: FriedrichsSpec, v: BoundarySpec,
                      trials: int = 50, seed: int = 0) -> AprioriReport:
        """
        Checks the estimates ‖u‖ + ‖T₁u‖ ≤ (1 + 1/μ)‖T₁u‖ and μ‖u‖ ≤ ‖T₁u‖ for
        random right hand sides.

        :param spec: the non-degenerate specification.
        :param v: the boundary subspace of a realisation with signed boundary
            map.
        :param trials: the number of random right hand sides.
        :param seed: the seed of the random right hand sides.
        :return: the report of all trials.
        :raise PreconditionNotSignedError: if the realisation has no signed
            boundary map.
        """
        kb, parts = self._prepare(spec)
        subspace = _subspace_of(v)
        tol = self._tolerances(spec)
        report = Classifier(tol).classify(subspace, kb)
        if not report.signed_boundary_map:
            raise PreconditionNotSignedError("The a priori estimate requires a "
                                             "realisation with signed boundary map.")
        mu = _mu_of(parts)
        generator = RandomRhsGenerator(seed)
        rows = []
        indices = get_iterable_or_tqdm(range(trials), self._show_progress,
                                       MIN_TRIALS_TO_SHOW_PROGRESS, "a priori")
        for index in indices:
            f = generator.generate(spec.n, spec.field)
            solution = self._solve(spec, kb, parts, subspace, kb.K,
                                   OperatorVariant.MAXIMAL, f)
            rows.append(AprioriTrial.of(index, solution, mu, APRIORI_TOL))
        result = AprioriReport(mu=mu, trials=tuple(rows))
        self._logger.info("The a priori estimates hold in %d of %d trials.",
                          sum(r.passed for r in result.trials if not r.skipped),
                          len(result.trials))
        return result

    def _tolerances(self, spec: FriedrichsSpec) -> ToleranceConfig:
        return self._tol or spec.tolerances

    def _prepare(self, spec: FriedrichsSpec) -> tuple[KernelBases, PartsDecomposition]:
        if spec.is_degenerate:
            raise UnsupportedSpecError("Boundary value problems with degenerate "
                                       "coefficients are not supported.")
        tol = self._tolerances(spec)
        parts = validate_spec(spec, tol)
        return kernel_traces(spec, tol, self._integrator), parts

    def _solve(self, spec: FriedrichsSpec, kb: KernelBases,
               parts: PartsDecomposition, subspace: TraceSubspace,
               kernel: TraceSubspace, variant: OperatorVariant,
               f: Forcing) -> BoundaryValueSolution:
        tol = self._tolerances(spec)
        forcing = _forcing_of(spec, f)
        dim = kb.effective_dimension
        stacked = np.hstack([subspace.basis, kernel.basis])
        if subspace.dim + kernel.dim != dim or numerical_rank(stacked, tol.rank_tol) != dim:
            raise NotBijectiveError(f"The realisation of {variant.value} is not "
                                    f"bijective: the boundary subspace of dimension "
                                    f"{subspace.dim} does not complement the kernel.")
        retrying = Retrying(
            reraise=True,
            stop=stop_after_attempt(tol.ode_retries),
            retry=retry_if_exception_type(ResidualCheckError),
            before_sleep=before_sleep_log(logger, logging.WARNING),
        )
        for trial in retrying:
            with trial:
                refined = refined_tolerances(tol, trial.retry_state.attempt_number)
                return self._superpose(spec.with_tolerances(refined), parts,
                                       subspace, variant, forcing, refined)

    def _superpose(self, spec: FriedrichsSpec, parts: PartsDecomposition,
                   subspace: TraceSubspace, variant: OperatorVariant,
                   forcing: tuple[ExprNode, ...],
                   tol: ToleranceConfig) -> BoundaryValueSolution:
        integrator = self._integrator or default_integrator()
        phi = integrator.fundamental_matrix(spec, variant)
        particular = integrator.particular_solution(spec, forcing, variant)
        # rows of the annihilator of V, so that t ∈ V iff N t = 0
        annihilator = conj_transpose(null_space_basis(conj_transpose(subspace.basis),
                                                      tol.rank_tol))
        n = spec.n
        system = annihilator @ np.vstack([phi.start, phi.end])
        offset = np.concatenate([np.zeros(n, dtype=complex), particular.end_value()])
        condition = float(np.linalg.cond(system))
        if not np.isfinite(condition) or condition > tol.cond_max:
            raise IllConditionedError(f"The trace system has the condition number "
                                      f"{condition!r}.", condition)
        xi = np.linalg.solve(system, -annihilator @ offset)
        u = integrator.solve_initial_value(spec, variant, initial=xi, forcing=forcing)
        rhs = ExpressionTrajectory(forcing, spec.interval)
        image = apply_operator(spec, u, variant)

        def squared_defect(x: np.ndarray) -> np.ndarray:
            return np.sum(np.abs(image.evaluate(x) - rhs.evaluate(x)) ** 2, axis=1)

        residual = integrate_on_nodes(squared_defect, np.union1d(u.nodes, rhs.nodes),
                                      tol.quad_abs, tol.quad_rtol)
        trace = u.trace()
        rhs_norm = l2_norm(rhs)
        solution = BoundaryValueSolution(
            variant=variant,
            u=u,
            trace=trace,
            residual_l2=float(np.sqrt(max(0.0, residual.value.real))),
            trace_residual=subspace.residual(trace) / max(1.0, float(np.linalg.norm(trace))),
            rhs_norm=rhs_norm,
            solution_norm=l2_norm(u),
            image_norm=l2_norm(image),
            mu=_mu_of(parts),
            condition_number=condition,
        )
        limit = tol.solver_tol * max(1.0, rhs_norm)
        if solution.residual_l2 > limit:
            raise ResidualCheckError(f"The residual {solution.residual_l2!r} of the "
                                     f"solution exceeds {limit!r}.")
        return solution


def refined_tolerances(tol: ToleranceConfig, attempt: int) -> ToleranceConfig:
    """
    Gets the integration tolerances of an attempt to solve a boundary value
    problem; the first attempt uses the tolerances unchanged.

    :param tol: the configured tolerances.
    :param attempt: the number of the attempt, starting at 1.
    :return: the tolerances with a tightened `ode_rtol` and a finer dense
        output.
    """
    if attempt <= 1:
        return tol
    return replace(tol,
                   ode_rtol=tol.ode_rtol / RTOL_REFINEMENT ** (attempt - 1),
                   dense_intervals=tol.dense_intervals * DENSE_REFINEMENT ** (attempt - 1))


def _subspace_of(v: BoundarySpec) -> TraceSubspace:
    return v.subspace if isinstance(v, BoundaryCondition) else v


def _forcing_of(spec: FriedrichsSpec, f: Forcing) -> tuple[ExprNode, ...]:
    if len(f) != spec.n:
        raise ValueError(f"The right hand side must have {spec.n} components, "
                         f"got {len(f)}.")
    return tuple(parse_expression(c) if isinstance(c, str) else c for c in f)


def _mu_of(parts: PartsDecomposition) -> float:
    return parts.mu_certified if parts.mu_certified > 0 else parts.mu


def solve(spec: FriedrichsSpec, v: BoundarySpec, f: Forcing,
          tol: Optional[ToleranceConfig] = None) -> BoundaryValueSolution:
    """
    Solves T₁u = f with the trace of u in V.

    See `BoundaryValueSolver.solve`.
    """
    return BoundaryValueSolver(tol).solve(spec, v, f)


def adjoint_solve(spec: FriedrichsSpec, v: BoundarySpec, g: Forcing,
                  tol: Optional[ToleranceConfig] = None) -> BoundaryValueSolution:
    return BoundaryValueSolver(tol).adjoint_solve(spec, v, g)


def duality_check(spec: FriedrichsSpec, v: BoundarySpec, f: Forcing, g: Forcing,
                  tol: Optional[ToleranceConfig] = None) -> DualityReport:
    return BoundaryValueSolver(tol).duality_check(spec, v, f, g)


def check_apriori(spec: FriedrichsSpec, v: BoundarySpec, trials: int = 50,
                  seed: int = 0, tol: Optional[ToleranceConfig] = None,
                  show_progress: bool = False) -> AprioriReport:
    """
    Checks the a priori estimates of a realisation with signed boundary map.

    See `BoundaryValueSolver.check_apriori`.
    """
    return BoundaryValueSolver(tol, show_progress=show_progress).check_apriori(
        spec, v, trials, seed)
