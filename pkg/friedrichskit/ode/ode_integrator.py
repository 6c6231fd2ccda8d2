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
from logging import Logger, getLogger
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from cachetools import LRUCache
from cachetools.keys import hashkey
from scipy.integrate import solve_ivp
from scipy.interpolate import CubicHermiteSpline
from tenacity import (
    Retrying,
    before_sleep_log,
    retry_if_exception_type,
    stop_after_attempt,
)

from ..coefficients.coefficient_field import Interval
from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..common.errors import (
    IllConditionedError,
    ResidualCheckError,
    StepSizeUnderflowError,
)
from ..common.operator_variant import OperatorVariant
from ..common.tolerance_config import ToleranceConfig
from ..expression import ExprNode
from .fundamental_matrix import FundamentalMatrix
from .linear_system import LinearSystem
from .trajectory import SampledTrajectory

DEFAULT_CACHE_SIZE = 256
"""
The default number of integrations kept in the cache of an integrator.
"""

ABSOLUTE_TOLERANCE_RATIO = 1e-2
"""
The absolute tolerance of the integrator is this ratio times its relative
tolerance.
"""

RTOL_TIGHTENING = 10.0
"""
The factor by which the relative tolerance is tightened before each retry.
"""

MIN_RTOL = 1e-13

DET_SCALE_TOL = 1e-12
"""
The smallest ratio |det Φ| / ∏‖Φ e_j‖ accepted for a fundamental matrix.
"""

# the logger of the current module
logger = logging.getLogger(__name__)

RhsFunction = Callable[[float, np.ndarray], np.ndarray]


class OdeIntegrator:
    """
    Integrates the linear first order systems of a joint pair by an adaptive
    embedded Runge-Kutta pair of order 5(4) with cubic Hermite dense output.

    Each integration is verified at the midpoints of the accepted steps; a
    failed verification is retried with a tighter relative tolerance. Results
    are cached in an LRU cache keyed by the immutable inputs.
    """

    def __init__(self,
                 tol: Optional[ToleranceConfig] = None,
                 use_cache: bool = True,
                 cache_size: int = DEFAULT_CACHE_SIZE) -> None:
        """
        Creates an OdeIntegrator.

        :param tol: the tolerances, or `None` to use the tolerances of each
            specification.
        :param use_cache: whether to cache the results.
        :param cache_size: the number of results kept in the cache.
        """
        if cache_size <= 0:
            raise ValueError("The cache size must be positive.")
        self._tol = tol
        self._cache = LRUCache(maxsize=cache_size) if use_cache else None
        self._lock = threading.Lock()
        self._logger = getLogger(self.__class__.__name__)

    @property
    def logger(self) -> Logger:
        return self._logger

    def set_logging_level(self, level: int | str) -> None:
        self._logger.setLevel(level)

    def clear_cache(self) -> None:
        if self._cache is not None:
            with self._lock:
                self._cache.clear()

    def fundamental_matrix(self,
                           spec: FriedrichsSpec,
                           variant: OperatorVariant = OperatorVariant.MAXIMAL,
                           anchor: Optional[float] = None,
                           interval: Optional[Interval] = None) -> FundamentalMatrix:
        """
        Computes the fundamental matrix of the homogeneous system of a maximal
        operator.

        :param spec: the specification.
        :param variant: the maximal operator, T₁ or T̃₁.
        :param anchor: the point where Φ = I, by default the left end of the
            integration range.
        :param interval: the integration range, by default the interval of the
            specification; a truncated range avoids degenerate endpoints.
        :return: the fundamental matrix.
        :raise SingularAError: if A is not invertible on the range.
        :raise StepSizeUnderflowError: if the integrator cannot make progress.
        """
        tol = self._tol or spec.tolerances
        lo, hi = interval or spec.interval
        anchor = lo if anchor is None else float(anchor)
        key = hashkey("fundamental", spec.A, spec.C, variant, anchor, lo, hi, tol)
        return self._cached(key, lambda: self._fundamental(spec, variant, anchor,
                                                           (lo, hi), tol))

    def solve_initial_value(self,
                            spec: FriedrichsSpec,
                            variant: OperatorVariant = OperatorVariant.MAXIMAL,
                            initial: Optional[Sequence[complex]] = None,
                            forcing: Optional[Sequence[ExprNode]] = None,
                            interval: Optional[Interval] = None) -> SampledTrajectory:
        """
        Solves σAu′ + Eu = f with u prescribed at the left end of the range.

        :param spec: the specification.
        :param variant: the maximal operator, T₁ or T̃₁.
        :param initial: the initial value, by default zero.
        :param forcing: the components of f, by default zero.
        :param interval: the integration range.
        :return: the solution.
        """
        tol = self._tol or spec.tolerances
        lo, hi = interval or spec.interval
        initial = np.zeros(spec.n, dtype=complex) if initial is None \
            else np.asarray(initial, dtype=complex)
        if initial.shape != (spec.n,):
            raise ValueError(f"The initial value must have {spec.n} components.")
        if forcing is not None and len(forcing) != spec.n:
            raise ValueError(f"The right hand side must have {spec.n} components.")
        forcing = tuple(forcing) if forcing is not None else None
        key = hashkey("ivp", spec.A, spec.C, variant, tuple(initial.tolist()),
                      forcing, lo, hi, tol)
        return self._cached(key, lambda: self._initial_value(spec, variant, initial,
                                                             forcing, (lo, hi), tol))

    def particular_solution(self,
                            spec: FriedrichsSpec,
                            forcing: Sequence[ExprNode],
                            variant: OperatorVariant = OperatorVariant.MAXIMAL) -> SampledTrajectory:
        """
        Computes the particular solution of σAu′ + Eu = f with u(a) = 0.
        """
        return self.solve_initial_value(spec, variant, None, forcing)

    def _cached(self, key, compute):
        if self._cache is None:
            return compute()
        with self._lock:
            if key in self._cache:
                self._logger.debug("Reuse a cached integration.")
                return self._cache[key]
        result = compute()
        with self._lock:
            self._cache[key] = result
        return result

    def _fundamental(self, spec: FriedrichsSpec, variant: OperatorVariant,
                     anchor: float, interval: Interval,
                     tol: ToleranceConfig) -> FundamentalMatrix:
        system = LinearSystem(spec, variant, det_tol=tol.det_tol)
        n = spec.n
        y0 = np.eye(n, dtype=complex).ravel()
        self._logger.info("Computing the fundamental matrix of %s on [%g, %g].",
                          variant.value, interval[0], interval[1])

        def attempt(rtol: float) -> FundamentalMatrix:
            x, y = self._integrate_from(system.matrix_rhs, anchor, interval, y0,
                                        rtol, tol)
            dy = np.array([system.matrix_rhs(xk, yk) for xk, yk in zip(x, y)])
            values = y.reshape(len(x), n, n)
            derivatives = dy.reshape(len(x), n, n)
            error = self._verify(system, x, values, derivatives, True, tol)
            _check_determinant(values, x)
            return FundamentalMatrix(variant=variant, anchor=anchor, x=x,
                                     values=values, derivatives=derivatives,
                                     error_estimate=error, rtol=rtol)

        return self._with_retries(attempt, tol)

    def _initial_value(self, spec: FriedrichsSpec, variant: OperatorVariant,
                       initial: np.ndarray, forcing: Optional[Tuple[ExprNode, ...]],
                       interval: Interval, tol: ToleranceConfig) -> SampledTrajectory:
        system = LinearSystem(spec, variant, forcing, det_tol=tol.det_tol)

        def attempt(rtol: float) -> SampledTrajectory:
            x, y = self._integrate_from(system.vector_rhs, interval[0], interval,
                                        initial, rtol, tol)
            dy = np.array([system.vector_rhs(xk, yk) for xk, yk in zip(x, y)])
            self._verify(system, x, y, dy, False, tol)
            return SampledTrajectory(x, y, dy)

        return self._with_retries(attempt, tol)

    def _with_retries(self, attempt, tol: ToleranceConfig):
        retrying = Retrying(
            reraise=True,
            stop=stop_after_attempt(tol.ode_retries),
            retry=retry_if_exception_type(ResidualCheckError),
            before_sleep=before_sleep_log(logger, logging.WARNING),
        )
        for trial in retrying:
            with trial:
                number = trial.retry_state.attempt_number
                rtol = max(MIN_RTOL, tol.ode_rtol / RTOL_TIGHTENING ** (number - 1))
                return attempt(rtol)

    def _integrate_from(self, rhs: RhsFunction, anchor: float, interval: Interval,
                        y0: np.ndarray, rtol: float,
                        tol: ToleranceConfig) -> Tuple[np.ndarray, np.ndarray]:
        lo, hi = interval
        if not lo <= anchor <= hi:
            raise ValueError(f"The anchor {anchor} is outside of [{lo}, {hi}].")
        max_step = (hi - lo) / tol.dense_intervals
        pieces_x = []
        pieces_y = []
        if anchor > lo:
            x, y = self._integrate(rhs, anchor, lo, y0, rtol, max_step)
            pieces_x.append(x[::-1])
            pieces_y.append(y[::-1])
        if anchor < hi:
            x, y = self._integrate(rhs, anchor, hi, y0, rtol, max_step)
            if pieces_x:
                x, y = x[1:], y[1:]
            pieces_x.append(x)
            pieces_y.append(y)
        return np.concatenate(pieces_x), np.concatenate(pieces_y)

    def _integrate(self, rhs: RhsFunction, x0: float, x1: float, y0: np.ndarray,
                   rtol: float, max_step: float) -> Tuple[np.ndarray, np.ndarray]:
        result = solve_ivp(rhs, (x0, x1), y0, method="RK45", rtol=rtol,
                           atol=rtol * ABSOLUTE_TOLERANCE_RATIO, max_step=max_step)
        if result.status != 0:
            raise StepSizeUnderflowError(f"The integration from {x0!r} to {x1!r} "
                                         f"failed: {result.message}")
        self._logger.debug("Integrated from %g to %g in %d steps.",
                           x0, x1, len(result.t) - 1)
        return result.t, result.y.T

    def _verify(self, system: LinearSystem, x: np.ndarray, values: np.ndarray,
                derivatives: np.ndarray, homogeneous: bool,
                tol: ToleranceConfig) -> float:
        m = len(x)
        flat = values.reshape(m, -1)
        dflat = derivatives.reshape(m, -1)
        real = CubicHermiteSpline(x, flat.real, dflat.real, axis=0)
        imag = CubicHermiteSpline(x, flat.imag, dflat.imag, axis=0)
        mids = (x[1:] + x[:-1]) / 2
        shape = (len(mids),) + values.shape[1:]
        mid_values = (real(mids) + 1j * imag(mids)).reshape(shape)
        mid_derivatives = (real(mids, 1) + 1j * imag(mids, 1)).reshape(shape)
        residuals = system.residual(mids, mid_values, mid_derivatives, homogeneous)
        error = float(residuals.max(initial=0.0))
        if error > tol.ode_verify_tol:
            raise ResidualCheckError(f"The dense output residual {error!r} exceeds "
                                     f"{tol.ode_verify_tol!r}.")
        return error


def _check_determinant(values: np.ndarray, x: np.ndarray) -> None:
    dets = np.abs(np.linalg.det(values))
    scales = np.prod(np.linalg.norm(values, axis=1), axis=-1)
    ratios = dets / np.maximum(scales, np.finfo(float).tiny)
    worst = int(np.argmin(ratios))
    if ratios[worst] <= DET_SCALE_TOL:
        raise IllConditionedError(f"The fundamental matrix is numerically singular "
                                  f"at x = {x[worst]!r}", float(1.0 / max(ratios[worst], 1e-300)))


_default_integrator = OdeIntegrator()


def default_integrator() -> OdeIntegrator:
    """
    Gets the shared integrator used by the module level functions.
    """
    return _default_integrator


def fundamental_matrix(spec: FriedrichsSpec,
                       variant: OperatorVariant = OperatorVariant.MAXIMAL,
                       anchor: Optional[float] = None,
                       interval: Optional[Interval] = None) -> FundamentalMatrix:
    """
    Computes the fundamental matrix with the shared integrator.

    See `OdeIntegrator.fundamental_matrix`.
    """
    return _default_integrator.fundamental_matrix(spec, variant, anchor, interval)


def particular_solution(spec: FriedrichsSpec,
                        forcing: Sequence[ExprNode],
                        variant: OperatorVariant = OperatorVariant.MAXIMAL) -> SampledTrajectory:
    """
    Computes the particular solution with u(a) = 0 with the shared integrator.
    """
    return _default_integrator.particular_solution(spec, forcing, variant)


def solve_initial_value(spec: FriedrichsSpec,
                        variant: OperatorVariant = OperatorVariant.MAXIMAL,
                        initial: Optional[Sequence[complex]] = None,
                        forcing: Optional[Sequence[ExprNode]] = None,
                        interval: Optional[Interval] = None) -> SampledTrajectory:
    return _default_integrator.solve_initial_value(spec, variant, initial, forcing,
                                                   interval)
