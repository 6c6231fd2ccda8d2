# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import math
from dataclasses import dataclass
from logging import Logger, getLogger
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.integrate import solve_ivp

from ..coefficients.coefficient_field import CoefficientField
from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..common.endpoint import Endpoint
from ..common.errors import (
    NotScalarError,
    StepSizeUnderflowError,
    UndecidableIntegrabilityError,
)
from ..common.operator_variant import OperatorVariant
from ..common.tolerance_config import ToleranceConfig

MAX_LEVELS = 20
"""
The maximum number of dyadic collars examined before giving up.
"""

DECISION_WINDOW = 5
"""
The number of successive mass ratios which must agree for a decision.
"""

CONVERGENT_RATIO = 0.95
"""
Collar mass ratios at most this value mean geometric decay of the masses.
"""

DIVERGENT_RATIO = 0.999
"""
Collar mass ratios at least this value mean masses bounded below.
"""


@dataclass(frozen=True)
class DirectionEvidence:
    """
    The dyadic collar evidence for the kernel of one maximal operator on a
    scalar block.
    """

    variant: OperatorVariant

    in_l2: bool
    """
    Whether the kernel element is square integrable near the endpoint.
    """

    growth_exponent: float
    """
    The fitted slope of log|u| against log(distance to the endpoint).
    """

    log_masses: Tuple[float, ...]
    """
    The logarithms of the partial L² masses on the successive collars.
    """

    @property
    def ratios(self) -> Tuple[float, ...]:
        return tuple(math.exp(q - p) for p, q in zip(self.log_masses, self.log_masses[1:]))

    def to_dict(self) -> dict:
        return {
            "in_l2": self.in_l2,
            "growth_exponent": self.growth_exponent,
            "levels": len(self.log_masses),
            "ratios": list(self.ratios),
        }


@dataclass(frozen=True)
class SingularBlockReport:
    """
    The square integrability of the kernel elements of a scalar block of A
    which vanishes at one endpoint.
    """

    block: int

    endpoint: Endpoint
    """
    The endpoint where the block vanishes.
    """

    maximal: DirectionEvidence
    """
    The evidence for the kernel of T₁ restricted to the block.
    """

    adjoint: DirectionEvidence
    """
    The evidence for the kernel of T̃₁ restricted to the block.
    """

    @property
    def kernel_in_l2(self) -> bool:
        return self.maximal.in_l2

    @property
    def adjoint_kernel_in_l2(self) -> bool:
        return self.adjoint.in_l2

    def to_dict(self) -> dict:
        return {
            "block": self.block,
            "endpoint": self.endpoint.value,
            "T1": self.maximal.to_dict(),
            "T1~": self.adjoint.to_dict(),
        }


class SingularBlockAnalyzer:
    """
    Decides whether the kernel elements of a scalar block a(x)u′ + c(x)u near a
    zero of a(x) are square integrable.

    The logarithmic derivative of the kernel element is integrated from the
    regular endpoint towards the singular one over the dyadic collars
    {x : 2^-(j+1)·L ≤ |x − endpoint| ≤ 2^-j·L}; the ratios of successive collar
    masses decide the integrability.
    """

    def __init__(self, tol: Optional[ToleranceConfig] = None) -> None:
        self._tol = tol or ToleranceConfig()
        self._logger = getLogger(self.__class__.__name__)

    @property
    def logger(self) -> Logger:
        return self._logger

    def set_logging_level(self, level: int | str) -> None:
        self._logger.setLevel(level)

    def analyze(self, a_field: CoefficientField, c_field: CoefficientField,
                endpoint: Endpoint, block: int = 0) -> SingularBlockReport:
        """
        Analyzes a scalar block.

        :param a_field: the 1×1 leading coefficient a, positive on the open
            interval.
        :param c_field: the 1×1 zero order coefficient c.
        :param endpoint: the endpoint where a vanishes.
        :param block: the index of the block, used in the report.
        :return: the report.
        :raise UndecidableIntegrabilityError: if the evidence is inconclusive
            after the maximum number of collars.
        """
        if a_field.n != 1 or c_field.n != 1:
            raise NotScalarError("A singular block must be a scalar block.")
        da_field = a_field.derivative()

        def a(x):
            return a_field.evaluate(x).real

        def maximal_rate(x: float) -> complex:
            return -c_field.evaluate(x) / a(x)

        def adjoint_rate(x: float) -> complex:
            return (np.conj(c_field.evaluate(x)) - da_field.evaluate(x)) / a(x)

        self._logger.info("Analyzing the singular block %d at the %s endpoint.",
                          block, endpoint.value)
        maximal = self._direction(OperatorVariant.MAXIMAL, maximal_rate,
                                  a_field.interval, endpoint)
        adjoint = self._direction(OperatorVariant.ADJOINT_MAXIMAL, adjoint_rate,
                                  a_field.interval, endpoint)
        return SingularBlockReport(block=block, endpoint=endpoint,
                                   maximal=maximal, adjoint=adjoint)

    def _direction(self, variant: OperatorVariant,
                   rate: Callable[[float], complex],
                   interval: Tuple[float, float],
                   endpoint: Endpoint) -> DirectionEvidence:
        a, b = interval
        length = b - a
        singular = endpoint.select(a, b)
        # points at distance 2^-j·L from the singular endpoint, moving inwards
        direction = 1.0 if endpoint == Endpoint.LEFT else -1.0

        def point(level: int) -> float:
            return singular + direction * length * 2.0 ** (-level)

        log_u = 0.0
        log_masses = []
        log_distances = []
        log_values = []
        for level in range(MAX_LEVELS):
            x0, x1 = point(level), point(level + 1)
            log_mass, increment = self._collar(rate, x0, x1)
            log_masses.append(2 * log_u + log_mass)
            log_u += increment
            log_distances.append(math.log(length * 2.0 ** (-(level + 1))))
            log_values.append(log_u)
            decision = _decide(log_masses)
            if decision is not None:
                slope = float(np.polyfit(log_distances, log_values, 1)[0]) \
                    if len(log_distances) > 1 else 0.0
                self._logger.debug("The kernel of %s is %s L² after %d collars.",
                                   variant.value, "in" if decision else "not in",
                                   len(log_masses))
                return DirectionEvidence(variant=variant, in_l2=decision,
                                         growth_exponent=slope,
                                         log_masses=tuple(log_masses))
        raise UndecidableIntegrabilityError(
            f"The square integrability of the kernel of {variant.value} at the "
            f"{endpoint.value} endpoint is undecidable after {MAX_LEVELS} collars.")

    def _collar(self, rate: Callable[[float], complex],
                x0: float, x1: float) -> Tuple[float, float]:
        # integrates W = Re ∫ rate and the relative mass ∫ exp(2W) over the collar
        # between x0 and x1, with W(x0) = 0
        # the mass is measured in |dx|, so it grows in both directions
        sign = 1.0 if x1 > x0 else -1.0

        def rhs(x: float, y: np.ndarray) -> np.ndarray:
            w = float(np.real(rate(x)))
            return np.array([w, sign * math.exp(2 * y[0])])

        rtol = self._tol.ode_rtol
        result = solve_ivp(rhs,
                           (x0, x1), np.zeros(2), method="RK45",
                           rtol=rtol, atol=rtol * 1e-2)
        if result.status != 0:
            raise StepSizeUnderflowError(f"The collar integration from {x0!r} to "
                                         f"{x1!r} failed: {result.message}")
        increment, mass = result.y[0, -1], result.y[1, -1]
        return math.log(max(mass, np.finfo(float).tiny)), float(increment)


def _decide(log_masses) -> Optional[bool]:
    if len(log_masses) <= DECISION_WINDOW:
        return None
    recent = np.diff(np.asarray(log_masses[-(DECISION_WINDOW + 1):]))
    if np.all(recent <= math.log(CONVERGENT_RATIO)):
        return True
    if np.all(recent >= math.log(DIVERGENT_RATIO)):
        return False
    return None


def analyze_singular_block(a_field: CoefficientField,
                           c_field: CoefficientField,
                           endpoint: Endpoint,
                           block: int = 0,
                           tol: Optional[ToleranceConfig] = None) -> SingularBlockReport:
    """
    Decides the square integrability of the kernel elements of a scalar block
    near an endpoint.

    See `SingularBlockAnalyzer.analyze`.
    """
    return SingularBlockAnalyzer(tol).analyze(a_field, c_field, endpoint, block)


def analyze_spec_block(spec: FriedrichsSpec, block: int,
                       tol: Optional[ToleranceConfig] = None) -> SingularBlockReport:
    """
    Analyzes a flagged block of a degenerate specification.
    """
    flag = spec.flag_of(block)
    if flag is None:
        raise ValueError(f"The block {block} is not flagged as degenerate.")
    return analyze_singular_block(spec.A.block(block), spec.C.block(block),
                                  flag.endpoint, block, tol or spec.tolerances)
