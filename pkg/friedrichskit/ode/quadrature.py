# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.integrate import simpson

from ..common.errors import IntervalMismatchError
from ..common.tolerance_config import DEFAULT_QUAD_ABS, DEFAULT_QUAD_RTOL
from .trajectory import Trajectory

MAX_REFINEMENTS = 10
"""
The maximum number of halvings of the quadrature grid.
"""

INTERVAL_TOL = 1e-12

# the logger of the current module
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadratureResult:
    """The value of an integral and an estimate of its error."""

    value: complex

    error_estimate: float
    """
    The difference between the value and the value computed on a grid of half
    the resolution.
    """


def integrate_on_nodes(integrand: Callable[[np.ndarray], np.ndarray],
                       nodes: np.ndarray,
                       quad_abs: float = DEFAULT_QUAD_ABS,
                       quad_rtol: float = DEFAULT_QUAD_RTOL) -> QuadratureResult:
    """
    Integrates a complex function by composite Simpson sums, halving the grid
    until two successive levels agree.

    :param integrand: the vectorized integrand.
    :param nodes: the sorted initial grid, endpoints included.
    :param quad_abs: the absolute error floor.
    :param quad_rtol: the relative error target.
    :return: the value on the finest grid and the difference to the previous
        level.
    """
    x = np.asarray(nodes, dtype=float)
    previous = _simpson(integrand(x), x)
    difference = np.inf
    for _ in range(MAX_REFINEMENTS):
        mids = (x[1:] + x[:-1]) / 2
        x = np.sort(np.concatenate([x, mids]))
        current = _simpson(integrand(x), x)
        difference = abs(current - previous)
        previous = current
        if difference <= max(quad_abs, quad_rtol * abs(current)):
            break
    else:
        logger.debug("The quadrature stopped at the maximum refinement with "
                     "error estimate %g.", difference)
    return QuadratureResult(complex(previous), float(difference))


def _simpson(y: np.ndarray, x: np.ndarray) -> complex:
    return complex(simpson(y.real, x=x), simpson(y.imag, x=x))


def l2_inner(u: Trajectory,
             v: Trajectory,
             weight: Optional[Callable[[np.ndarray], np.ndarray]] = None,
             quad_abs: float = DEFAULT_QUAD_ABS,
             quad_rtol: float = DEFAULT_QUAD_RTOL) -> QuadratureResult:
    """
    Calculates the L² scalar product ⟨u, v⟩ = ∫ v(x)*u(x) dx, which is linear in
    the first argument and anti-linear in the second.

    :param u: the first trajectory.
    :param v: the second trajectory.
    :param weight: an optional matrix valued weight W, giving ∫ v*Wu dx; it maps
        an array of points to an array of shape (len(x), n, n).
    :param quad_abs: the absolute error floor.
    :param quad_rtol: the relative error target.
    :return: the value and the error estimate.
    :raise IntervalMismatchError: if the trajectories live on different intervals
        or have different dimensions.
    """
    (a1, b1), (a2, b2) = u.interval, v.interval
    scale = max(1.0, abs(a1), abs(b1))
    if abs(a1 - a2) > INTERVAL_TOL * scale or abs(b1 - b2) > INTERVAL_TOL * scale:
        raise IntervalMismatchError(f"The trajectories live on different intervals: "
                                    f"{u.interval} != {v.interval}")
    if u.n != v.n:
        raise IntervalMismatchError(f"The trajectories have different dimensions: "
                                    f"{u.n} != {v.n}")
    nodes = np.union1d(u.nodes, v.nodes)

    def integrand(x: np.ndarray) -> np.ndarray:
        uu = u.evaluate(x)
        if weight is not None:
            uu = np.einsum("kij,kj->ki", weight(x), uu)
        return np.sum(uu * np.conj(v.evaluate(x)), axis=1)

    return integrate_on_nodes(integrand, nodes, quad_abs, quad_rtol)


def l2_norm(u: Trajectory) -> float:
    return float(np.sqrt(max(0.0, l2_inner(u, u).value.real)))
