# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from ..coefficients.coefficient_field import Interval
from ..expression import ExprNode, differentiate

DEFAULT_EXPRESSION_NODES = 257
"""
The number of equidistant nodes reported by expression trajectories.
"""


class Trajectory(ABC):
    """
    The abstract base class of vector valued functions x ↦ u(x) ∈ field^n on an
    interval.
    """

    def __init__(self, interval: Interval, n: int) -> None:
        self._interval = (float(interval[0]), float(interval[1]))
        self._n = n

    @property
    def interval(self) -> Interval:
        return self._interval

    @property
    def n(self) -> int:
        return self._n

    @abstractmethod
    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        """
        Evaluates this trajectory.

        :param x: a point or a 1-dimensional array of points.
        :return: a complex array of shape (n,) for a scalar point, or of shape
            (len(x), n) for an array of points.
        """

    @property
    @abstractmethod
    def nodes(self) -> np.ndarray:
        """
        The sorted nodes resolving this trajectory, endpoints included.
        """

    def start_value(self) -> np.ndarray:
        return self.evaluate(self._interval[0])

    def end_value(self) -> np.ndarray:
        return self.evaluate(self._interval[1])

    def trace(self) -> np.ndarray:
        """
        Gets the trace vector (u(a), u(b)) of this trajectory.
        """
        return np.concatenate([self.start_value(), self.end_value()])

    def to_records(self, x: Optional[np.ndarray] = None) -> List[Dict[str, Any]]:
        """
        Converts this trajectory into CSV records with the columns x, Re u1,
        Im u1, Re u2, Im u2, ...

        :param x: the sample points, or `None` to use the nodes.
        :return: the list of records.
        """
        x = self.nodes if x is None else np.asarray(x, dtype=float)
        values = self.evaluate(x)
        records = []
        for k, xk in enumerate(x):
            record = {"x": float(xk)}
            for i in range(self._n):
                record[f"Re u{i + 1}"] = float(values[k, i].real)
                record[f"Im u{i + 1}"] = float(values[k, i].imag)
            records.append(record)
        return records


class SmoothTrajectory(Trajectory):
    """
    A trajectory whose derivative is available.
    """

    @abstractmethod
    def derivative(self, x: np.ndarray | float) -> np.ndarray:
        """
        Evaluates the derivative of this trajectory, with the same shape
        conventions as `evaluate`.
        """


class SampledTrajectory(SmoothTrajectory):
    """
    A trajectory given by values and derivatives at the accepted steps of an
    integrator, with cubic Hermite dense output between the steps.
    """

    def __init__(self, x: np.ndarray, values: np.ndarray, derivatives: np.ndarray) -> None:
        """
        Creates a SampledTrajectory.

        :param x: the strictly increasing nodes.
        :param values: the values at the nodes, of shape (len(x), n).
        :param derivatives: the derivatives at the nodes, of shape (len(x), n).
        """
        x = np.asarray(x, dtype=float)
        values = np.asarray(values, dtype=complex)
        derivatives = np.asarray(derivatives, dtype=complex)
        super().__init__((x[0], x[-1]), values.shape[1])
        self._x = x
        self._values = values
        self._derivatives = derivatives
        self._real = CubicHermiteSpline(x, values.real, derivatives.real, axis=0)
        self._imag = CubicHermiteSpline(x, values.imag, derivatives.imag, axis=0)

    @property
    def nodes(self) -> np.ndarray:
        return self._x

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def derivatives(self) -> np.ndarray:
        return self._derivatives

    def start_value(self) -> np.ndarray:
        return self._values[0].copy()

    def end_value(self) -> np.ndarray:
        return self._values[-1].copy()

    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        return self._real(x) + 1j * self._imag(x)

    def derivative(self, x: np.ndarray | float) -> np.ndarray:
        return self._real(x, 1) + 1j * self._imag(x, 1)


class ExpressionTrajectory(SmoothTrajectory):
    """
    A trajectory given in closed form by one expression per component.
    """

    def __init__(self, components: Sequence[ExprNode], interval: Interval,
                 node_count: int = DEFAULT_EXPRESSION_NODES) -> None:
        super().__init__(interval, len(components))
        self._components = tuple(components)
        self._derivative_components = tuple(differentiate(c) for c in self._components)
        self._nodes = np.linspace(self._interval[0], self._interval[1], node_count)

    @property
    def components(self) -> Tuple[ExprNode, ...]:
        return self._components

    @property
    def nodes(self) -> np.ndarray:
        return self._nodes

    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        return _stack(self._components, x)

    def derivative(self, x: np.ndarray | float) -> np.ndarray:
        return _stack(self._derivative_components, x)


def _stack(components: Sequence[ExprNode], x: np.ndarray | float) -> np.ndarray:
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    result = np.stack([c.evaluate(xs) for c in components], axis=-1)
    if np.ndim(x) == 0:
        return result[0]
    return result
