# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import numpy as np

from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..common.operator_variant import OperatorVariant
from .linear_system import leading_sign, zero_order_field
from .trajectory import SmoothTrajectory, Trajectory


class OperatorImage(Trajectory):
    """
    The image T₁u = Au′ + Cu, or T̃₁u = −Au′ + (C* − A′)u, of a smooth trajectory.
    """

    def __init__(self, spec: FriedrichsSpec, u: SmoothTrajectory,
                 variant: OperatorVariant = OperatorVariant.MAXIMAL) -> None:
        super().__init__(u.interval, u.n)
        self._u = u
        self._a_field = spec.A
        self._e_field = zero_order_field(spec, variant)
        self._sign = leading_sign(variant)

    @property
    def nodes(self) -> np.ndarray:
        return self._u.nodes

    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        a = self._a_field.evaluate(xs)
        e = self._e_field.evaluate(xs)
        result = (self._sign * np.einsum("kij,kj->ki", a, self._u.derivative(xs))
                  + np.einsum("kij,kj->ki", e, self._u.evaluate(xs)))
        if np.ndim(x) == 0:
            return result[0]
        return result


def apply_operator(spec: FriedrichsSpec, u: SmoothTrajectory,
                   variant: OperatorVariant = OperatorVariant.MAXIMAL) -> OperatorImage:
    """
    Applies a maximal operator to a smooth trajectory.

    :param spec: the specification.
    :param u: the trajectory.
    :param variant: the maximal operator.
    :return: the image, as a trajectory.
    """
    return OperatorImage(spec, u, variant)
