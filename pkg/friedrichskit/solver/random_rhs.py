# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from typing import Tuple

import numpy as np

from ..common.scalar_field import ScalarField
from ..expression import ExprNode
from ..expression.expression_builder import X, add, cos, mul, number, polynomial, sin, times_i

MAX_DEGREE = 6
"""
The maximum polynomial degree and trigonometric frequency of a random
right hand side.
"""


class RandomRhsGenerator:
    """
    Generates reproducible random right hand sides, whose components are
    combinations of the monomials xᵏ and of sin(kx), cos(kx) for k ≤ 6.
    """

    def __init__(self, seed: int, degree: int = MAX_DEGREE) -> None:
        if not 0 <= degree <= MAX_DEGREE:
            raise ValueError(f"The degree must be in [0, {MAX_DEGREE}]: {degree}")
        self._rng = np.random.default_rng(seed)
        self._degree = degree

    def generate(self, n: int, field: ScalarField = ScalarField.REAL) -> Tuple[ExprNode, ...]:
        """
        Generates the next right hand side.

        :param n: the number of components.
        :param field: the scalar field; complex right hand sides have random
            imaginary parts as well.
        :return: the components.
        """
        components = []
        for _ in range(n):
            component = self._real_component()
            if field == ScalarField.COMPLEX:
                component = add(component, times_i(self._real_component()))
            components.append(component)
        return tuple(components)

    def _real_component(self) -> ExprNode:
        degree = int(self._rng.integers(0, self._degree + 1))
        result = polynomial(np.round(self._rng.normal(size=degree + 1), 6))
        frequencies = int(self._rng.integers(0, self._degree + 1))
        for k in range(1, frequencies + 1):
            a, b = np.round(self._rng.normal(size=2), 6)
            argument = X if k == 1 else mul(number(k), X)
            result = add(result, mul(number(float(a)), sin(argument)))
            result = add(result, mul(number(float(b)), cos(argument)))
        return result


def random_rhs(n: int, seed: int,
               field: ScalarField = ScalarField.REAL,
               degree: int = MAX_DEGREE) -> Tuple[ExprNode, ...]:
    """
    Generates a reproducible random right hand side.
    """
    return RandomRhsGenerator(seed, degree).generate(n, field)
