# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from typing import List

import numpy as np

from ..coefficients.coefficient_field import CoefficientField
from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..common.scalar_field import ScalarField
from ..expression.expression_builder import polynomial

DEFAULT_MARGIN = 0.1
"""
The default lower bound of the symmetric part of the generated samples.
"""


def _poly_product(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    # coefficient arrays of shape (degree + 1, n, n), multiplied as matrices
    result = np.zeros((p.shape[0] + q.shape[0] - 1,) + p.shape[1:], dtype=complex)
    for i in range(p.shape[0]):
        for j in range(q.shape[0]):
            result[i + j] += p[i] @ q[j]
    return result


def _field_of(coefficients: np.ndarray, spec: FriedrichsSpec) -> CoefficientField:
    n = coefficients.shape[1]
    exprs = [[(polynomial(coefficients[:, i, j].real), polynomial(coefficients[:, i, j].imag))
              for j in range(n)] for i in range(n)]
    return CoefficientField.from_exprs(exprs, spec.interval)


def random_bounded_parts(skeleton: FriedrichsSpec,
                         count: int,
                         seed: int,
                         margin: float = DEFAULT_MARGIN) -> List[CoefficientField]:
    """
    Generates admissible bounded parts C for the leading coefficient of a
    specification.

    Each sample is C = H + K + A′/2 with the Hermitian polynomial field
    H = margin·I + P(x)P(x)*, P of degree one, and a constant skew field K, so
    that the symmetric part of the sample is H ⪰ margin.

    :param skeleton: the specification providing A, the interval and the field.
    :param count: the number of samples.
    :param seed: the seed of the random generator.
    :param margin: the lower bound of the symmetric part.
    :return: the samples.
    """
    rng = np.random.default_rng(seed)
    n = skeleton.n
    complex_field = skeleton.field == ScalarField.COMPLEX
    half_derivative = skeleton.A.derivative().scale(0.5)
    samples = []
    for _ in range(count):
        p = rng.normal(size=(2, n, n)) / max(1.0, skeleton.length)
        k = rng.normal(size=(n, n))
        if complex_field:
            p = p + 1j * rng.normal(size=(2, n, n)) / max(1.0, skeleton.length)
            k = k + 1j * rng.normal(size=(n, n))
        h = _poly_product(p, np.conj(np.swapaxes(p, -1, -2)))
        h[0] += margin * np.eye(n)
        skew = (k - np.conj(k.T)) / 2
        h[0] += skew
        samples.append(_field_of(h, skeleton) + half_derivative)
    return samples
