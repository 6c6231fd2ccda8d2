# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from typing import List, Union, TypeAlias

import numpy as np


Matrix: TypeAlias = Union[List[List[complex]], List[np.ndarray], np.ndarray]
"""
The type of 2-dimensional complex matrices.
"""

Vector: TypeAlias = Union[List[complex], np.ndarray]
"""
The type of complex vectors, e.g., trace vectors (u(a), u(b)).
"""


def as_matrix(m: Matrix) -> np.ndarray:
    """
    Converts a matrix to a 2-dimensional complex numpy array.

    :param m: the matrix to convert.
    :return: the converted array.
    :raise ValueError: if the argument is not 2-dimensional.
    """
    result = np.asarray(m, dtype=complex)
    if result.ndim != 2:
        raise ValueError(f"Expected a 2-dimensional matrix, got shape {result.shape}")
    return result


def as_vector(v: Vector) -> np.ndarray:
    result = np.asarray(v, dtype=complex)
    if result.ndim != 1:
        raise ValueError(f"Expected a 1-dimensional vector, got shape {result.shape}")
    return result
