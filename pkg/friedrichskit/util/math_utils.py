# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import math
from typing import Tuple

import numpy as np
from scipy.linalg import null_space

from ..common.matrix import Matrix, as_matrix


def hermitian_part(m: np.ndarray) -> np.ndarray:
    """
    Calculates the Hermitian part (M + M*)/2 of a square matrix, or of a stack
    of square matrices along the leading axis.

    :param m: the matrix or the stack of matrices.
    :return: the Hermitian part.
    """
    return (m + np.conj(np.swapaxes(m, -1, -2))) / 2


def conj_transpose(m: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(m, -1, -2))


def numerical_rank(m: Matrix, rank_tol: float) -> int:
    """
    Calculates the numerical rank of a matrix.

    :param m: the matrix.
    :param rank_tol: singular values below `rank_tol` times the largest singular
        value count as zero.
    :return: the numerical rank.
    """
    m = as_matrix(m)
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > rank_tol * s[0]))


def orthonormal_basis(m: Matrix, rank_tol: float) -> np.ndarray:
    """
    Calculates an orthonormal basis of the column space of a matrix.

    :param m: the matrix, whose columns span the subspace.
    :param rank_tol: the relative singular value threshold.
    :return: a matrix with orthonormal columns spanning the column space of `m`;
        it has zero columns if `m` spans the zero subspace.
    """
    m = as_matrix(m)
    rows = m.shape[0]
    if m.size == 0:
        return np.zeros((rows, 0), dtype=complex)
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    if s[0] == 0:
        return np.zeros((rows, 0), dtype=complex)
    rank = int(np.sum(s > rank_tol * s[0]))
    return u[:, :rank]


def null_space_basis(m: Matrix, rank_tol: float) -> np.ndarray:
    """
    Calculates an orthonormal basis of the null space of a matrix.

    :param m: the matrix.
    :param rank_tol: the relative singular value threshold.
    :return: a matrix with orthonormal columns spanning the null space of `m`.
    """
    m = as_matrix(m)
    rows, cols = m.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=complex)
    if rows == 0 or not np.any(m):
        return np.eye(cols, dtype=complex)
    return null_space(m, rcond=rank_tol).astype(complex)


def subspace_distance(b1: Matrix, b2: Matrix) -> float:
    """
    Calculates the largest principal angle between two subspaces given by
    orthonormal bases.

    The sine of the largest angle is the norm of the component of one basis
    orthogonal to the other, which stays accurate for tiny angles. Subspaces of
    different dimensions are at distance π/2.

    :param b1: an orthonormal basis of the first subspace.
    :param b2: an orthonormal basis of the second subspace.
    :return: the largest principal angle, in [0, π/2].
    """
    b1 = as_matrix(b1)
    b2 = as_matrix(b2)
    if b1.shape[0] != b2.shape[0]:
        raise ValueError(f"The subspaces live in different spaces: "
                         f"{b1.shape[0]} != {b2.shape[0]}")
    if b1.shape[1] != b2.shape[1]:
        return math.pi / 2
    if b1.shape[1] == 0:
        return 0.0
    r12 = b2 - b1 @ (conj_transpose(b1) @ b2)
    r21 = b1 - b2 @ (conj_transpose(b2) @ b1)
    sine = max(np.linalg.norm(r12, 2), np.linalg.norm(r21, 2))
    return math.asin(min(1.0, float(sine)))


def subspace_intersection(b1: Matrix, b2: Matrix, rank_tol: float) -> np.ndarray:
    """
    Calculates an orthonormal basis of the intersection of two subspaces.

    :param b1: an orthonormal basis of the first subspace.
    :param b2: an orthonormal basis of the second subspace.
    :param rank_tol: the relative singular value threshold.
    :return: an orthonormal basis of the intersection.
    """
    b1 = as_matrix(b1)
    b2 = as_matrix(b2)
    k1 = b1.shape[1]
    if k1 == 0 or b2.shape[1] == 0:
        return np.zeros((b1.shape[0], 0), dtype=complex)
    coefficients = null_space_basis(np.hstack([b1, -b2]), rank_tol)
    return orthonormal_basis(b1 @ coefficients[:k1, :], rank_tol)


def compress(basis: np.ndarray, q: np.ndarray) -> np.ndarray:
    """
    Compresses a Hermitian form to a subspace.

    :param basis: the basis B of the subspace.
    :param q: the Hermitian matrix Q of the form.
    :return: the Hermitian matrix B*QB.
    """
    return hermitian_part(conj_transpose(basis) @ q @ basis)


def eigenvalue_range(h: np.ndarray) -> Tuple[float, float]:
    """
    Calculates the smallest and the largest eigenvalue of a Hermitian matrix.

    :param h: the Hermitian matrix.
    :return: the pair (smallest, largest); (0, 0) for an empty matrix.
    """
    if h.size == 0:
        return 0.0, 0.0
    w = np.linalg.eigvalsh(hermitian_part(h))
    return float(w[0]), float(w[-1])


def inertia(h: np.ndarray, tol: float) -> Tuple[int, int, int]:
    """
    Calculates the inertia of a Hermitian matrix.

    :param h: the Hermitian matrix.
    :param tol: eigenvalues within `tol` times the spectral norm count as zero.
    :return: the numbers of positive, negative and zero eigenvalues.
    """
    if h.size == 0:
        return 0, 0, 0
    w = np.linalg.eigvalsh(hermitian_part(h))
    threshold = tol * max(1.0, float(np.max(np.abs(w))))
    positive = int(np.sum(w > threshold))
    negative = int(np.sum(w < -threshold))
    return positive, negative, len(w) - positive - negative
