# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..common.matrix import Matrix, as_matrix
from ..common.tolerance_config import DEFAULT_RANK_TOL
from ..util.math_utils import (
    conj_transpose,
    null_space_basis,
    orthonormal_basis,
    subspace_distance,
    subspace_intersection,
)


@dataclass(frozen=True, eq=False)
class TraceSubspace:
    """
    A subspace V of the effective trace space, standing for the closed subspace
    W₀ + V of the graph space.
    """

    basis: np.ndarray
    """
    The orthonormal basis, of shape (dimension of the trace space, dim V).
    """

    @property
    def ambient_dimension(self) -> int:
        return self.basis.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def projector(self) -> np.ndarray:
        return self.basis @ conj_transpose(self.basis)

    def residual(self, t: np.ndarray) -> float:
        """
        Gets the distance of a vector to this subspace.
        """
        t = np.asarray(t, dtype=complex)
        return float(np.linalg.norm(t - self.projector() @ t))

    def contains(self, t: np.ndarray, tol: float = 1e-8) -> bool:
        """
        Tests whether a vector lies in this subspace, relative to its norm.
        """
        t = np.asarray(t, dtype=complex)
        return self.residual(t) <= tol * max(1.0, float(np.linalg.norm(t)))

    def contains_subspace(self, other: "TraceSubspace", tol: float = 1e-8) -> bool:
        if other.dim == 0:
            return True
        return float(np.linalg.norm(other.basis - self.projector() @ other.basis, 2)) <= tol

    def distance(self, other: "TraceSubspace") -> float:
        """
        Gets the largest principal angle between this subspace and another one.
        """
        return subspace_distance(self.basis, other.basis)

    def intersection(self, other: "TraceSubspace",
                     rank_tol: float = DEFAULT_RANK_TOL) -> "TraceSubspace":
        return TraceSubspace(subspace_intersection(self.basis, other.basis, rank_tol))

    def sum(self, other: "TraceSubspace",
            rank_tol: float = DEFAULT_RANK_TOL) -> "TraceSubspace":
        return TraceSubspace.span(np.hstack([self.basis, other.basis]), rank_tol)

    @staticmethod
    def span(columns: Matrix, rank_tol: float = DEFAULT_RANK_TOL) -> "TraceSubspace":
        """
        Builds the subspace spanned by the columns of a matrix.
        """
        return TraceSubspace(orthonormal_basis(as_matrix(columns), rank_tol))

    @staticmethod
    def span_vectors(vectors: Sequence[Sequence[complex]], dimension: int,
                     rank_tol: float = DEFAULT_RANK_TOL) -> "TraceSubspace":
        """
        Builds the subspace spanned by a list of vectors.
        """
        if len(vectors) == 0:
            return TraceSubspace.zero(dimension)
        columns = np.asarray(vectors, dtype=complex).T
        if columns.shape[0] != dimension:
            raise ValueError(f"The trace vectors must have {dimension} components.")
        return TraceSubspace.span(columns, rank_tol)

    @staticmethod
    def constraints(m: Matrix, rank_tol: float = DEFAULT_RANK_TOL) -> "TraceSubspace":
        """
        Builds the subspace {t : Mt = 0}.
        """
        return TraceSubspace(null_space_basis(as_matrix(m), rank_tol))

    @staticmethod
    def zero(dimension: int) -> "TraceSubspace":
        return TraceSubspace(np.zeros((dimension, 0), dtype=complex))

    @staticmethod
    def full(dimension: int) -> "TraceSubspace":
        return TraceSubspace(np.eye(dimension, dtype=complex))
