# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import cholesky, polar, solve_triangular

from ..common.errors import NotBijectiveError, WellDefinednessError
from ..common.matrix import Matrix, as_matrix
from ..common.tolerance_config import DEFAULT_CONSISTENCY_TOL, DEFAULT_RANK_TOL
from ..trace.kernel_bases import KernelBases
from ..trace.trace_subspace import TraceSubspace
from ..util.common_utils import matrix_to_json
from ..util.math_utils import (
    compress,
    conj_transpose,
    hermitian_part,
    null_space_basis,
    numerical_rank,
)


def kernel_grams(kb: KernelBases) -> tuple[np.ndarray, np.ndarray]:
    """
    Gets the Gram matrices of the Hilbert structures −⟦·|·⟧ on ker T₁ and ⟦·|·⟧
    on ker T̃₁, in the coordinates of the orthonormal bases of the kernel traces.
    """
    q = kb.form.Q
    return -compress(kb.K.basis, q), compress(kb.K_tilde.basis, q)


@dataclass(frozen=True, eq=False)
class ClassifyingMap:
    """
    The classifying operator U : G̃ → ker T₁ of a realisation, with G̃ ⊆ ker T̃₁,
    satisfying U(p_k̃(u)) = p_k(u) for every u in the domain of the realisation.

    Vectors of ker T₁ and ker T̃₁ are written in the coordinates of the bases
    `kb.K.basis` and `kb.K_tilde.basis`.
    """

    kb: KernelBases

    domain_coords: np.ndarray
    """
    A basis of G̃, of shape (d₋, g), orthonormal for the Gram matrix of ker T̃₁.
    """

    matrix: np.ndarray
    """
    The images of the domain basis under U, of shape (d₊, g).
    """

    @property
    def domain_dim(self) -> int:
        return self.domain_coords.shape[1]

    @property
    def has_full_domain(self) -> bool:
        """
        Whether G̃ = ker T̃₁.
        """
        return self.domain_dim == self.kb.d_minus

    @property
    def domain_basis(self) -> np.ndarray:
        """
        The traces of the domain basis.
        """
        return self.kb.K_tilde.basis @ self.domain_coords

    @property
    def image_basis(self) -> np.ndarray:
        """
        The traces of the images of the domain basis.
        """
        return self.kb.K.basis @ self.matrix

    def isometry_defect(self) -> float:
        """
        Gets ‖U*U − I‖ in the Hilbert structures of the kernels.
        """
        if self.domain_dim == 0:
            return 0.0
        gk, _ = kernel_grams(self.kb)
        product = hermitian_part(conj_transpose(self.matrix) @ gk @ self.matrix)
        return float(np.linalg.norm(product - np.eye(self.domain_dim), 2))

    @property
    def norm_indefinite(self) -> float:
        """
        The operator norm of U for the norms √⟦·|·⟧ on ker T̃₁ and √(−⟦·|·⟧) on
        ker T₁.
        """
        if self.domain_dim == 0:
            return 0.0
        gk, _ = kernel_grams(self.kb)
        product = hermitian_part(conj_transpose(self.matrix) @ gk @ self.matrix)
        return float(np.sqrt(max(0.0, np.linalg.eigvalsh(product)[-1])))

    def is_contraction(self, tol: float = DEFAULT_CONSISTENCY_TOL) -> bool:
        return self.norm_indefinite <= 1 + tol

    def is_isometry(self, tol: float = DEFAULT_CONSISTENCY_TOL) -> bool:
        return self.isometry_defect() <= tol

    def is_unitary(self, tol: float = DEFAULT_CONSISTENCY_TOL,
                   rank_tol: float = DEFAULT_RANK_TOL) -> bool:
        """
        Whether U is an isometry of all of ker T̃₁ onto ker T₁.
        """
        return (self.has_full_domain
                and self.domain_dim == self.kb.d_plus
                and numerical_rank(self.matrix, rank_tol) == self.kb.d_plus
                and self.is_isometry(tol))

    def adjoint_matrix(self) -> np.ndarray:
        """
        Gets the matrix of U* : ker T₁ → G̃ ⊆ ker T̃₁ in kernel coordinates, of
        shape (d₋, d₊).
        """
        gk, _ = kernel_grams(self.kb)
        return self.domain_coords @ conj_transpose(self.matrix) @ gk

    def to_dict(self) -> dict:
        return {
            "domain_dim": self.domain_dim,
            "matrix": matrix_to_json(self.matrix),
            "norm_indefinite": self.norm_indefinite,
        }


def build_U(v: TraceSubspace,
            kb: KernelBases,
            rank_tol: float = DEFAULT_RANK_TOL) -> ClassifyingMap:
    """
    Builds the classifying operator of a realisation.

    :param v: the boundary subspace V of the realisation.
    :param kb: the kernel traces.
    :param rank_tol: the relative singular value threshold.
    :return: the operator U with G̃ = p_k̃(V) and U(p_k̃(t)) = p_k(t) for t ∈ V.
    :raise WellDefinednessError: if V meets ker T₁.
    """
    if v.intersection(kb.K, rank_tol).dim > 0:
        raise WellDefinednessError("The classifying operator is undefined since the "
                                   "boundary subspace meets the kernel of T₁.")
    d_minus = kb.d_minus
    if v.dim == 0:
        return ClassifyingMap(kb, np.zeros((d_minus, 0), dtype=complex),
                              np.zeros((kb.d_plus, 0), dtype=complex))
    pk, pkt = kb.kernel_projectors(rank_tol)
    y = conj_transpose(kb.K.basis) @ (pk @ v.basis)
    z = conj_transpose(kb.K_tilde.basis) @ (pkt @ v.basis)
    _, gkt = kernel_grams(kb)
    # orthonormalise p_k̃(V) for the Gram matrix of ker T̃₁, moving y along
    factor = cholesky(hermitian_part(conj_transpose(z) @ gkt @ z), lower=True)
    inverse_star = conj_transpose(solve_triangular(factor, np.eye(v.dim), lower=True))
    return ClassifyingMap(kb, z @ inverse_star, y @ inverse_star)


def build_V_from_U(u: ClassifyingMap,
                   kb: Optional[KernelBases] = None,
                   rank_tol: float = DEFAULT_RANK_TOL) -> TraceSubspace:
    """
    Builds the boundary subspace V_U = {Uν̃ + ν̃ : ν̃ ∈ G̃} of a classifying
    operator.
    """
    kb = kb or u.kb
    if u.domain_dim == 0:
        return TraceSubspace.zero(kb.effective_dimension)
    return TraceSubspace.span(kb.K.basis @ u.matrix + kb.K_tilde.basis @ u.domain_coords,
                              rank_tol)


def complement_from_U(u: ClassifyingMap,
                      kb: Optional[KernelBases] = None,
                      rank_tol: float = DEFAULT_RANK_TOL) -> TraceSubspace:
    """
    Builds the complement V_U^[⊥] = {μ + U*μ : μ ∈ ker T₁} + (G̃^⊥ ∩ ker T̃₁),
    where G̃^⊥ is the orthogonal complement of the domain in the Hilbert
    structure of ker T̃₁.
    """
    kb = kb or u.kb
    _, gkt = kernel_grams(kb)
    graph = kb.K.basis + kb.K_tilde.basis @ u.adjoint_matrix()
    if u.domain_dim == 0:
        rest = kb.K_tilde.basis
    else:
        rest = kb.K_tilde.basis @ null_space_basis(
            conj_transpose(u.domain_coords) @ gkt, rank_tol)
    columns = np.hstack([graph, rest])
    if columns.shape[1] == 0:
        return TraceSubspace.zero(kb.effective_dimension)
    return TraceSubspace.span(columns, rank_tol)


def unitary_from_bijection(kb: KernelBases,
                           operator: Matrix,
                           rank_tol: float = DEFAULT_RANK_TOL) -> ClassifyingMap:
    """
    Turns a bijection B : ker T̃₁ → ker T₁ into the unitary U = B(B*B)^(-1/2)
    between the Hilbert structures of the kernels.

    :param kb: the kernel traces.
    :param operator: the matrix of B in kernel coordinates, of shape (d₊, d₋).
    :param rank_tol: the relative singular value threshold.
    :return: the unitary classifying operator.
    :raise NotBijectiveError: if B is not a bijection.
    """
    b = as_matrix(operator)
    d = kb.d_plus
    if b.shape != (d, kb.d_minus) or kb.d_plus != kb.d_minus:
        raise NotBijectiveError(f"A bijection between the kernels must be a {d}×{d} "
                                f"matrix, got the shape {b.shape} for the kernel "
                                f"dimensions ({kb.d_plus}, {kb.d_minus}).")
    if d == 0:
        return ClassifyingMap(kb, np.zeros((0, 0), dtype=complex),
                              np.zeros((0, 0), dtype=complex))
    if numerical_rank(b, rank_tol) != d:
        raise NotBijectiveError("The operator between the kernels is singular.")
    gk, gkt = kernel_grams(kb)
    lk = cholesky(gk, lower=True)
    lkt = cholesky(gkt, lower=True)
    # B in coordinates which are orthonormal for both Hilbert structures
    lkt_inverse_star = conj_transpose(solve_triangular(lkt, np.eye(d), lower=True))
    lk_inverse_star = conj_transpose(solve_triangular(lk, np.eye(d), lower=True))
    w, _ = polar(conj_transpose(lk) @ b @ lkt_inverse_star, side="right")
    return ClassifyingMap(kb, lkt_inverse_star, lk_inverse_star @ w)


def mutually_adjoint_realisation(kb: KernelBases,
                                 operator: Optional[Matrix] = None,
                                 rank_tol: float = DEFAULT_RANK_TOL
                                 ) -> tuple[ClassifyingMap, TraceSubspace]:
    """
    Constructs a realisation with V = V^[⊥] from an isomorphism of the kernels.

    :param kb: the kernel traces.
    :param operator: a bijection between the kernels in kernel coordinates, by
        default the identity of the coordinates.
    :param rank_tol: the relative singular value threshold.
    :return: the unitary classifying operator and its boundary subspace.
    :raise WellDefinednessError: if the kernels have different dimensions.
    """
    if kb.d_plus != kb.d_minus:
        raise WellDefinednessError(f"No mutually adjoint realisation exists for the "
                                   f"kernel dimensions ({kb.d_plus}, {kb.d_minus}).")
    operator = np.eye(kb.d_plus, dtype=complex) if operator is None else operator
    u = unitary_from_bijection(kb, operator, rank_tol)
    return u, build_V_from_U(u, kb, rank_tol)
