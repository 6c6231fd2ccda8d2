# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from ..common.tolerance_config import DEFAULT_RANK_TOL
from ..util.math_utils import conj_transpose, null_space_basis
from .trace_form import TraceForm
from .trace_subspace import TraceSubspace


def ortho_complement(v: TraceSubspace, qf: TraceForm,
                     rank_tol: float = DEFAULT_RANK_TOL) -> TraceSubspace:
    """
    Calculates the complement V^[⊥] = {t : ⟦t|s⟧ = 0 for all s ∈ V} with respect to
    the boundary form.

    :param v: the subspace V.
    :param qf: the boundary form.
    :param rank_tol: the relative singular value threshold.
    :return: the null space of B*Q, where B is the basis of V.
    """
    if v.dim == 0:
        return TraceSubspace.full(qf.dimension)
    return TraceSubspace(null_space_basis(conj_transpose(v.basis) @ qf.Q, rank_tol))


def is_symmetric(v: TraceSubspace, qf: TraceForm, tol: float = 1e-8,
                 rank_tol: float = DEFAULT_RANK_TOL) -> bool:
    """
    Tests whether V ⊆ V^[⊥].
    """
    return ortho_complement(v, qf, rank_tol).contains_subspace(v, tol)


def is_selfadjoint_type(v: TraceSubspace, qf: TraceForm, tol: float = 1e-8,
                        rank_tol: float = DEFAULT_RANK_TOL) -> bool:
    """
    Tests whether V = V^[⊥].
    """
    return ortho_complement(v, qf, rank_tol).distance(v) <= tol
