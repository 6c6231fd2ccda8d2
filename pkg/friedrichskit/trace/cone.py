# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from enum import Enum

import numpy as np

from ..common.tolerance_config import DEFAULT_PSD_TOL
from ..util.math_utils import compress
from .trace_form import TraceForm
from .trace_subspace import TraceSubspace


class Cone(Enum):
    """The enumeration of the positions of a subspace relative to W⁺ and W⁻."""

    NONNEG = "nonneg"
    """
    The subspace lies in W⁺ = {u : ⟦u|u⟧ ≥ 0}.
    """

    NONPOS = "nonpos"
    """
    The subspace lies in W⁻ = {u : ⟦u|u⟧ ≤ 0}.
    """

    NEUTRAL = "neutral"
    """
    The form vanishes on the subspace, which lies in both W⁺ and W⁻.
    """

    NEITHER = "neither"

    def is_nonneg(self) -> bool:
        return self in (Cone.NONNEG, Cone.NEUTRAL)

    def is_nonpos(self) -> bool:
        return self in (Cone.NONPOS, Cone.NEUTRAL)


def compressed_eigenvalues(v: TraceSubspace, qf: TraceForm) -> np.ndarray:
    """
    Gets the eigenvalues of the compression B*QB of the form to a subspace.
    """
    if v.dim == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(compress(v.basis, qf.Q))


def cone_test(v: TraceSubspace, qf: TraceForm, psd_tol: float = DEFAULT_PSD_TOL) -> Cone:
    """
    Classifies a subspace by the signs of the form on it.

    :param v: the subspace.
    :param qf: the boundary form.
    :param psd_tol: eigenvalues within `psd_tol`·‖Q‖ count as zero.
    :return: the cone containing the subspace; the zero subspace is neutral.
    """
    w = compressed_eigenvalues(v, qf)
    threshold = psd_tol * max(qf.norm, np.finfo(float).tiny)
    nonneg = bool(np.all(w >= -threshold))
    nonpos = bool(np.all(w <= threshold))
    if nonneg and nonpos:
        return Cone.NEUTRAL
    if nonneg:
        return Cone.NONNEG
    if nonpos:
        return Cone.NONPOS
    return Cone.NEITHER
