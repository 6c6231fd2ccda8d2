# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from enum import Enum
from typing import Optional

from ..common.scalar_field import ScalarField
from ..trace.kernel_bases import KernelBases


class MutualAdjointCount(Enum):
    """
    The enumeration of the numbers m of realisations with V = V^[⊥], i.e. of
    the mutually adjoint bijective realisation pairs.
    """

    ZERO = "0"

    ONE = "1"

    TWO = "2"

    INFINITE = "infinite"

    def __str__(self) -> str:
        return self.value


def count_from_indices(d_plus: int, d_minus: int,
                       field: ScalarField) -> MutualAdjointCount:
    """
    Counts the mutually adjoint bijective realisations from the dimensions of
    the kernels.

    :param d_plus: the dimension of ker T₁.
    :param d_minus: the dimension of ker T̃₁.
    :param field: the scalar field.
    :return: 0 for different dimensions, 1 for trivial kernels, 2 for real
        one-dimensional kernels, and infinitely many otherwise.
    """
    if d_plus < 0 or d_minus < 0:
        raise ValueError(f"Invalid kernel dimensions: ({d_plus}, {d_minus})")
    if d_plus != d_minus:
        return MutualAdjointCount.ZERO
    if d_plus == 0:
        return MutualAdjointCount.ONE
    if d_plus == 1:
        match field:
            case ScalarField.REAL:
                return MutualAdjointCount.TWO
            case ScalarField.COMPLEX:
                return MutualAdjointCount.INFINITE
            case _:
                raise ValueError(f"Unsupported scalar field: {field}")
    return MutualAdjointCount.INFINITE


def count_mutually_adjoint(kb: KernelBases,
                           field: Optional[ScalarField] = None) -> MutualAdjointCount:
    """
    Counts the mutually adjoint bijective realisations of a specification.

    :param kb: the kernel traces.
    :param field: the scalar field, by default the field of the kernel traces.
    :return: the count.
    """
    return count_from_indices(kb.d_plus, kb.d_minus, field or kb.field)
