# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from enum import Enum


class OperatorVariant(Enum):
    """The enumeration of the two maximal operators of a joint pair."""

    MAXIMAL = "T1"
    """
    The maximal operator T₁u = Au′ + Cu.
    """

    ADJOINT_MAXIMAL = "T1~"
    """
    The maximal operator T̃₁u = −Au′ + (C* − A′)u of the formal adjoint.
    """

    def partner(self) -> "OperatorVariant":
        match self:
            case OperatorVariant.MAXIMAL:
                return OperatorVariant.ADJOINT_MAXIMAL
            case OperatorVariant.ADJOINT_MAXIMAL:
                return OperatorVariant.MAXIMAL
            case _:
                raise ValueError(f"Unsupported operator variant: {self}")
