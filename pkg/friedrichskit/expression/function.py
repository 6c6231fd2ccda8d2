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

import numpy as np
from frozendict import frozendict


class Function(Enum):
    """The enumeration of the elementary functions of the expression language."""

    EXP = "exp"

    LOG = "log"
    """
    The principal branch of the natural logarithm.
    """

    SIN = "sin"

    COS = "cos"

    SQRT = "sqrt"
    """
    The principal branch of the square root.
    """

    ABS = "abs"

    @property
    def arity(self) -> int:
        return 1

    @staticmethod
    def of_name(name: str) -> Optional["Function"]:
        return FUNCTION_NAMES.get(name)

    def apply(self, z: np.ndarray) -> np.ndarray:
        """
        Applies this function to a complex array.

        :param z: the argument.
        :return: the complex result.
        """
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            match self:
                case Function.EXP:
                    return np.exp(z)
                case Function.LOG:
                    return np.log(z)
                case Function.SIN:
                    return np.sin(z)
                case Function.COS:
                    return np.cos(z)
                case Function.SQRT:
                    return np.sqrt(z)
                case Function.ABS:
                    return np.abs(z).astype(complex)
                case _:
                    raise ValueError(f"Unsupported function: {self}")


FUNCTION_NAMES = frozendict({e.value: e for e in Function})
