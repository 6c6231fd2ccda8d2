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


class BinaryOperator(Enum):
    """The enumeration of binary arithmetic operators."""

    ADD = "+"

    SUBTRACT = "-"

    MULTIPLY = "*"

    DIVIDE = "/"

    POWER = "^"

    @property
    def precedence(self) -> int:
        """
        The binding power of this operator; a larger value binds tighter.
        """
        return OPERATOR_PRECEDENCES[self]

    @property
    def right_associative(self) -> bool:
        return self == BinaryOperator.POWER

    @staticmethod
    def of_symbol(symbol: str) -> Optional["BinaryOperator"]:
        return OPERATOR_SYMBOLS.get(symbol)

    def apply(self, lhs: np.ndarray, rhs: np.ndarray) -> np.ndarray:
        """
        Applies this operator to two complex arrays.

        :param lhs: the left hand side operand.
        :param rhs: the right hand side operand.
        :return: the result of the operation.
        """
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            match self:
                case BinaryOperator.ADD:
                    return lhs + rhs
                case BinaryOperator.SUBTRACT:
                    return lhs - rhs
                case BinaryOperator.MULTIPLY:
                    return lhs * rhs
                case BinaryOperator.DIVIDE:
                    return lhs / rhs
                case BinaryOperator.POWER:
                    return _power(lhs, rhs)
                case _:
                    raise ValueError(f"Unsupported binary operator: {self}")


UNARY_MINUS_PRECEDENCE = 30
"""
The binding power of the unary minus: tighter than multiplication, looser than
exponentiation.
"""

OPERATOR_PRECEDENCES = frozendict({
    BinaryOperator.ADD: 10,
    BinaryOperator.SUBTRACT: 10,
    BinaryOperator.MULTIPLY: 20,
    BinaryOperator.DIVIDE: 20,
    BinaryOperator.POWER: 40,
})

OPERATOR_SYMBOLS = frozendict({e.value: e for e in BinaryOperator})


def _power(base: np.ndarray, exponent: np.ndarray) -> np.ndarray:
    # real operands with a real result keep an exactly zero imaginary part
    if not np.any(base.imag) and not np.any(exponent.imag):
        b = base.real
        e = exponent.real
        if np.all((b >= 0) | (e == np.round(e))):
            return np.power(b, e).astype(complex)
    return np.power(base, exponent)
