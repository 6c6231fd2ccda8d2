# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from typing import Sequence

from .binary_op import BinaryOp
from .binary_operator import BinaryOperator
from .expr_node import ExprNode
from .function import Function
from .function_call import FunctionCall
from .imaginary_unit import ImaginaryUnit
from .number import Number
from .unary_minus import UnaryMinus
from .variable import Variable

ZERO = Number(0.0)
"""
The literal 0.
"""

ONE = Number(1.0)
"""
The literal 1.
"""

X = Variable()

I = ImaginaryUnit()


def number(value: float) -> ExprNode:
    """
    Builds the expression of a real constant.

    :param value: the constant, possibly negative.
    :return: a literal, or the negation of a literal for negative values.
    """
    value = float(value)
    if value < 0:
        return UnaryMinus(Number(-value))
    return Number(value)


def neg(operand: ExprNode) -> ExprNode:
    if operand == ZERO:
        return ZERO
    if isinstance(operand, UnaryMinus):
        return operand.operand
    return UnaryMinus(operand)


def add(lhs: ExprNode, rhs: ExprNode) -> ExprNode:
    if lhs == ZERO:
        return rhs
    if rhs == ZERO:
        return lhs
    return BinaryOp(BinaryOperator.ADD, lhs, rhs)


def sub(lhs: ExprNode, rhs: ExprNode) -> ExprNode:
    if rhs == ZERO:
        return lhs
    if lhs == ZERO:
        return neg(rhs)
    return BinaryOp(BinaryOperator.SUBTRACT, lhs, rhs)


def mul(lhs: ExprNode, rhs: ExprNode) -> ExprNode:
    if lhs == ZERO or rhs == ZERO:
        return ZERO
    if lhs == ONE:
        return rhs
    if rhs == ONE:
        return lhs
    return BinaryOp(BinaryOperator.MULTIPLY, lhs, rhs)


def div(lhs: ExprNode, rhs: ExprNode) -> ExprNode:
    if lhs == ZERO:
        return ZERO
    if rhs == ONE:
        return lhs
    return BinaryOp(BinaryOperator.DIVIDE, lhs, rhs)


def power(base: ExprNode, exponent: ExprNode) -> ExprNode:
    if exponent == ZERO:
        return ONE
    if exponent == ONE:
        return base
    return BinaryOp(BinaryOperator.POWER, base, exponent)


def call(function: Function, argument: ExprNode) -> ExprNode:
    return FunctionCall(function, argument)


def exp(argument: ExprNode) -> ExprNode:
    return FunctionCall(Function.EXP, argument)


def log(argument: ExprNode) -> ExprNode:
    return FunctionCall(Function.LOG, argument)


def sin(argument: ExprNode) -> ExprNode:
    return FunctionCall(Function.SIN, argument)


def cos(argument: ExprNode) -> ExprNode:
    return FunctionCall(Function.COS, argument)


def sqrt(argument: ExprNode) -> ExprNode:
    return FunctionCall(Function.SQRT, argument)


def times_i(operand: ExprNode) -> ExprNode:
    return mul(I, operand)


def literal_value(node: ExprNode) -> float | None:
    """
    Gets the value of a real literal or a negated real literal.

    :param node: the expression.
    :return: the value, or `None` if the expression is not a literal.
    """
    if isinstance(node, Number):
        return node.value
    if isinstance(node, UnaryMinus) and isinstance(node.operand, Number):
        return -node.operand.value
    return None


def abs_(argument: ExprNode) -> ExprNode:
    return FunctionCall(Function.ABS, argument)


def polynomial(coefficients: Sequence[float]) -> ExprNode:
    """
    Builds the expression c₀ + c₁x + c₂x² + ... of real coefficients, skipping
    the vanishing terms.
    """
    result = ZERO
    for k, c in enumerate(coefficients):
        if c == 0:
            continue
        term = number(float(c))
        if k > 0:
            term = mul(term, X if k == 1 else power(X, number(k)))
        result = add(result, term)
    return result
