# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from .binary_op import BinaryOp
from .binary_operator import BinaryOperator
from .expr_node import ExprNode
from .expression_builder import (
    ONE,
    ZERO,
    abs_,
    add,
    cos,
    div,
    exp,
    literal_value,
    log,
    mul,
    neg,
    number,
    power,
    sin,
    sqrt,
    sub,
)
from .function import Function
from .function_call import FunctionCall
from .imaginary_unit import ImaginaryUnit
from .number import Number
from .unary_minus import UnaryMinus
from .variable import Variable


def differentiate(node: ExprNode) -> ExprNode:
    """
    Calculates the symbolic derivative of an expression with respect to `x`.

    Only the trivial constants 0 and 1 are folded; constant exponents are
    decremented directly.

    :param node: the expression.
    :return: the derivative.
    """
    match node:
        case Number() | ImaginaryUnit():
            return ZERO
        case Variable():
            return ONE
        case UnaryMinus(operand=u):
            return neg(differentiate(u))
        case BinaryOp(operator=op, lhs=u, rhs=v):
            return _differentiate_binary(op, u, v)
        case FunctionCall(function=f, argument=u):
            return mul(_differentiate_function(f, u), differentiate(u))
        case _:
            raise ValueError(f"Unsupported expression node: {node!r}")


def _differentiate_binary(op: BinaryOperator, u: ExprNode, v: ExprNode) -> ExprNode:
    du = differentiate(u)
    dv = differentiate(v)
    match op:
        case BinaryOperator.ADD:
            return add(du, dv)
        case BinaryOperator.SUBTRACT:
            return sub(du, dv)
        case BinaryOperator.MULTIPLY:
            return add(mul(du, v), mul(u, dv))
        case BinaryOperator.DIVIDE:
            return div(sub(mul(du, v), mul(u, dv)), power(v, number(2)))
        case BinaryOperator.POWER:
            if not v.depends_on_x():
                exponent = literal_value(v)
                decremented = number(exponent - 1) if exponent is not None else sub(v, ONE)
                return mul(mul(v, power(u, decremented)), du)
            return mul(power(u, v), add(mul(dv, log(u)), div(mul(v, du), u)))
        case _:
            raise ValueError(f"Unsupported binary operator: {op}")


def _differentiate_function(f: Function, u: ExprNode) -> ExprNode:
    # the derivative of f evaluated at u; the chain rule factor is applied by
    # the caller
    match f:
        case Function.EXP:
            return exp(u)
        case Function.LOG:
            return div(ONE, u)
        case Function.SIN:
            return cos(u)
        case Function.COS:
            return neg(sin(u))
        case Function.SQRT:
            return div(ONE, mul(number(2), sqrt(u)))
        case Function.ABS:
            # real arguments only: d|u|/du = u / |u|
            return div(u, abs_(u))
        case _:
            raise ValueError(f"Unsupported function: {f}")
