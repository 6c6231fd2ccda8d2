# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import math
from logging import Logger, getLogger
from typing import List

from frozendict import frozendict

from ..common.errors import (
    ArityError,
    ExpressionSyntaxError,
    UnknownIdentifierError,
)
from .binary_op import BinaryOp
from .binary_operator import BinaryOperator, UNARY_MINUS_PRECEDENCE
from .expr_node import ExprNode
from .function import Function
from .function_call import FunctionCall
from .imaginary_unit import ImaginaryUnit, IMAGINARY_UNIT_NAME
from .number import Number
from .token import Token, TokenKind
from .tokenizer import tokenize
from .unary_minus import UnaryMinus
from .variable import Variable, VARIABLE_NAME

NAMED_CONSTANTS = frozendict({
    "pi": math.pi,
    "e": math.e,
})
"""
The named constants, which are parsed into numeric literals.
"""


class ExpressionParser:
    """
    A precedence climbing parser of coefficient expressions.

    The grammar is the usual precedence grammar: `^` is right associative and
    binds tighter than the unary minus, which binds tighter than `*` and `/`,
    which bind tighter than `+` and `-`.
    """

    def __init__(self) -> None:
        self._logger = getLogger(self.__class__.__name__)
        self._tokens: List[Token] = []
        self._pos = 0

    @property
    def logger(self) -> Logger:
        return self._logger

    def parse(self, src: str) -> ExprNode:
        """
        Parses an expression.

        :param src: the source text.
        :return: the syntax tree.
        :raise ExpressionSyntaxError: if the text is not a valid expression.
        :raise UnknownIdentifierError: if the text refers to an unknown name.
        :raise ArityError: if a function is called with a wrong number of
            arguments.
        """
        self._tokens = tokenize(src)
        self._pos = 0
        if self._peek().kind == TokenKind.END:
            raise ExpressionSyntaxError("Empty expression", self._peek().offset)
        result = self._parse_binary(0)
        token = self._peek()
        if token.kind != TokenKind.END:
            raise ExpressionSyntaxError(f"Unexpected token {token.describe()}",
                                        token.offset)
        self._logger.debug("Parsed %r into %s", src, result)
        return result

    def _peek(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        if token.kind != TokenKind.END:
            self._pos += 1
        return token

    def _expect(self, kind: TokenKind) -> Token:
        token = self._peek()
        if token.kind != kind:
            raise ExpressionSyntaxError(f"Expected {kind.value!r} but found "
                                        f"{token.describe()}", token.offset)
        return self._advance()

    def _peek_binary_operator(self) -> BinaryOperator | None:
        token = self._peek()
        if token.kind != TokenKind.OPERATOR:
            return None
        return BinaryOperator.of_symbol(token.text)

    def _parse_binary(self, min_precedence: int) -> ExprNode:
        left = self._parse_unary()
        while True:
            op = self._peek_binary_operator()
            if op is None or op.precedence < min_precedence:
                return left
            self._advance()
            if op.right_associative:
                right = self._parse_binary(op.precedence)
            else:
                right = self._parse_binary(op.precedence + 1)
            left = BinaryOp(op, left, right)

    def _parse_unary(self) -> ExprNode:
        token = self._peek()
        if token.kind == TokenKind.OPERATOR and token.text == "-":
            self._advance()
            # only tighter operators, i.e. `^`, bind inside the negation
            return UnaryMinus(self._parse_binary(UNARY_MINUS_PRECEDENCE + 1))
        return self._parse_primary()

    def _parse_primary(self) -> ExprNode:
        token = self._advance()
        match token.kind:
            case TokenKind.NUMBER:
                value = float(token.text)
                if not math.isfinite(value):
                    raise ExpressionSyntaxError(f"The number literal {token.text!r} is "
                                                f"out of range", token.offset)
                return Number(value)
            case TokenKind.IDENTIFIER:
                return self._parse_identifier(token)
            case TokenKind.LEFT_PAREN:
                result = self._parse_binary(0)
                self._expect(TokenKind.RIGHT_PAREN)
                return result
            case _:
                raise ExpressionSyntaxError(f"Unexpected token {token.describe()}",
                                            token.offset)

    def _parse_identifier(self, token: Token) -> ExprNode:
        name = token.text
        if name == VARIABLE_NAME:
            return Variable()
        if name == IMAGINARY_UNIT_NAME:
            return ImaginaryUnit()
        if name in NAMED_CONSTANTS:
            return Number(NAMED_CONSTANTS[name])
        function = Function.of_name(name)
        if function is None:
            raise UnknownIdentifierError(f"Unknown identifier {name!r}", token.offset)
        self._expect(TokenKind.LEFT_PAREN)
        arguments = []
        if self._peek().kind != TokenKind.RIGHT_PAREN:
            arguments.append(self._parse_binary(0))
            while self._peek().kind == TokenKind.COMMA:
                self._advance()
                arguments.append(self._parse_binary(0))
        self._expect(TokenKind.RIGHT_PAREN)
        if len(arguments) != function.arity:
            raise ArityError(f"The function {name!r} expects {function.arity} "
                             f"argument(s) but got {len(arguments)}", token.offset)
        return FunctionCall(function, arguments[0])


def parse_expression(src: str) -> ExprNode:
    """
    Parses an expression of the variable `x`.

    :param src: the source text, e.g., "exp(-x)".
    :return: the syntax tree.
    """
    return ExpressionParser().parse(src)
