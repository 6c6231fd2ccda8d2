# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import re
from typing import List

from ..common.errors import ExpressionSyntaxError
from .token import Token, TokenKind

TOKEN_PATTERN = re.compile(r"""
    (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<identifier>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<operator>[-+*/^])
  | (?P<left>\()
  | (?P<right>\))
  | (?P<comma>,)
""", re.VERBOSE)

WHITESPACE_PATTERN = re.compile(r"\s*")

GROUP_KINDS = {
    "number": TokenKind.NUMBER,
    "identifier": TokenKind.IDENTIFIER,
    "operator": TokenKind.OPERATOR,
    "left": TokenKind.LEFT_PAREN,
    "right": TokenKind.RIGHT_PAREN,
    "comma": TokenKind.COMMA,
}


def byte_offset(src: str, index: int) -> int:
    """
    Converts a character index into a byte offset of the UTF-8 encoding.

    :param src: the source text.
    :param index: the character index.
    :return: the byte offset.
    """
    return len(src[:index].encode("utf-8"))


def tokenize(src: str) -> List[Token]:
    """
    Splits an expression into tokens.

    :param src: the source text of the expression.
    :return: the list of tokens, terminated by an END token.
    :raise ExpressionSyntaxError: if the text contains an unexpected character.
    """
    tokens = []
    pos = WHITESPACE_PATTERN.match(src, 0).end()
    while pos < len(src):
        m = TOKEN_PATTERN.match(src, pos)
        if m is None:
            raise ExpressionSyntaxError(f"Unexpected character {src[pos]!r}",
                                        byte_offset(src, pos))
        kind = GROUP_KINDS[m.lastgroup]
        tokens.append(Token(kind, m.group(), byte_offset(src, pos)))
        pos = WHITESPACE_PATTERN.match(src, m.end()).end()
    tokens.append(Token(TokenKind.END, "", byte_offset(src, len(src))))
    return tokens
