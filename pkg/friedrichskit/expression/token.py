# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass
from enum import Enum


class TokenKind(Enum):
    """The enumeration of the kinds of expression tokens."""

    NUMBER = "number"

    IDENTIFIER = "identifier"

    OPERATOR = "operator"

    LEFT_PAREN = "("

    RIGHT_PAREN = ")"

    COMMA = ","

    END = "end"


@dataclass(frozen=True)
class Token:
    """A token of an expression."""

    kind: TokenKind

    text: str

    offset: int
    """
    The byte offset of the token in the UTF-8 encoded source text.
    """

    def describe(self) -> str:
        if self.kind == TokenKind.END:
            return "end of input"
        return repr(self.text)
