# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import math
from dataclasses import dataclass

import numpy as np

from .expr_node import ExprNode


@dataclass(frozen=True)
class Number(ExprNode):
    """
    A non-negative finite numeric literal.

    Negative constants are represented by a unary minus applied to a literal, so
    that printed expressions parse back to identical trees.
    """

    value: float
    """
    The value of the literal.
    """

    def __post_init__(self) -> None:
        value = float(self.value)
        if not math.isfinite(value) or value < 0:
            raise ValueError(f"A numeric literal must be finite and non-negative: {value}")
        object.__setattr__(self, "value", value)

    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        return np.full(np.shape(x), self.value, dtype=complex)

    def to_text(self) -> str:
        return repr(self.value)

    def depends_on_x(self) -> bool:
        return False
