# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass

import numpy as np

from .expr_node import ExprNode


@dataclass(frozen=True)
class UnaryMinus(ExprNode):
    """The negation of an expression."""

    operand: ExprNode

    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        return -self.operand.evaluate(x)

    def to_text(self) -> str:
        return f"(-{self.operand.to_text()})"

    def depends_on_x(self) -> bool:
        return self.operand.depends_on_x()
