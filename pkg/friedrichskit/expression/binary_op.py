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

from .binary_operator import BinaryOperator
from .expr_node import ExprNode


@dataclass(frozen=True)
class BinaryOp(ExprNode):
    """A binary arithmetic operation."""

    operator: BinaryOperator

    lhs: ExprNode

    rhs: ExprNode

    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        return self.operator.apply(self.lhs.evaluate(x), self.rhs.evaluate(x))

    def to_text(self) -> str:
        return f"({self.lhs.to_text()} {self.operator.value} {self.rhs.to_text()})"

    def depends_on_x(self) -> bool:
        return self.lhs.depends_on_x() or self.rhs.depends_on_x()
