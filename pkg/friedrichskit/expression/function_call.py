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
from .function import Function


@dataclass(frozen=True)
class FunctionCall(ExprNode):
    """A call of an elementary function."""

    function: Function

    argument: ExprNode

    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        return self.function.apply(self.argument.evaluate(x))

    def to_text(self) -> str:
        return f"{self.function.value}({self.argument.to_text()})"

    def depends_on_x(self) -> bool:
        return self.argument.depends_on_x()
