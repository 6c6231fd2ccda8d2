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

VARIABLE_NAME = "x"


@dataclass(frozen=True)
class Variable(ExprNode):
    """The independent variable `x`."""

    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        return np.asarray(x, dtype=float).astype(complex)

    def to_text(self) -> str:
        return VARIABLE_NAME

    def depends_on_x(self) -> bool:
        return True
