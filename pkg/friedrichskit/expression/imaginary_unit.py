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

IMAGINARY_UNIT_NAME = "i"


@dataclass(frozen=True)
class ImaginaryUnit(ExprNode):
    """The imaginary unit literal `i`."""

    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        return np.full(np.shape(x), 1j, dtype=complex)

    def to_text(self) -> str:
        return IMAGINARY_UNIT_NAME

    def depends_on_x(self) -> bool:
        return False
