# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from abc import ABC, abstractmethod

import numpy as np


class ExprNode(ABC):
    """
    The abstract base class of the nodes of expression syntax trees.

    Expressions describe scalar functions of the real variable `x`. They are
    evaluated in complex arithmetic and are immutable, hashable and comparable
    by value.
    """

    @abstractmethod
    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        """
        Evaluates this expression at the specified points.

        :param x: the points, either a scalar or an array.
        :return: a complex array of the same shape as `x`.
        """

    @abstractmethod
    def to_text(self) -> str:
        """
        Prints this expression in fully parenthesized form, which parses back
        to an identical tree.

        :return: the text of this expression.
        """

    @abstractmethod
    def depends_on_x(self) -> bool:
        """
        Tests whether this expression refers to the variable `x`.
        """

    def __str__(self) -> str:
        return self.to_text()
