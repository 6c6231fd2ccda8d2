# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from enum import Enum


class Endpoint(Enum):
    """The enumeration of the endpoints of an interval."""

    LEFT = "left"

    RIGHT = "right"

    @staticmethod
    def of(name: str) -> "Endpoint":
        for endpoint in Endpoint:
            if endpoint.value == name:
                return endpoint
        raise ValueError(f"Unsupported endpoint: {name!r}")

    def select(self, a: float, b: float) -> float:
        """
        Selects this endpoint of the interval (a, b).

        :param a: the left endpoint.
        :param b: the right endpoint.
        :return: `a` for the left endpoint, `b` for the right one.
        """
        match self:
            case Endpoint.LEFT:
                return a
            case Endpoint.RIGHT:
                return b
            case _:
                raise ValueError(f"Unsupported endpoint: {self}")

    def other(self) -> "Endpoint":
        match self:
            case Endpoint.LEFT:
                return Endpoint.RIGHT
            case Endpoint.RIGHT:
                return Endpoint.LEFT
            case _:
                raise ValueError(f"Unsupported endpoint: {self}")
