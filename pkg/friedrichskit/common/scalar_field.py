# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from enum import Enum


class ScalarField(Enum):
    """The enumeration of the scalar fields of a specification."""

    REAL = "real"
    """
    Real coefficients acting on real valued functions.
    """

    COMPLEX = "complex"
    """
    Complex coefficients acting on complex valued functions.
    """

    @staticmethod
    def of(name: str) -> "ScalarField":
        """
        Gets the scalar field with the specified name.

        :param name: the name of the field, i.e., "real" or "complex".
        :return: the corresponding scalar field.
        :raise ValueError: if the name is unknown.
        """
        for field in ScalarField:
            if field.value == name:
                return field
        raise ValueError(f"Unsupported scalar field: {name!r}")
