# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass

from .coefficient_field import CoefficientField


@dataclass(frozen=True)
class PartsDecomposition:
    """
    The decomposition T₀ = L₀ + S of a joint pair into a skew part with a
    bounded zero order term and a strictly positive multiplication operator.

    The multiplication operator S(x) = (C + C* − A′)/2 is the symmetric part and
    L₀u = Au′ + Ku with K = (C − C* + A′)/2 is the skew part.
    """

    S: CoefficientField
    """
    The Hermitian symmetric part.
    """

    skew_bounded: CoefficientField
    """
    The bounded zero order term K of the skew part.
    """

    mu: float
    """
    The minimum over the sample grid of the smallest eigenvalue of S(x).
    """

    lambda_bound: float
    """
    The maximum over the sample grid of the spectral norm of S(x).
    """

    mu_certified: float
    """
    The lower bound `mu` reduced by the Lipschitz margin L·h/2, where L is the
    largest sampled norm of S′ and h the grid spacing.
    """

    grid_size: int

    grid_spacing: float

    worst_x: float
    """
    The sample point where the smallest eigenvalue of S is attained.
    """

    def to_dict(self) -> dict:
        return {
            "mu": self.mu,
            "mu_certified": self.mu_certified,
            "lambda": self.lambda_bound,
            "grid_size": self.grid_size,
            "grid_spacing": self.grid_spacing,
            "worst_x": self.worst_x,
        }
