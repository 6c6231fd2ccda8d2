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
from scipy.interpolate import CubicHermiteSpline

from ..common.operator_variant import OperatorVariant
from .trajectory import SampledTrajectory


@dataclass(frozen=True, eq=False)
class FundamentalMatrix:
    """
    The fundamental matrix Φ of a homogeneous system σAΦ′ + EΦ = 0 with
    Φ(anchor) = I, sampled at the accepted integrator steps.
    """

    variant: OperatorVariant

    anchor: float

    x: np.ndarray
    """
    The increasing nodes, which cover the integration range and contain the
    anchor.
    """

    values: np.ndarray
    """
    The values Φ(x_k), of shape (len(x), n, n).
    """

    derivatives: np.ndarray
    """
    The derivatives Φ′(x_k), of shape (len(x), n, n).
    """

    error_estimate: float
    """
    The largest relative verification residual of the dense output.
    """

    rtol: float
    """
    The relative tolerance of the accepted integration.
    """

    @property
    def n(self) -> int:
        return self.values.shape[1]

    def _splines(self):
        m, n, _ = self.values.shape
        flat = self.values.reshape(m, n * n)
        dflat = self.derivatives.reshape(m, n * n)
        return (CubicHermiteSpline(self.x, flat.real, dflat.real, axis=0),
                CubicHermiteSpline(self.x, flat.imag, dflat.imag, axis=0))

    def evaluate(self, x: np.ndarray | float) -> np.ndarray:
        """
        Evaluates Φ by cubic Hermite interpolation.

        :param x: a point or a 1-dimensional array of points.
        :return: an array of shape (n, n), or (len(x), n, n).
        """
        real, imag = self._splines()
        flat = real(x) + 1j * imag(x)
        return flat.reshape(np.shape(x) + (self.n, self.n))

    def derivative(self, x: np.ndarray | float) -> np.ndarray:
        real, imag = self._splines()
        flat = real(x, 1) + 1j * imag(x, 1)
        return flat.reshape(np.shape(x) + (self.n, self.n))

    @property
    def start(self) -> np.ndarray:
        """
        The value at the left end of the integration range.
        """
        return self.values[0]

    @property
    def end(self) -> np.ndarray:
        """
        The value at the right end of the integration range.
        """
        return self.values[-1]

    def column(self, j: int) -> SampledTrajectory:
        """
        Gets a column of this matrix as a trajectory, i.e., the solution with
        the initial value e_j at the anchor.
        """
        return SampledTrajectory(self.x, self.values[:, :, j], self.derivatives[:, :, j])
