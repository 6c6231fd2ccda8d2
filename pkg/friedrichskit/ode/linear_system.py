# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from typing import Optional, Sequence, Tuple

import numpy as np

from ..coefficients.coefficient_field import CoefficientField
from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..common.errors import SingularAError
from ..common.operator_variant import OperatorVariant
from ..expression import ExprNode


def zero_order_field(spec: FriedrichsSpec, variant: OperatorVariant) -> CoefficientField:
    """
    Gets the zero order coefficient E of the maximal operator σAu′ + Eu.

    :param spec: the specification.
    :param variant: the operator variant.
    :return: C for T₁, and C* − A′ for T̃₁.
    """
    match variant:
        case OperatorVariant.MAXIMAL:
            return spec.C
        case OperatorVariant.ADJOINT_MAXIMAL:
            return spec.C.conj_transpose() - spec.A.derivative()
        case _:
            raise ValueError(f"Unsupported operator variant: {variant}")


def leading_sign(variant: OperatorVariant) -> int:
    """
    Gets the sign σ of the leading term σAu′ of the maximal operator.
    """
    match variant:
        case OperatorVariant.MAXIMAL:
            return 1
        case OperatorVariant.ADJOINT_MAXIMAL:
            return -1
        case _:
            raise ValueError(f"Unsupported operator variant: {variant}")


class LinearSystem:
    """
    The first order system σA(x)u′ + E(x)u = f(x) written in the explicit form
    u′ = M(x)u + σA(x)⁻¹f(x) with M = −σA⁻¹E.
    """

    def __init__(self, spec: FriedrichsSpec, variant: OperatorVariant,
                 forcing: Optional[Sequence[ExprNode]] = None,
                 det_tol: float = 1e-10) -> None:
        self._a_field = spec.A
        self._e_field = zero_order_field(spec, variant)
        self._sign = leading_sign(variant)
        self._forcing = tuple(forcing) if forcing is not None else None
        self._det_tol = det_tol
        self._n = spec.n

    @property
    def n(self) -> int:
        return self._n

    @property
    def sign(self) -> int:
        return self._sign

    def coefficients(self, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        Evaluates A and E at an array of points.
        """
        return self._a_field.evaluate(x), self._e_field.evaluate(x)

    def forcing(self, x: np.ndarray) -> np.ndarray:
        """
        Evaluates the right hand side f at an array of points, as an array of
        shape (len(x), n).
        """
        x = np.asarray(x, dtype=float)
        if self._forcing is None:
            return np.zeros((len(x), self._n), dtype=complex)
        return np.stack([f.evaluate(x) for f in self._forcing], axis=-1)

    def _inverse_a(self, x: float) -> Tuple[np.ndarray, np.ndarray]:
        a = self._a_field.evaluate(x)
        if abs(np.linalg.det(a)) <= self._det_tol:
            raise SingularAError(f"A is not invertible at x = {x!r}")
        return a, self._e_field.evaluate(x)

    def matrix_rhs(self, x: float, y: np.ndarray) -> np.ndarray:
        """
        The right hand side of Y′ = MY for the flattened n×n matrix Y.
        """
        a, e = self._inverse_a(x)
        y = y.reshape(self._n, self._n)
        return (-self._sign * np.linalg.solve(a, e @ y)).ravel()

    def vector_rhs(self, x: float, y: np.ndarray) -> np.ndarray:
        """
        The right hand side of u′ = Mu + σA⁻¹f.
        """
        a, e = self._inverse_a(x)
        rhs = -(e @ y)
        if self._forcing is not None:
            rhs = rhs + np.array([f.evaluate(x) for f in self._forcing], dtype=complex)
        return self._sign * np.linalg.solve(a, rhs)

    def residual(self, x: np.ndarray, values: np.ndarray,
                 derivatives: np.ndarray, homogeneous: bool) -> np.ndarray:
        """
        Calculates the relative residual of a sampled solution.

        :param x: the points, of shape (k,).
        :param values: the solution values, of shape (k, n) or (k, n, n).
        :param derivatives: the derivatives, of the same shape as `values`.
        :param homogeneous: whether to ignore the forcing term.
        :return: the relative residuals ‖σAu′ + Eu − f‖ / (‖A‖‖u′‖ + ‖E‖‖u‖ + ‖f‖)
            at each point.
        """
        a, e = self.coefficients(x)
        matrix_valued = values.ndim == 3
        if not matrix_valued:
            values = values[:, :, None]
            derivatives = derivatives[:, :, None]
        residual = self._sign * (a @ derivatives) + e @ values
        scale = (np.linalg.norm(a, axis=(1, 2)) * np.linalg.norm(derivatives, axis=(1, 2))
                 + np.linalg.norm(e, axis=(1, 2)) * np.linalg.norm(values, axis=(1, 2)))
        if not homogeneous and self._forcing is not None:
            f = self.forcing(x)[:, :, None]
            residual = residual - f
            scale = scale + np.linalg.norm(f, axis=(1, 2))
        norms = np.linalg.norm(residual, axis=(1, 2))
        return norms / np.maximum(scale, np.finfo(float).tiny)
