# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from logging import Logger, getLogger
from typing import Optional, Tuple

import numpy as np

from ..common.endpoint import Endpoint
from ..common.errors import (
    DegeneracyStructureError,
    DegenerateOutsideFlagsError,
    InternalInconsistencyError,
    NotHermitianError,
    NotRealError,
    NotSmoothError,
    NotStrictlyPositiveError,
    SpecValidationError,
    UnboundedCoefficientError,
)
from ..common.scalar_field import ScalarField
from ..common.tolerance_config import ToleranceConfig
from ..util.math_utils import conj_transpose, hermitian_part
from .coefficient_field import CoefficientField
from .friedrichs_spec import FriedrichsSpec
from .parts_decomposition import PartsDecomposition

SPLIT_CHECK_SAMPLES = 100
"""
The number of random (x, u) samples of the split identity check.
"""

SPLIT_CHECK_TOL = 1e-10

SPLIT_CHECK_SEED = 20230907


class SpecValidator:
    """
    Validates the Friedrichs axioms of a specification on a sample grid and
    computes the decomposition into the skew part and the symmetric part.
    """

    def __init__(self, tol: Optional[ToleranceConfig] = None) -> None:
        """
        Creates a SpecValidator.

        :param tol: the tolerances, or `None` to use the tolerances of each
            validated specification.
        """
        self._tol = tol
        self._logger = getLogger(self.__class__.__name__)

    @property
    def logger(self) -> Logger:
        return self._logger

    def set_logging_level(self, level: int | str) -> None:
        self._logger.setLevel(level)

    def validate(self, spec: FriedrichsSpec) -> PartsDecomposition:
        """
        Validates a specification.

        :param spec: the specification.
        :return: the decomposition into the skew part and the symmetric part.
        :raise SpecValidationError: if an axiom is violated.
        """
        tol = self._tol or spec.tolerances
        try:
            x = spec.grid(tol)
        except ValueError as e:
            raise SpecValidationError(str(e)) from e
        self._logger.info("Validating a %d×%d specification on %d sample points.",
                          spec.n, spec.n, len(x))
        a_values = self._evaluate_finite(spec.A, "A", x)
        c_values = self._evaluate_finite(spec.C, "C", x)
        da_field = spec.A.derivative()
        da_values = self._evaluate_finite(da_field, "A′", x)
        self._check_real_parts(spec, x, tol)
        self._check_hermitian(a_values, "A", x, tol)
        self._check_smooth(a_values, da_values, x, tol)
        if spec.is_degenerate:
            self._check_degeneracy_structure(spec, a_values, c_values, x, tol)
        else:
            self._check_invertible(a_values, x, tol)
        s_field, skew_field = split_fields(spec.A, spec.C)
        s_values = self._evaluate_finite(s_field, "S", x)
        residual = np.abs(s_values - conj_transpose(s_values)).max()
        scale = 1.0 + np.abs(s_values).max()
        if residual > tol.hermitian_tol * scale:
            worst = int(np.argmax(np.abs(s_values - conj_transpose(s_values)).max(axis=(1, 2))))
            raise NotHermitianError("S", float(x[worst]), float(residual))
        s_values = hermitian_part(s_values)
        eigenvalues = np.linalg.eigvalsh(s_values)
        min_eigenvalues = eigenvalues[:, 0]
        worst = int(np.argmin(min_eigenvalues))
        mu = float(min_eigenvalues[worst])
        if mu <= 0:
            raise NotStrictlyPositiveError(float(x[worst]), mu)
        lambda_bound = float(np.abs(eigenvalues).max())
        h = float(x[1] - x[0])
        ds_values = s_field.derivative().evaluate(x)
        lipschitz = float(np.linalg.norm(ds_values, ord=2, axis=(1, 2)).max())
        mu_certified = mu - lipschitz * h / 2
        if mu_certified <= 0:
            self._logger.warning("The lower bound %g is not certified by the grid "
                                 "resolution %g.", mu, h)
        skew_values = skew_field.evaluate(x)
        self._check_split_identity(a_values, c_values, skew_values, s_values)
        result = PartsDecomposition(S=s_field,
                                    skew_bounded=skew_field,
                                    mu=mu,
                                    lambda_bound=lambda_bound,
                                    mu_certified=mu_certified,
                                    grid_size=len(x),
                                    grid_spacing=h,
                                    worst_x=float(x[worst]))
        self._logger.info("The specification is valid: mu = %g, lambda = %g.",
                          mu, lambda_bound)
        return result

    def _evaluate_finite(self, field: CoefficientField, name: str,
                         x: np.ndarray) -> np.ndarray:
        values = field.evaluate(x)
        bad = ~np.isfinite(values).all(axis=(1, 2))
        if bad.any():
            worst = float(x[int(np.argmax(bad))])
            raise UnboundedCoefficientError(f"The field {name} is not finite", worst)
        return values

    def _check_real_parts(self, spec: FriedrichsSpec, x: np.ndarray,
                          tol: ToleranceConfig) -> None:
        for name, field in (("A", spec.A), ("C", spec.C)):
            re_values, im_values = field.evaluate_parts(x)
            for part, values in (("real", re_values), ("imaginary", im_values)):
                bad = np.abs(values.imag) > tol.hermitian_tol * (1.0 + np.abs(values.real))
                if bad.any():
                    worst = float(x[int(np.argmax(bad.any(axis=(1, 2))))])
                    raise NotRealError(f"The {part} part expressions of {name} must be "
                                       f"real valued", worst)
            if spec.field == ScalarField.REAL:
                bad = np.abs(im_values) > tol.hermitian_tol
                if bad.any():
                    worst = float(x[int(np.argmax(bad.any(axis=(1, 2))))])
                    raise NotRealError(f"The field {name} of a real specification "
                                       f"has an imaginary part", worst)

    def _check_hermitian(self, values: np.ndarray, name: str, x: np.ndarray,
                         tol: ToleranceConfig) -> None:
        residuals = np.abs(values - conj_transpose(values)).max(axis=(1, 2))
        scale = 1.0 + np.abs(values).max()
        worst = int(np.argmax(residuals))
        if residuals[worst] > tol.hermitian_tol * scale:
            raise NotHermitianError(name, float(x[worst]), float(residuals[worst]))

    def _check_smooth(self, a_values: np.ndarray, da_values: np.ndarray,
                      x: np.ndarray, tol: ToleranceConfig) -> None:
        h = x[1] - x[0]
        central = (a_values[2:] - a_values[:-2]) / (2 * h)
        mismatch = np.abs(central - da_values[1:-1]).max(axis=(1, 2))
        scale = 1.0 + np.abs(da_values).max()
        worst = int(np.argmax(mismatch))
        if mismatch[worst] > tol.smooth_tol * scale:
            raise NotSmoothError("A is not continuously differentiable",
                                 float(x[worst + 1]))

    def _check_invertible(self, a_values: np.ndarray, x: np.ndarray,
                          tol: ToleranceConfig) -> None:
        dets = np.abs(np.linalg.det(a_values))
        worst = int(np.argmin(dets))
        if dets[worst] <= tol.det_tol:
            raise DegenerateOutsideFlagsError(float(x[worst]), float(dets[worst]))

    def _check_degeneracy_structure(self, spec: FriedrichsSpec, a_values: np.ndarray,
                                    c_values: np.ndarray, x: np.ndarray,
                                    tol: ToleranceConfig) -> None:
        flagged = spec.degenerate_blocks()
        regular = [k for k in range(spec.n) if k not in flagged]
        for k in flagged:
            others = [j for j in range(spec.n) if j != k]
            for name, values in (("A", a_values), ("C", c_values)):
                coupling = max(np.abs(values[:, k, others]).max(initial=0.0),
                               np.abs(values[:, others, k]).max(initial=0.0))
                if coupling > tol.hermitian_tol:
                    raise DegeneracyStructureError(
                        f"The degenerate block {k} must be decoupled in {name}.")
            diagonal = a_values[:, k, k]
            endpoint = spec.flag_of(k).endpoint
            vanishing = 0 if endpoint == Endpoint.LEFT else -1
            if abs(diagonal[vanishing]) > tol.det_tol:
                raise DegeneracyStructureError(
                    f"The block {k} does not vanish at the {endpoint.value} endpoint.")
            rest = np.delete(diagonal, vanishing)
            if (rest.real <= tol.det_tol).any():
                worst = int(np.argmin(rest.real))
                raise DegenerateOutsideFlagsError(float(np.delete(x, vanishing)[worst]),
                                                  float(abs(rest[worst])))
        if regular:
            sub = a_values[:, regular][:, :, regular]
            self._check_invertible(sub, x, tol)

    def _check_split_identity(self, a_values: np.ndarray, c_values: np.ndarray,
                              skew_values: np.ndarray, s_values: np.ndarray) -> None:
        rng = np.random.default_rng(SPLIT_CHECK_SEED)
        n = a_values.shape[1]
        indices = rng.integers(0, len(a_values), size=SPLIT_CHECK_SAMPLES)
        for k in indices:
            u = rng.normal(size=n) + 1j * rng.normal(size=n)
            du = rng.normal(size=n) + 1j * rng.normal(size=n)
            full = a_values[k] @ du + c_values[k] @ u
            split = (a_values[k] @ du + skew_values[k] @ u) + s_values[k] @ u
            scale = np.abs(c_values[k]).max() + np.abs(a_values[k]).max()
            error = np.linalg.norm(full - split)
            if error > SPLIT_CHECK_TOL * (1.0 + scale) * (1.0 + np.linalg.norm(u)):
                raise InternalInconsistencyError(
                    f"The split identity fails with residual {error!r}.")


def split_fields(a_field: CoefficientField,
                 c_field: CoefficientField) -> Tuple[CoefficientField, CoefficientField]:
    """
    Splits the zero order coefficient into the symmetric part and the bounded
    skew part.

    :param a_field: the leading coefficient A.
    :param c_field: the zero order coefficient C.
    :return: the pair (S, K) with S = (C + C* − A′)/2 and K = (C − C* + A′)/2.
    """
    da = a_field.derivative()
    cc = c_field.conj_transpose()
    s_field = (c_field + cc - da).scale(0.5)
    skew_field = (c_field - cc + da).scale(0.5)
    return s_field, skew_field


def validate_spec(spec: FriedrichsSpec,
                  tol: Optional[ToleranceConfig] = None) -> PartsDecomposition:
    """
    Validates the Friedrichs axioms of a specification.

    :param spec: the specification.
    :param tol: the tolerances, or `None` to use those of the specification.
    :return: the decomposition with the certified lower bound μ and the upper
        bound λ.
    """
    return SpecValidator(tol).validate(spec)


def split_parts(spec: FriedrichsSpec,
                tol: Optional[ToleranceConfig] = None) -> PartsDecomposition:
    """
    Computes the unique decomposition T₀ = L₀ + S of a specification.

    It performs the same checks as `validate_spec`.
    """
    return validate_spec(spec, tol)
