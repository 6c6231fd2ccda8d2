# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..coefficients.coefficient_field import CoefficientField, Interval
from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..coefficients.spec_validator import validate_spec
from ..common.errors import NotHermitianError, SpecValidationError
from ..common.scalar_field import ScalarField
from ..common.tolerance_config import ToleranceConfig
from ..util.math_utils import conj_transpose


@dataclass(frozen=True)
class SymmetricSystem:
    """
    The formally symmetric first order system Lu = −iMu′ + Bu, with M Hermitian
    and B − B* = −iM′.
    """

    M: CoefficientField

    B: CoefficientField

    @property
    def interval(self) -> Interval:
        return self.M.interval

    @property
    def n(self) -> int:
        return self.M.n

    @staticmethod
    def derivative_operator(n: int = 1,
                            interval: Interval = (0.0, 1.0)) -> "SymmetricSystem":
        """
        Builds the momentum operator −i d/dx acting on n components.
        """
        return SymmetricSystem(M=CoefficientField.identity(n, interval),
                               B=CoefficientField.zeros(n, interval))


def symmetric_adapter(system: SymmetricSystem,
                      s1: CoefficientField,
                      s2: CoefficientField,
                      tol: Optional[ToleranceConfig] = None) -> FriedrichsSpec:
    """
    Builds the joint pair T₀ = iL − iS₁ + S₂ and T̃₀ = −iL + iS₁ + S₂ of a
    symmetric system L, i.e. T₀u = Mu′ + (iB − iS₁ + S₂)u, whose symmetric part
    is S₂.

    The kernels of the maximal operators of the pair measure the deficiency
    indices of L, and its realisations with V = V^[⊥] are the self-adjoint
    realisations of L.

    :param system: the symmetric system L.
    :param s1: a bounded Hermitian field S₁.
    :param s2: a bounded Hermitian field S₂ ⪰ μ > 0.
    :param tol: the tolerances of the resulting specification.
    :return: the validated complex specification.
    :raise NotHermitianError: if S₁ or S₂ is not Hermitian.
    :raise NotStrictlyPositiveError: if S₂ is not strictly positive.
    :raise SpecValidationError: if L is not formally symmetric.
    """
    tol = tol or ToleranceConfig()
    interval = system.interval
    if s1.interval != interval or s2.interval != interval or s1.n != system.n \
            or s2.n != system.n:
        raise SpecValidationError("The fields S₁ and S₂ must match the dimension and "
                                  "the interval of the symmetric system.")
    x = np.linspace(interval[0], interval[1], tol.grid)
    for name, values in (("S1", s1.evaluate(x)), ("S2", s2.evaluate(x))):
        _check_hermitian(name, values, x, tol)
    # the symmetry defect B − B* + iM′ must vanish
    defect = (system.B - system.B.conj_transpose() + system.M.derivative().times_i())
    values = np.abs(defect.evaluate(x)).max(axis=(1, 2))
    worst = int(np.argmax(values))
    scale = max(1.0, float(np.abs(system.B.evaluate(x)).max()))
    if values[worst] > tol.hermitian_tol * scale:
        raise SpecValidationError(f"The system −iMu′ + Bu is not formally symmetric "
                                  f"(worst x = {x[worst]!r}).")
    c_field = system.B.times_i() - s1.times_i() + s2
    spec = FriedrichsSpec(field=ScalarField.COMPLEX,
                          interval=interval,
                          n=system.n,
                          A=system.M,
                          C=c_field,
                          tolerances=tol)
    validate_spec(spec)
    return spec


def _check_hermitian(name: str, values: np.ndarray, x: np.ndarray,
                     tol: ToleranceConfig) -> None:
    residuals = np.abs(values - conj_transpose(values)).max(axis=(1, 2))
    worst = int(np.argmax(residuals))
    scale = max(1.0, float(np.abs(values).max()))
    if residuals[worst] > tol.hermitian_tol * scale:
        raise NotHermitianError(name, float(x[worst]), float(residuals[worst]))
