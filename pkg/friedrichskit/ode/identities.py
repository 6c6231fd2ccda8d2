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

from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..coefficients.parts_decomposition import PartsDecomposition
from ..common.operator_variant import OperatorVariant
from .operator_image import apply_operator
from .quadrature import l2_inner
from .trajectory import SmoothTrajectory


@dataclass(frozen=True)
class IdentityCheck:
    """The two sides of a numerical identity and their difference."""

    volume_term: complex
    """
    The side of the identity given by volume integrals.
    """

    boundary_term: complex
    """
    The side of the identity given by boundary values.
    """

    quadrature_error: float

    @property
    def residual(self) -> float:
        return abs(self.volume_term - self.boundary_term)

    def to_dict(self) -> dict:
        return {
            "residual": self.residual,
            "quadrature_error": self.quadrature_error,
        }


def boundary_pairing(spec: FriedrichsSpec, u: SmoothTrajectory,
                     v: SmoothTrajectory) -> complex:
    """
    Calculates [⟨Au, v⟩] from a to b, i.e. ⟨A(b)u(b), v(b)⟩ − ⟨A(a)u(a), v(a)⟩.
    """
    a_left = spec.A.evaluate(spec.a)
    a_right = spec.A.evaluate(spec.b)
    right = np.vdot(v.end_value(), a_right @ u.end_value())
    left = np.vdot(v.start_value(), a_left @ u.start_value())
    return complex(right - left)


def green_identity(spec: FriedrichsSpec, u: SmoothTrajectory,
                   v: SmoothTrajectory) -> IdentityCheck:
    """
    Evaluates both sides of ⟨T₁u, v⟩ − ⟨u, T̃₁v⟩ = [⟨Au, v⟩] from a to b.
    """
    first = l2_inner(apply_operator(spec, u, OperatorVariant.MAXIMAL), v)
    second = l2_inner(u, apply_operator(spec, v, OperatorVariant.ADJOINT_MAXIMAL))
    return IdentityCheck(volume_term=first.value - second.value,
                         boundary_term=boundary_pairing(spec, u, v),
                         quadrature_error=first.error_estimate + second.error_estimate)


def accretivity_identity(spec: FriedrichsSpec, parts: PartsDecomposition,
                         u: SmoothTrajectory) -> IdentityCheck:
    """
    Evaluates both sides of 2·Re⟨T₁u, u⟩ − 2⟨Su, u⟩ = ⟦u|u⟧.
    """
    image = l2_inner(apply_operator(spec, u, OperatorVariant.MAXIMAL), u)
    symmetric = l2_inner(u, u, weight=parts.S.evaluate)
    return IdentityCheck(volume_term=2 * image.value.real - 2 * symmetric.value,
                         boundary_term=boundary_pairing(spec, u, u),
                         quadrature_error=2 * (image.error_estimate
                                               + symmetric.error_estimate))


def green_identity_residual(spec: FriedrichsSpec, u: SmoothTrajectory,
                            v: SmoothTrajectory) -> float:
    return green_identity(spec, u, v).residual


def accretivity_identity_residual(spec: FriedrichsSpec, parts: PartsDecomposition,
                                  u: SmoothTrajectory) -> float:
    return accretivity_identity(spec, parts, u).residual
