# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

from frozendict import frozendict

from ..trace.trace_subspace import TraceSubspace
from .classifying_map import ClassifyingMap

CATEGORY_NAMES = ("bijective", "in_w_plus", "signed_boundary_map", "symmetric",
                  "selfadjoint_type", "maximal_nonnegative")
"""
The names of the category flags, in report order.
"""


@dataclass(frozen=True)
class BijectivityCheck:
    """
    Whether V ∔ ker T₁ is the whole trace space, with the ranks involved.
    """

    bijective: bool

    rank: int
    """
    The numerical rank of the stacked bases of V and ker T₁.
    """

    dim_v: int

    d_plus: int

    effective_dimension: int

    intersection_dim: int
    """
    The dimension of V ∩ ker T₁.
    """

    def __bool__(self) -> bool:
        return self.bijective


@dataclass(frozen=True)
class CategoryFlags:
    """The categories of a realisation."""

    bijective: bool

    in_w_plus: bool
    """
    Whether V ⊆ W⁺.
    """

    signed_boundary_map: bool
    """
    Whether V ⊆ W⁺ and V^[⊥] ⊆ W⁻.
    """

    symmetric: bool
    """
    Whether V ⊆ V^[⊥].
    """

    selfadjoint_type: bool
    """
    Whether V = V^[⊥].
    """

    maximal_nonnegative: bool
    """
    Whether V ⊆ W⁺ is not properly contained in another subspace of W⁺.
    """

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in CATEGORY_NAMES}

    def differences(self, other: "CategoryFlags") -> list[str]:
        return [name for name in CATEGORY_NAMES
                if getattr(self, name) != getattr(other, name)]


@dataclass(frozen=True, eq=False)
class RealisationReport:
    """
    The classification of the realisation T₁ restricted to W₀ + V.
    """

    V: TraceSubspace

    V_perp: TraceSubspace
    """
    The complement V^[⊥], the boundary subspace of the adjoint realisation.
    """

    flags: CategoryFlags

    U: Optional[ClassifyingMap] = None
    """
    The classifying operator, if V meets ker T₁ trivially.
    """

    diagnostics: Mapping[str, Any] = field(default_factory=frozendict)

    @property
    def bijective(self) -> bool:
        return self.flags.bijective

    @property
    def in_w_plus(self) -> bool:
        return self.flags.in_w_plus

    @property
    def signed_boundary_map(self) -> bool:
        return self.flags.signed_boundary_map

    @property
    def symmetric(self) -> bool:
        return self.flags.symmetric

    @property
    def selfadjoint_type(self) -> bool:
        return self.flags.selfadjoint_type

    @property
    def maximal_nonnegative(self) -> bool:
        return self.flags.maximal_nonnegative

    def to_dict(self) -> dict:
        result = self.flags.to_dict()
        result["dim_V"] = self.V.dim
        result["dim_V_perp"] = self.V_perp.dim
        result["U"] = self.U.to_dict() if self.U is not None else None
        result["diagnostics"] = dict(self.diagnostics)
        return result
