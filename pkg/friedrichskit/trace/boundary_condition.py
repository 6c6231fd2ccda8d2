# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Mapping, Optional

import numpy as np

from ..common.errors import NotScalarError, SpecValidationError
from ..common.tolerance_config import DEFAULT_RANK_TOL
from ..util.common_utils import complex_from_json, complex_to_json
from .trace_form import TraceForm, full_index
from .trace_subspace import TraceSubspace

INFINITY_TOKENS = ("inf", "infinity", "∞")
"""
The strings accepted for the value ∞ of a scalar boundary parameter α.
"""


@dataclass(frozen=True)
class BoundaryAlpha:
    """
    The parameter α of the scalar boundary condition u(b) = αu(a); the value ∞
    stands for the condition u(a) = 0.
    """

    value: complex = 0j

    infinite: bool = False

    @staticmethod
    def of(value: Any) -> "BoundaryAlpha":
        """
        Converts a number, the string "inf" or a `BoundaryAlpha` to a
        `BoundaryAlpha`.
        """
        if isinstance(value, BoundaryAlpha):
            return value
        if isinstance(value, str):
            if value.strip().lower() in INFINITY_TOKENS:
                return BoundaryAlpha(infinite=True)
            raise SpecValidationError(f"Invalid boundary parameter: {value!r}")
        z = complex(value)
        if cmath.isinf(z):
            return BoundaryAlpha(infinite=True)
        if cmath.isnan(z):
            raise SpecValidationError("The boundary parameter must not be NaN.")
        return BoundaryAlpha(value=z)

    @staticmethod
    def from_json(data: Any) -> "BoundaryAlpha":
        if isinstance(data, str):
            return BoundaryAlpha.of(data)
        return BoundaryAlpha.of(complex_from_json(data, "alpha"))

    def to_json(self) -> Any:
        return "inf" if self.infinite else complex_to_json(self.value)

    @property
    def is_real(self) -> bool:
        return self.infinite or self.value.imag == 0

    def adjoint(self) -> "BoundaryAlpha":
        """
        Gets the parameter of the adjoint boundary condition, 1/ᾱ, with the
        conventions 1/0 = ∞ and 1/∞ = 0.
        """
        if self.infinite:
            return BoundaryAlpha(0j)
        if self.value == 0:
            return BoundaryAlpha(infinite=True)
        return BoundaryAlpha(1 / self.value.conjugate())

    def direction(self) -> np.ndarray:
        """
        Gets the trace vector (1, α), or (0, 1) for α = ∞, which spans the
        boundary condition.
        """
        if self.infinite:
            return np.array([0, 1], dtype=complex)
        return np.array([1, self.value], dtype=complex)

    def subspace(self) -> TraceSubspace:
        return TraceSubspace.span(self.direction().reshape(2, 1))

    def cone_value(self, qf: TraceForm) -> float:
        """
        Evaluates the boundary form at the normalised direction, which is
        (A(b)|α|² − A(a))/(1 + |α|²).
        """
        t = self.direction()
        t = t / np.linalg.norm(t)
        return float(qf.pairing(t, t).real)

    def distance(self, other: "BoundaryAlpha") -> float:
        """
        Gets the chordal distance between two parameters, which is finite for ∞.
        """
        if self.infinite and other.infinite:
            return 0.0
        if self.infinite or other.infinite:
            z = other.value if self.infinite else self.value
            return 1 / math.sqrt(1 + abs(z) ** 2)
        z, w = self.value, other.value
        return abs(z - w) / math.sqrt((1 + abs(z) ** 2) * (1 + abs(w) ** 2))

    def __str__(self) -> str:
        if self.infinite:
            return "inf"
        if self.value.imag == 0:
            return repr(self.value.real)
        return repr(self.value)


class BoundaryConditionKind(Enum):
    """The enumeration of the ways to enter a boundary condition."""

    SPAN = "span"
    """
    The span of a list of trace vectors.
    """

    MATRICES = "matrices"
    """
    The solutions of Mₐ·u(a) + M_b·u(b) = 0.
    """

    ALPHA = "alpha"
    """
    The scalar condition u(b) = αu(a).
    """

    @staticmethod
    def of(name: Any) -> "BoundaryConditionKind":
        for kind in BoundaryConditionKind:
            if kind.value == name:
                return kind
        raise SpecValidationError(f"Unsupported boundary condition kind: {name!r}")


@dataclass(frozen=True, eq=False)
class BoundaryCondition:
    """
    A boundary condition, i.e., the subspace V of the trace space of the
    domain W₀ + V of a realisation.
    """

    kind: BoundaryConditionKind

    subspace: TraceSubspace

    alpha: Optional[BoundaryAlpha] = None
    """
    The parameter of a scalar condition, if any.
    """

    source: Dict[str, Any] = field(default_factory=dict)
    """
    The JSON object the condition was parsed from.
    """

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.source)


_KIND_FIELDS = {
    BoundaryConditionKind.SPAN: {"kind", "vectors"},
    BoundaryConditionKind.MATRICES: {"kind", "Ma", "Mb"},
    BoundaryConditionKind.ALPHA: {"kind", "alpha"},
}


def parse_boundary_condition(data: Mapping[str, Any],
                             qf: TraceForm,
                             rank_tol: float = DEFAULT_RANK_TOL) -> BoundaryCondition:
    """
    Parses a boundary condition block.

    The supported blocks are `{"kind": "span", "vectors": [...]}` with full
    trace vectors (u(a), u(b)) of length 2n, `{"kind": "matrices", "Ma": ...,
    "Mb": ...}` for V = {t : Mₐt_a + M_bt_b = 0}, and `{"kind": "alpha",
    "alpha": number | "inf"}` for scalar specifications. Complex entries are
    written as `{"re": ..., "im": ...}`.

    :param data: the JSON object.
    :param qf: the boundary form of the specification.
    :param rank_tol: the relative singular value threshold.
    :return: the boundary condition on the effective trace space.
    :raise SpecValidationError: if the block is malformed.
    :raise NotScalarError: if a scalar condition is given for a system.
    """
    if not isinstance(data, Mapping):
        raise SpecValidationError("A boundary condition must be a JSON object.")
    kind = BoundaryConditionKind.of(data.get("kind"))
    if set(data) != _KIND_FIELDS[kind]:
        raise SpecValidationError(f"A boundary condition of kind '{kind.value}' must "
                                  f"have exactly the fields {sorted(_KIND_FIELDS[kind])}.")
    n = qf.n
    match kind:
        case BoundaryConditionKind.SPAN:
            vectors = _complex_array(data["vectors"], "vectors")
            if vectors.size == 0:
                subspace = TraceSubspace.zero(qf.dimension)
            else:
                if vectors.ndim != 2 or vectors.shape[1] != 2 * n:
                    raise SpecValidationError(f"The trace vectors must have {2 * n} "
                                              f"components.")
                subspace = TraceSubspace.span(qf.restrict(vectors.T), rank_tol)
            return BoundaryCondition(kind, subspace, source=dict(data))
        case BoundaryConditionKind.MATRICES:
            ma = _complex_array(data["Ma"], "Ma")
            mb = _complex_array(data["Mb"], "Mb")
            if ma.ndim != 2 or mb.ndim != 2 or ma.shape[1] != n or mb.shape[1] != n \
                    or ma.shape[0] != mb.shape[0]:
                raise SpecValidationError(f"The matrices Ma and Mb must both have {n} "
                                          f"columns and the same number of rows.")
            m = np.hstack([ma, mb])
            # deleted trace coordinates vanish
            columns = [full_index(n, c) for c in qf.coordinates]
            subspace = TraceSubspace.constraints(m[:, columns], rank_tol)
            return BoundaryCondition(kind, subspace, source=dict(data))
        case BoundaryConditionKind.ALPHA:
            if n != 1 or qf.dimension != 2:
                raise NotScalarError("The condition u(b) = αu(a) requires a scalar "
                                     "specification with two trace coordinates.")
            alpha = BoundaryAlpha.from_json(data["alpha"])
            return BoundaryCondition(kind, alpha.subspace(), alpha=alpha,
                                     source=dict(data))
        case _:
            raise ValueError(f"Unsupported boundary condition kind: {kind}")


def alpha_condition(alpha: Any) -> BoundaryCondition:
    """
    Builds the scalar boundary condition u(b) = αu(a).
    """
    alpha = BoundaryAlpha.of(alpha)
    return BoundaryCondition(BoundaryConditionKind.ALPHA, alpha.subspace(), alpha=alpha,
                             source={"kind": "alpha", "alpha": alpha.to_json()})


def _complex_array(data: Any, name: str) -> np.ndarray:
    if not isinstance(data, list):
        raise SpecValidationError(f"The field {name} must be a list.")
    if len(data) == 0:
        return np.zeros((0, 0), dtype=complex)
    rows = []
    for row in data:
        if not isinstance(row, list):
            raise SpecValidationError(f"The field {name} must be a list of lists.")
        rows.append([complex_from_json(v, name) for v in row])
    if len({len(r) for r in rows}) != 1:
        raise SpecValidationError(f"The rows of {name} must have the same length.")
    return np.array(rows, dtype=complex)
