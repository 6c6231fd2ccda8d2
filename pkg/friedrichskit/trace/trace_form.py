# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.linalg import block_diag

from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..common.endpoint import Endpoint
from ..common.scalar_field import ScalarField
from ..util.math_utils import hermitian_part, inertia

TraceCoordinate = Tuple[Endpoint, int]
"""
A coordinate of the trace space: the component of u at one endpoint.
"""


@dataclass(frozen=True, eq=False)
class TraceForm:
    """
    The boundary form ⟦u|v⟧ = ⟨T₁u, v⟩ − ⟨u, T̃₁v⟩ realised on trace vectors
    t = (u(a), u(b)) by the Hermitian matrix Q = blockdiag(−A(a), A(b)), so that
    ⟦u|v⟧ = t_v* Q t_u.

    Coordinates where a degenerate block of A vanishes are deleted; the
    remaining coordinates form the effective trace space.
    """

    Q: np.ndarray
    """
    The Hermitian matrix of the form on the effective trace space.
    """

    n: int

    field: ScalarField

    coordinates: Tuple[TraceCoordinate, ...]
    """
    The coordinates of the effective trace space, in the order of the rows of Q.
    """

    @property
    def dimension(self) -> int:
        """
        The dimension of the effective trace space.
        """
        return len(self.coordinates)

    @property
    def full_dimension(self) -> int:
        return 2 * self.n

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.Q, 2)) if self.Q.size else 0.0

    def pairing(self, tu: np.ndarray, tv: np.ndarray) -> complex:
        """
        Evaluates ⟦u|v⟧ = t_v* Q t_u.
        """
        return complex(np.vdot(tv, self.Q @ tu))

    def signature(self, tol: float) -> Tuple[int, int, int]:
        """
        Gets the numbers of positive, negative and zero eigenvalues of Q.

        :param tol: eigenvalues within `tol` times ‖Q‖ count as zero.
        """
        return inertia(self.Q, tol)

    def coordinate_index(self, endpoint: Endpoint, component: int) -> int:
        return self.coordinates.index((endpoint, component))

    def restrict(self, full_trace: np.ndarray) -> np.ndarray:
        """
        Restricts a full trace vector (u(a), u(b)), or a matrix of such column
        vectors, to the effective coordinates.
        """
        full_trace = np.asarray(full_trace, dtype=complex)
        rows = [self._full_index(c) for c in self.coordinates]
        return full_trace[rows]

    def embed(self, effective: np.ndarray) -> np.ndarray:
        """
        Embeds effective trace vectors into the full trace space, with zeros at
        the deleted coordinates.
        """
        effective = np.asarray(effective, dtype=complex)
        result = np.zeros((self.full_dimension,) + effective.shape[1:], dtype=complex)
        result[[self._full_index(c) for c in self.coordinates]] = effective
        return result

    def _full_index(self, coordinate: TraceCoordinate) -> int:
        return full_index(self.n, coordinate)


def full_index(n: int, coordinate: TraceCoordinate) -> int:
    """
    Gets the index of a coordinate in the full trace vector (u(a), u(b)).
    """
    endpoint, component = coordinate
    return component if endpoint == Endpoint.LEFT else n + component


def build_trace_form(spec: FriedrichsSpec) -> TraceForm:
    """
    Builds the matrix of the boundary form of a specification.

    :param spec: the specification.
    :return: the form Q = blockdiag(−A(a), A(b)), with the coordinates of
        degenerate blocks at their vanishing endpoints removed.
    """
    q_full = hermitian_part(block_diag(-spec.A.evaluate(spec.a), spec.A.evaluate(spec.b)))
    coordinates = []
    for endpoint in (Endpoint.LEFT, Endpoint.RIGHT):
        deleted = spec.degenerate_blocks(endpoint)
        coordinates.extend((endpoint, k) for k in range(spec.n) if k not in deleted)
    rows = [full_index(spec.n, c) for c in coordinates]
    q = q_full[np.ix_(rows, rows)]
    return TraceForm(Q=q, n=spec.n, field=spec.field, coordinates=tuple(coordinates))
