# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from ..common.operator_variant import OperatorVariant
from ..ode.trajectory import SampledTrajectory
from ..util.common_utils import complex_to_json


@dataclass(frozen=True, eq=False)
class BoundaryValueSolution:
    """
    The solution u of T₁u = f with trace in V, or of T̃₁u = f with trace in
    V^[⊥], with its residuals and norms.
    """

    variant: OperatorVariant

    u: SampledTrajectory

    trace: np.ndarray
    """
    The trace vector (u(a), u(b)).
    """

    residual_l2: float
    """
    The L² norm of Tu − f.
    """

    trace_residual: float
    """
    The distance of the trace to the boundary subspace, relative to the norm of
    the trace.
    """

    rhs_norm: float
    """
    The L² norm of f.
    """

    solution_norm: float
    """
    The L² norm of u.
    """

    image_norm: float
    """
    The L² norm of Tu.
    """

    mu: float
    """
    The lower bound of the symmetric part S used by the estimates.
    """

    condition_number: float
    """
    The condition number of the linear system for the initial value.
    """

    @property
    def graph_norm(self) -> float:
        """
        The graph norm ‖u‖ + ‖Tu‖.
        """
        return self.solution_norm + self.image_norm

    @property
    def bound_ratio(self) -> Optional[float]:
        """
        The ratio ‖u‖_T / ‖Tu‖, which is at most 1 + 1/μ for a realisation with
        signed boundary map; `None` for u = 0.
        """
        if self.image_norm == 0:
            return None
        return self.graph_norm / self.image_norm

    @property
    def lower_ratio(self) -> Optional[float]:
        """
        The ratio μ‖u‖ / ‖Tu‖, which is at most 1 for a realisation with signed
        boundary map; `None` for u = 0.
        """
        if self.image_norm == 0:
            return None
        return self.mu * self.solution_norm / self.image_norm

    def to_records(self, x: Optional[np.ndarray] = None) -> List[Dict[str, Any]]:
        return self.u.to_records(x)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "variant": self.variant.value,
            "trace": [complex_to_json(z) for z in self.trace],
            "residual_l2": self.residual_l2,
            "trace_residual": self.trace_residual,
            "rhs_norm": self.rhs_norm,
            "solution_norm": self.solution_norm,
            "image_norm": self.image_norm,
            "mu": self.mu,
            "bound_ratio": self.bound_ratio,
            "condition_number": self.condition_number,
        }
