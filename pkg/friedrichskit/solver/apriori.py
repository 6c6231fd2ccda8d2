# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from .boundary_value_solution import BoundaryValueSolution


@dataclass(frozen=True)
class AprioriTrial:
    """
    The outcome of the a priori estimates for one random right hand side.
    """

    index: int

    solution_norm: float

    image_norm: float

    graph_ratio: Optional[float]
    """
    The ratio ‖u‖_T / ((1 + 1/μ)‖T₁u‖), or `None` for a skipped trial.
    """

    lower_ratio: Optional[float]
    """
    The ratio μ‖u‖ / ‖T₁u‖, or `None` for a skipped trial.
    """

    passed: bool

    @property
    def skipped(self) -> bool:
        """
        Whether the right hand side vanished, so that there is nothing to check.
        """
        return self.graph_ratio is None

    @staticmethod
    def of(index: int, solution: BoundaryValueSolution, mu: float,
           slack: float) -> "AprioriTrial":
        if solution.image_norm == 0:
            return AprioriTrial(index, solution.solution_norm, 0.0, None, None, True)
        graph_ratio = solution.graph_norm / ((1.0 + 1.0 / mu) * solution.image_norm)
        lower_ratio = mu * solution.solution_norm / solution.image_norm
        passed = graph_ratio <= 1.0 + slack and lower_ratio <= 1.0 + slack
        return AprioriTrial(index, solution.solution_norm, solution.image_norm,
                            graph_ratio, lower_ratio, passed)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "solution_norm": self.solution_norm,
            "image_norm": self.image_norm,
            "graph_ratio": self.graph_ratio,
            "lower_ratio": self.lower_ratio,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class AprioriReport:
    """
    The a priori estimates over a family of random right hand sides.
    """

    mu: float

    trials: Tuple[AprioriTrial, ...]

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.trials)

    @property
    def checked(self) -> int:
        return sum(1 for t in self.trials if not t.skipped)

    @property
    def worst_graph_ratio(self) -> Optional[float]:
        ratios = [t.graph_ratio for t in self.trials if not t.skipped]
        return max(ratios) if ratios else None

    @property
    def worst_lower_ratio(self) -> Optional[float]:
        ratios = [t.lower_ratio for t in self.trials if not t.skipped]
        return max(ratios) if ratios else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu": self.mu,
            "passed": self.passed,
            "checked": self.checked,
            "worst_graph_ratio": self.worst_graph_ratio,
            "worst_lower_ratio": self.worst_lower_ratio,
            "trials": [t.to_dict() for t in self.trials],
        }
