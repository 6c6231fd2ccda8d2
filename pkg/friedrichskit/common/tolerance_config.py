# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass, fields, replace, asdict
from typing import Any, Dict, Mapping

DEFAULT_GRID = 4096
"""
The default number of sample points used to validate coefficient fields.
"""

DEFAULT_RANK_TOL = 1e-8
"""
The default relative singular value threshold used for rank decisions.
"""

DEFAULT_PSD_TOL = 1e-8
"""
The default relative eigenvalue threshold used for definiteness decisions.
"""

DEFAULT_ODE_RTOL = 1e-10
"""
The default relative tolerance of the adaptive integrator.
"""

DEFAULT_ODE_VERIFY_TOL = 1e-7
"""
The default relative residual allowed for the dense output at verification
points.
"""

DEFAULT_DENSE_INTERVALS = 256
"""
The maximum step of the integrator is the interval length divided by this
number.
"""

DEFAULT_QUAD_ABS = 1e-14
DEFAULT_QUAD_RTOL = 1e-12
DEFAULT_DET_TOL = 1e-10
DEFAULT_SMOOTH_TOL = 1e-4
DEFAULT_HERMITIAN_TOL = 1e-12
DEFAULT_CONSISTENCY_TOL = 1e-8
DEFAULT_SOLVER_TOL = 1e-8
DEFAULT_COND_MAX = 1e12
DEFAULT_ODE_RETRIES = 3

MIN_GRID_PER_UNIT_LENGTH = 64
"""
The minimum number of sample points per unit length of the interval.
"""

OVERRIDABLE_FIELDS = ("grid", "rank_tol", "psd_tol", "ode_rtol")
"""
The names of the tolerances which may be overridden by a specification file.
"""


@dataclass(frozen=True)
class ToleranceConfig:
    """
    The numerical tolerances used by all operations.
    """

    grid: int = DEFAULT_GRID
    """
    The number of sample points of the validation grid.
    """

    rank_tol: float = DEFAULT_RANK_TOL
    """
    Singular values below `rank_tol` times the largest one count as zero.
    """

    psd_tol: float = DEFAULT_PSD_TOL
    """
    Eigenvalues within `psd_tol` times the norm of the form count as zero.
    """

    ode_rtol: float = DEFAULT_ODE_RTOL
    """
    The relative tolerance of the adaptive Runge-Kutta integrator.
    """

    ode_verify_tol: float = DEFAULT_ODE_VERIFY_TOL
    """
    The relative residual allowed for the dense output.
    """

    dense_intervals: int = DEFAULT_DENSE_INTERVALS

    quad_abs: float = DEFAULT_QUAD_ABS

    quad_rtol: float = DEFAULT_QUAD_RTOL

    det_tol: float = DEFAULT_DET_TOL
    """
    The threshold of |det A| below which A counts as singular.
    """

    smooth_tol: float = DEFAULT_SMOOTH_TOL

    hermitian_tol: float = DEFAULT_HERMITIAN_TOL

    consistency_tol: float = DEFAULT_CONSISTENCY_TOL
    """
    The tolerance of the cross checks between independent computations.
    """

    solver_tol: float = DEFAULT_SOLVER_TOL

    cond_max: float = DEFAULT_COND_MAX
    """
    Linear systems with a larger condition number are rejected.
    """

    ode_retries: int = DEFAULT_ODE_RETRIES

    def __post_init__(self) -> None:
        if self.grid < 2:
            raise ValueError(f"The grid must contain at least 2 points: {self.grid}")
        if self.dense_intervals < 1:
            raise ValueError(f"Invalid number of dense intervals: {self.dense_intervals}")
        if self.ode_retries < 1:
            raise ValueError(f"Invalid number of ODE attempts: {self.ode_retries}")
        for f in fields(self):
            value = getattr(self, f.name)
            if f.type in (float, "float") and not value > 0:
                raise ValueError(f"The tolerance {f.name} must be positive: {value}")

    def with_overrides(self, overrides: Mapping[str, Any]) -> "ToleranceConfig":
        """
        Returns a copy of this configuration with some tolerances replaced.

        :param overrides: the tolerances to replace; `None` values are ignored.
        :return: the new configuration.
        """
        values = {k: v for k, v in overrides.items() if v is not None}
        unknown = set(values) - {f.name for f in fields(self)}
        if unknown:
            raise ValueError(f"Unknown tolerances: {sorted(unknown)}")
        return replace(self, **values)

    @staticmethod
    def from_dict(data: Mapping[str, Any],
                  base: "ToleranceConfig | None" = None) -> "ToleranceConfig":
        """
        Parses the `tolerances` object of a specification file.

        :param data: the JSON object.
        :param base: the configuration whose values are overridden.
        :return: the parsed configuration.
        :raise ValueError: if the object has an unknown key or a bad value.
        """
        unknown = set(data) - set(OVERRIDABLE_FIELDS)
        if unknown:
            raise ValueError(f"Unknown tolerance fields: {sorted(unknown)}")
        values: Dict[str, Any] = {}
        for key, value in data.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValueError(f"The tolerance {key} must be a number: {value!r}")
            values[key] = int(value) if key == "grid" else float(value)
        return (base or ToleranceConfig()).with_overrides(values)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
