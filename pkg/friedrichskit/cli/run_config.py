# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping, Optional

from frozendict import frozendict

from ..common.errors import UsageError


class Command(Enum):
    """
    The commands of the command line tool.
    """

    VALIDATE = "validate"

    KERNELS = "kernels"

    CLASSIFY = "classify"

    SWEEP_ALPHA = "sweep-alpha"

    DEFECT = "defect"

    COUNT = "count"

    SOLVE = "solve"

    REPORT = "report"

    @staticmethod
    def of(value: Any) -> "Command":
        if isinstance(value, Command):
            return value
        try:
            return Command(value)
        except ValueError:
            raise UsageError(f"Unknown command: {value!r}") from None


class OutputFormat(Enum):
    """
    The formats of the emitted reports.
    """

    JSON = "json"

    TEXT = "text"


@dataclass(frozen=True)
class RunConfig:
    """
    The configuration of one run of the command line tool.
    """

    command: Command

    spec_path: str
    """
    The path of the JSON specification file.
    """

    boundary_condition: Optional[str] = None
    """
    The boundary condition block, as inline JSON or the path of a JSON file.
    """

    output_format: OutputFormat = OutputFormat.JSON

    tolerance_overrides: Mapping[str, Any] = field(default_factory=frozendict)
    """
    The tolerances given on the command line, which win over those of the
    specification file.
    """

    out: Optional[str] = None
    """
    The output path; the report is written to the standard output if absent.
    For `solve` it is the path of the CSV trajectory.
    """

    rhs: Optional[str] = None
    """
    The comma separated components of the right hand side of `solve`.
    """

    apriori_trials: int = 0
    """
    The number of random right hand sides for the a priori estimates of
    `solve`; zero disables the check.
    """

    samples_path: Optional[str] = None
    """
    The JSON file of bounded parts C for `defect`.
    """

    sample_count: int = 8
    """
    The number of random bounded parts for `defect` without a samples file.
    """

    seed: int = 0

    alphas: Optional[str] = None
    """
    The comma separated grid of `sweep-alpha`, e.g. "-1,0,2,inf".
    """

    show_progress: bool = False

    verbose: bool = False
