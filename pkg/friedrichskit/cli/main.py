# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import argparse
import json
import logging
import sys
from typing import List, NoReturn, Optional, Sequence

from frozendict import frozendict
from numpy.linalg import LinAlgError

from ..common.errors import (
    FriedrichsError,
    InternalInconsistencyError,
    NumericalError,
    UsageError,
)
from ..common.tolerance_config import OVERRIDABLE_FIELDS
from .command_runner import CommandRunner
from .report_renderer import ReportRenderer
from .run_config import Command, OutputFormat, RunConfig

PROGRAM_NAME = "friedrichs-kit"

EXIT_OK = 0

EXIT_VALIDATION = 1

EXIT_NUMERICAL = 2

EXIT_USAGE = 3

EXIT_INTERNAL = EXIT_NUMERICAL
"""
The exit status of an unexpected failure, which shares the status of the
numerical failures.
"""

INTERNAL_ERROR_NAME = "internal error"

EXPECTED_ERRORS = (FriedrichsError, OSError, ValueError, LinAlgError)

EXIT_CODE_NAMES = frozendict({
    EXIT_OK: "ok",
    EXIT_VALIDATION: "validation failure",
    EXIT_NUMERICAL: "numerical failure",
    EXIT_USAGE: "usage error",
})

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# the logger of the current module
logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """
    An argument parser raising `UsageError` instead of exiting the process.
    """

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog=PROGRAM_NAME,
                            description="Classifies the realisations of one "
                                        "dimensional Friedrichs systems and solves "
                                        "their boundary value problems.")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=ArgumentParser)
    helps = {
        Command.VALIDATE: "Check the Friedrichs axioms and report μ and λ",
        Command.KERNELS: "Compute the kernel traces and deficiency indices",
        Command.CLASSIFY: "Classify the realisation of a boundary condition",
        Command.SWEEP_ALPHA: "Classify u(b) = αu(a) over a grid of α",
        Command.DEFECT: "Check that the indices do not depend on C",
        Command.COUNT: "Count the mutually adjoint bijective realisations",
        Command.SOLVE: "Solve the boundary value problem of a realisation",
        Command.REPORT: "Run validate, kernels, count and sweep-alpha",
    }
    for command, text in helps.items():
        cmd = sub.add_parser(command.value, help=text)
        _add_common_arguments(cmd)
        match command:
            case Command.CLASSIFY:
                cmd.add_argument("--bc", required=True,
                                 help="Boundary condition block as JSON or a JSON file")
            case Command.SOLVE:
                cmd.add_argument("--bc", required=True,
                                 help="Boundary condition block as JSON or a JSON file")
                cmd.add_argument("--rhs", required=True,
                                 help='Right hand side components, e.g. "1,sin(x)"')
                cmd.add_argument("--apriori", type=int, default=0, metavar="TRIALS",
                                 help="Check the a priori estimates on random "
                                      "right hand sides")
                cmd.add_argument("--seed", type=int, default=0)
            case Command.SWEEP_ALPHA:
                cmd.add_argument("--alphas", default=None,
                                 help='Comma separated grid, e.g. "-1,0,2,inf"')
            case Command.DEFECT:
                cmd.add_argument("--samples", default=None,
                                 help="JSON file with a list of C fields")
                cmd.add_argument("--count", type=int, default=8,
                                 help="Number of random C fields without --samples")
                cmd.add_argument("--seed", type=int, default=0)
            case _:
                pass
    return parser


def _add_common_arguments(cmd: ArgumentParser) -> None:
    cmd.add_argument("--spec", required=True, help="JSON specification file")
    cmd.add_argument("--format", choices=[f.value for f in OutputFormat],
                     default=OutputFormat.JSON.value)
    cmd.add_argument("--out", default=None, help="Output file")
    cmd.add_argument("--verbose", action="store_true", help="Log debug messages")
    cmd.add_argument("--progress", action="store_true", help="Show progress bars")
    cmd.add_argument("--grid", type=int, default=None,
                     help="Number of sample points of the validation grid")
    cmd.add_argument("--rank-tol", type=float, default=None)
    cmd.add_argument("--psd-tol", type=float, default=None)
    cmd.add_argument("--ode-rtol", type=float, default=None)


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """
    Parses the command line.

    :param argv: the arguments without the program name, by default those of
        the process.
    :return: the configuration of the run.
    :raise UsageError: if the command line is invalid.
    """
    args = build_parser().parse_args(argv)
    overrides = {name: getattr(args, name) for name in OVERRIDABLE_FIELDS
                 if getattr(args, name, None) is not None}
    return RunConfig(command=Command.of(args.command),
                     spec_path=args.spec,
                     boundary_condition=getattr(args, "bc", None),
                     output_format=OutputFormat(args.format),
                     tolerance_overrides=frozendict(overrides),
                     out=args.out,
                     rhs=getattr(args, "rhs", None),
                     apriori_trials=getattr(args, "apriori", 0),
                     samples_path=getattr(args, "samples", None),
                     sample_count=getattr(args, "count", 8),
                     seed=getattr(args, "seed", 0),
                     alphas=getattr(args, "alphas", None),
                     show_progress=args.progress,
                     verbose=args.verbose)


def exit_code_of(error: BaseException) -> int:
    """
    Maps an error to the exit status of the command line tool.
    """
    match error:
        case UsageError() | OSError() | json.JSONDecodeError():
            return EXIT_USAGE
        case NumericalError() | InternalInconsistencyError() | LinAlgError():
            return EXIT_NUMERICAL
        case ValueError():
            return EXIT_VALIDATION
        case _:
            return EXIT_INTERNAL


def run(config: RunConfig) -> int:
    """
    Runs a command and emits its report.

    :param config: the configuration of the run.
    :return: the exit status.
    """
    try:
        result = CommandRunner(config).run()
        text = ReportRenderer(config.output_format).render(result.payload)
        if config.command == Command.SOLVE:
            if result.attachment is not None:
                _write(config.out, result.attachment)
            sys.stdout.write(text)
        elif config.out is not None:
            _write(config.out, text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    except Exception as e:
        code = exit_code_of(e)
        logger.debug("The command failed.", exc_info=True)
        name = EXIT_CODE_NAMES[code] if isinstance(e, EXPECTED_ERRORS) else INTERNAL_ERROR_NAME
        sys.stderr.write(f"{PROGRAM_NAME}: {name}: {e}\n")
        return code


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    """
    The entry point of the console script.
    """
    try:
        config = parse_config(argv)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if config.verbose else logging.WARNING,
                        format=LOG_FORMAT, stream=sys.stderr)
    return run(config)
