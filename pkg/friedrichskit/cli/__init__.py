# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from .command_runner import CommandResult, CommandRunner, parse_alpha_grid, split_components
from .main import (
    EXIT_INTERNAL,
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    build_parser,
    exit_code_of,
    main,
    parse_config,
    run,
)
from .report_renderer import SCHEMA_VERSION, ReportRenderer, to_plain
from .run_config import Command, OutputFormat, RunConfig

__all__ = [
    "Command",
    "CommandResult",
    "CommandRunner",
    "EXIT_INTERNAL",
    "EXIT_NUMERICAL",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VALIDATION",
    "OutputFormat",
    "ReportRenderer",
    "RunConfig",
    "SCHEMA_VERSION",
    "build_parser",
    "exit_code_of",
    "main",
    "parse_alpha_grid",
    "parse_config",
    "run",
    "split_components",
    "to_plain",
]
