# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import json
import os
from dataclasses import dataclass
from logging import Logger, getLogger
from typing import Any, Dict, List, Optional

from ..classification.alpha_sweep import AlphaSweep
from ..classification.classifier import Classifier
from ..classification.mutual_adjoint_count import count_mutually_adjoint
from ..coefficients.coefficient_field import CoefficientField
from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..coefficients.parts_decomposition import PartsDecomposition
from ..coefficients.spec_validator import validate_spec
from ..common.errors import UsageError
from ..defect.deficiency import deficiency_indices
from ..defect.invariance_harness import InvarianceHarness
from ..defect.sample_generator import random_bounded_parts
from ..solver.bvp_solver import BoundaryValueSolver
from ..trace.boundary_condition import (
    INFINITY_TOKENS,
    BoundaryCondition,
    parse_boundary_condition,
)
from ..trace.kernel_bases import KernelBases, check_decomposition, kernel_traces
from ..util.common_utils import complex_to_json, matrix_to_json, records_to_csv
from .report_renderer import SCHEMA_VERSION
from .run_config import Command, RunConfig


@dataclass(frozen=True)
class CommandResult:
    """
    The report of a command, with the optional CSV attachment of `solve`.
    """

    payload: Dict[str, Any]

    attachment: Optional[str] = None


class CommandRunner:
    """
    Runs the commands of the command line tool and assembles their reports.

    Every command first loads and validates the specification, so that a
    malformed specification never produces a partial report.
    """

    def __init__(self, config: RunConfig) -> None:
        self._config = config
        self._logger = getLogger(self.__class__.__name__)

    @property
    def logger(self) -> Logger:
        return self._logger

    def set_logging_level(self, level: int | str) -> None:
        self._logger.setLevel(level)

    def run(self) -> CommandResult:
        spec = self.load_spec()
        parts = validate_spec(spec)
        self._logger.info("Running the command %s on %s.", self._config.command.value,
                          self._config.spec_path)
        match self._config.command:
            case Command.VALIDATE:
                result = CommandResult(self._validate(spec, parts))
            case Command.KERNELS:
                result = CommandResult(self._kernels(spec))
            case Command.CLASSIFY:
                result = CommandResult(self._classify(spec, parts))
            case Command.SWEEP_ALPHA:
                result = CommandResult(self._sweep_alpha(spec))
            case Command.DEFECT:
                result = CommandResult(self._defect(spec))
            case Command.COUNT:
                result = CommandResult(self._count(spec))
            case Command.SOLVE:
                result = self._solve(spec)
            case Command.REPORT:
                result = CommandResult(self._report(spec, parts))
            case _:
                raise ValueError(f"Unsupported command: {self._config.command}")
        payload = {"schema_version": SCHEMA_VERSION,
                   "command": self._config.command.value}
        payload.update(result.payload)
        return CommandResult(payload, result.attachment)

    def load_spec(self) -> FriedrichsSpec:
        """
        Loads the specification file and applies the tolerance overrides of the
        command line.

        :raise UsageError: if the file cannot be read or is not valid JSON.
        """
        path = self._config.spec_path
        text = _read_file(path, "specification")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise UsageError(f"The specification file {path} is not valid JSON: {e}") from e
        spec = FriedrichsSpec.from_dict(data)
        overrides = dict(self._config.tolerance_overrides)
        if overrides:
            spec = spec.with_tolerances(spec.tolerances.with_overrides(overrides))
        return spec

    def _validate(self, spec: FriedrichsSpec, parts: PartsDecomposition) -> Dict[str, Any]:
        return {
            "valid": True,
            "field": spec.field.value,
            "dimension": spec.n,
            "interval": [spec.a, spec.b],
            "degenerate_blocks": list(spec.degenerate_blocks()),
            "parts": parts.to_dict(),
        }

    def _kernels(self, spec: FriedrichsSpec) -> Dict[str, Any]:
        kb = kernel_traces(spec)
        indices = deficiency_indices(spec)
        return {
            "indices": indices.to_dict(),
            "decomposition": check_decomposition(kb).to_dict(),
            "K": matrix_to_json(kb.k_columns),
            "K_tilde": matrix_to_json(kb.kt_columns),
        }

    def _count(self, spec: FriedrichsSpec) -> Dict[str, Any]:
        kb = kernel_traces(spec)
        return {
            "field": spec.field.value,
            "d_plus": kb.d_plus,
            "d_minus": kb.d_minus,
            "m": str(count_mutually_adjoint(kb, spec.field)),
        }

    def _classify(self, spec: FriedrichsSpec, parts: PartsDecomposition) -> Dict[str, Any]:
        kb = kernel_traces(spec)
        bc = self._boundary_condition(kb)
        report = Classifier(spec.tolerances).classify(bc.subspace, kb, kb.form, parts)
        result = {"boundary_condition": bc.to_dict()}
        result.update(report.to_dict())
        result["alpha_beta"] = (complex_to_json(AlphaSweep.alpha_beta(kb))
                                if spec.n == 1 and not spec.is_degenerate else None)
        result["m_count"] = str(count_mutually_adjoint(kb, spec.field))
        return result

    def _sweep_alpha(self, spec: FriedrichsSpec) -> Dict[str, Any]:
        alphas = (None if self._config.alphas is None
                  else parse_alpha_grid(self._config.alphas))
        sweep = AlphaSweep(spec.tolerances, self._config.show_progress)
        return sweep.sweep(spec, alphas).to_dict()

    def _defect(self, spec: FriedrichsSpec) -> Dict[str, Any]:
        if self._config.samples_path is not None:
            samples = self._load_samples(spec)
        else:
            samples = random_bounded_parts(spec, self._config.sample_count,
                                           self._config.seed)
        harness = InvarianceHarness(spec.tolerances, self._config.show_progress)
        report = harness.run(spec, [spec.C] + samples)
        result = {"deficiency": deficiency_indices(spec).to_dict()}
        result.update(report.to_dict())
        return result

    def _solve(self, spec: FriedrichsSpec) -> CommandResult:
        if not self._config.rhs:
            raise UsageError("The solve command requires the right hand side --rhs.")
        kb = kernel_traces(spec)
        bc = self._boundary_condition(kb)
        solver = BoundaryValueSolver(spec.tolerances, show_progress=self._config.show_progress)
        solution = solver.solve(spec, bc, split_components(self._config.rhs))
        result = {"boundary_condition": bc.to_dict()}
        result.update(solution.to_dict())
        if self._config.apriori_trials > 0:
            apriori = solver.check_apriori(spec, bc, self._config.apriori_trials,
                                           self._config.seed)
            result["apriori"] = apriori.to_dict()
        attachment = None
        if self._config.out is not None:
            attachment = records_to_csv(solution.to_records())
            result["csv"] = self._config.out
        return CommandResult(result, attachment)

    def _report(self, spec: FriedrichsSpec, parts: PartsDecomposition) -> Dict[str, Any]:
        dossier = {
            "validate": self._validate(spec, parts),
            "kernels": self._kernels(spec),
            "count": self._count(spec),
            "sweep_alpha": None,
        }
        if spec.n == 1 and not spec.is_degenerate:
            dossier["sweep_alpha"] = self._sweep_alpha(spec)
        return dossier

    def _boundary_condition(self, kb: KernelBases) -> BoundaryCondition:
        if self._config.boundary_condition is None:
            raise UsageError(f"The {self._config.command.value} command requires a "
                             f"boundary condition --bc.")
        data = read_json_argument(self._config.boundary_condition, "boundary condition")
        if not isinstance(data, dict):
            raise UsageError("The boundary condition must be a JSON object.")
        return parse_boundary_condition(data, kb.form)

    def _load_samples(self, spec: FriedrichsSpec) -> List[CoefficientField]:
        path = self._config.samples_path
        data = read_json_argument(path, "samples", inline=False)
        if isinstance(data, dict):
            if set(data) != {"samples"}:
                raise ValueError("A samples file must be a list or an object with "
                                 "the single field \"samples\".")
            data = data["samples"]
        if not isinstance(data, list):
            raise ValueError("The samples must be a list of C fields.")
        return [CoefficientField.from_json(c, spec.n, spec.interval, f"samples[{i}]")
                for i, c in enumerate(data)]


def _read_file(path: str, what: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise UsageError(f"Cannot read the {what} file {path}: {e.strerror}") from e


def read_json_argument(value: str, what: str, inline: bool = True) -> Any:
    """
    Reads a JSON argument given inline or as the path of a file.

    :param value: the inline JSON text or the path.
    :param what: the name of the argument, used in error messages.
    :param inline: whether inline JSON is accepted.
    :return: the parsed JSON value.
    :raise UsageError: if the file cannot be read or the text is not valid JSON.
    """
    if not inline or os.path.isfile(value):
        text = _read_file(value, what)
    else:
        text = value
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"The {what} is not valid JSON: {e}") from e


def split_components(text: str) -> List[str]:
    """
    Splits a comma separated list of expressions at the commas outside
    parentheses.
    """
    components = []
    depth = 0
    start = 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            components.append(text[start:k].strip())
            start = k + 1
    components.append(text[start:].strip())
    if any(c == "" for c in components):
        raise UsageError(f"Empty component in the expression list: {text!r}")
    return components


def parse_alpha_grid(text: str) -> List[Any]:
    """
    Parses a comma separated grid of boundary parameters such as "-1,0.5,inf"
    or "1+2j".
    """
    result: List[Any] = []
    for token in split_components(text):
        if token.lower() in INFINITY_TOKENS:
            result.append("inf")
            continue
        try:
            result.append(complex(token.replace(" ", "")))
        except ValueError:
            raise UsageError(f"Invalid boundary parameter: {token!r}") from None
    return result
