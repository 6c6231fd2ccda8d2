# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from logging import Logger, getLogger
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from ..classification.classifier import Classifier
from ..coefficients.coefficient_field import CoefficientField
from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..coefficients.spec_validator import validate_spec
from ..common.errors import IntervalMismatchError
from ..common.tolerance_config import ToleranceConfig
from ..trace.kernel_bases import kernel_traces
from ..trace.trace_subspace import TraceSubspace
from ..util.common_utils import get_iterable_or_tqdm, get_thread_count
from .deficiency import deficiency_indices

DEFAULT_LAMBDAS = (0.0, 0.25, 0.5, 0.75, 1.0)
"""
The default interpolation parameters of a convex path between bounded parts.
"""

MIN_SIZE_TO_SHOW_PROGRESS = 4

RowT = TypeVar("RowT")


class Verdict(Enum):
    """The enumeration of the verdicts of the invariance harness."""

    PASS = "PASS"

    FAIL = "FAIL"


@dataclass(frozen=True)
class InvarianceRow:
    """The deficiency indices for one bounded part."""

    index: int

    label: str
    """
    The JSON text of the bounded part.
    """

    d_plus: Optional[int] = None

    d_minus: Optional[int] = None

    mu: Optional[float] = None
    """
    The lower bound of the symmetric part.
    """

    error: Optional[str] = None
    """
    The validation error which excluded the sample, if any.
    """

    @property
    def excluded(self) -> bool:
        return self.error is not None

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "C": self.label,
            "d_plus": self.d_plus,
            "d_minus": self.d_minus,
            "mu": self.mu,
            "excluded": self.excluded,
            "error": self.error,
        }


@dataclass(frozen=True)
class InvarianceReport:
    """The table of deficiency indices over the samples, with the verdict."""

    rows: Tuple[InvarianceRow, ...]

    @property
    def included(self) -> List[InvarianceRow]:
        return [r for r in self.rows if not r.excluded]

    @property
    def indices(self) -> Optional[Tuple[int, int]]:
        """
        The common indices of the included samples, if they agree.
        """
        values = {(r.d_plus, r.d_minus) for r in self.included}
        return values.pop() if len(values) == 1 else None

    @property
    def verdict(self) -> Verdict:
        return Verdict.PASS if self.indices is not None else Verdict.FAIL

    def to_dict(self) -> dict:
        indices = self.indices
        return {
            "verdict": self.verdict.value,
            "indices": list(indices) if indices is not None else None,
            "rows": [r.to_dict() for r in self.rows],
        }


@dataclass(frozen=True)
class RobustnessRow:
    """The classification of one boundary condition for one bounded part."""

    index: int

    label: str

    bijective: Optional[bool] = None

    signed_boundary_map: Optional[bool] = None

    error: Optional[str] = None

    @property
    def excluded(self) -> bool:
        return self.error is not None

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "C": self.label,
            "bijective": self.bijective,
            "signed_boundary_map": self.signed_boundary_map,
            "excluded": self.excluded,
            "error": self.error,
        }


@dataclass(frozen=True)
class RobustnessReport:
    """
    Whether a fixed boundary condition gives a bijective realisation for each
    of many bounded parts.
    """

    rows: Tuple[RobustnessRow, ...]

    @property
    def all_bijective(self) -> bool:
        return all(r.bijective for r in self.rows if not r.excluded)

    def to_dict(self) -> dict:
        return {
            "all_bijective": self.all_bijective,
            "rows": [r.to_dict() for r in self.rows],
        }


def field_label(c: CoefficientField) -> str:
    return json.dumps(c.to_json(), ensure_ascii=False, separators=(",", ":"))


def convex_path(c: CoefficientField,
                c_prime: CoefficientField,
                lambdas: Sequence[float] = DEFAULT_LAMBDAS) -> List[CoefficientField]:
    """
    Builds the interpolants λC + (1 − λ)C′ of two bounded parts.
    """
    if c.n != c_prime.n or c.interval != c_prime.interval:
        raise IntervalMismatchError("The bounded parts of a convex path must have the "
                                    "same dimension and interval.")
    return [c.scale(lam) + c_prime.scale(1 - lam) for lam in lambdas]


class InvarianceHarness:
    """
    Computes the deficiency indices of a specification for many bounded parts C
    with the same leading coefficient A.

    Samples failing validation are excluded from the verdict and reported.
    """

    def __init__(self,
                 tol: Optional[ToleranceConfig] = None,
                 show_progress: bool = False,
                 max_workers: Optional[int] = None) -> None:
        self._tol = tol
        self._show_progress = show_progress
        self._max_workers = max_workers
        self._logger = getLogger(self.__class__.__name__)

    @property
    def logger(self) -> Logger:
        return self._logger

    def set_logging_level(self, level: int | str) -> None:
        self._logger.setLevel(level)

    def run(self, skeleton: FriedrichsSpec,
            c_samples: Sequence[CoefficientField]) -> InvarianceReport:
        """
        Runs the harness.

        :param skeleton: the specification providing A and the interval.
        :param c_samples: the bounded parts.
        :return: the table of indices with the verdict.
        """
        def evaluate(index: int, c: CoefficientField) -> InvarianceRow:
            label = field_label(c)
            try:
                spec = self._sample_spec(skeleton, c)
                parts = validate_spec(spec)
            except ValueError as e:
                self._logger.warning("Exclude the sample %d: %s", index, e)
                return InvarianceRow(index, label, error=str(e))
            indices = deficiency_indices(spec)
            return InvarianceRow(index, label, indices.d_plus, indices.d_minus, parts.mu)

        rows = self._map(evaluate, c_samples, "invariance")
        report = InvarianceReport(tuple(rows))
        self._logger.info("The invariance harness verdict is %s.", report.verdict.value)
        return report

    def robustness(self, skeleton: FriedrichsSpec,
                   v: TraceSubspace,
                   c_samples: Sequence[CoefficientField]) -> RobustnessReport:
        """
        Classifies a fixed boundary condition for many bounded parts.

        :param skeleton: the specification providing A and the interval.
        :param v: the boundary subspace.
        :param c_samples: the bounded parts.
        :return: the table of verdicts.
        """
        def evaluate(index: int, c: CoefficientField) -> RobustnessRow:
            label = field_label(c)
            try:
                spec = self._sample_spec(skeleton, c)
                validate_spec(spec)
            except ValueError as e:
                self._logger.warning("Exclude the sample %d: %s", index, e)
                return RobustnessRow(index, label, error=str(e))
            tol = self._tol or spec.tolerances
            report = Classifier(tol).classify(v, kernel_traces(spec, tol))
            return RobustnessRow(index, label, report.bijective, report.signed_boundary_map)

        return RobustnessReport(tuple(self._map(evaluate, c_samples, "robustness")))

    def _sample_spec(self, skeleton: FriedrichsSpec, c: CoefficientField) -> FriedrichsSpec:
        if c.interval != skeleton.interval:
            raise IntervalMismatchError(f"The bounded part lives on {c.interval}, "
                                        f"expected {skeleton.interval}.")
        spec = skeleton.with_c(c)
        return spec.with_tolerances(self._tol) if self._tol else spec

    def _map(self, fn: Callable[[int, CoefficientField], RowT],
             samples: Sequence[CoefficientField], desc: str) -> List[RowT]:
        workers = self._max_workers or get_thread_count()
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(fn, i, c) for i, c in enumerate(samples)]
            iterable = get_iterable_or_tqdm(futures, self._show_progress,
                                            MIN_SIZE_TO_SHOW_PROGRESS, desc)
            return [f.result() for f in iterable]


def invariance_harness(skeleton: FriedrichsSpec,
                       c_samples: Sequence[CoefficientField],
                       tol: Optional[ToleranceConfig] = None,
                       show_progress: bool = False) -> InvarianceReport:
    """
    Computes the deficiency indices for many bounded parts and decides whether
    they agree.

    See `InvarianceHarness.run`.
    """
    return InvarianceHarness(tol, show_progress).run(skeleton, c_samples)


def boundary_condition_robustness(skeleton: FriedrichsSpec,
                                  v: TraceSubspace,
                                  c_samples: Sequence[CoefficientField],
                                  tol: Optional[ToleranceConfig] = None) -> RobustnessReport:
    return InvarianceHarness(tol).robustness(skeleton, v, c_samples)
