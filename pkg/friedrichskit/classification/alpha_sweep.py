# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import cmath
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from logging import Logger, getLogger
from typing import Any, Optional, Sequence, Tuple

from scipy.integrate import quad

from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..common.errors import InternalInconsistencyError, NotScalarError
from ..common.tolerance_config import ToleranceConfig
from ..trace.boundary_condition import BoundaryAlpha
from ..trace.kernel_bases import KernelBases, kernel_traces
from ..util.common_utils import complex_to_json, get_iterable_or_tqdm, get_thread_count
from .classifier import Classifier
from .realisation_report import RealisationReport

DEFAULT_ALPHAS = (-2.0, -1.0, -0.5, 0.0, 0.3, 0.9, 1.0, 2.0, "inf")
"""
The default grid of boundary parameters; the parameter α_β of the kernel is
appended to the grid by default.
"""

MIN_SIZE_TO_SHOW_PROGRESS = 8


@dataclass(frozen=True)
class AlphaSweepEntry:
    """The classification of the scalar realisation with u(b) = αu(a)."""

    alpha: BoundaryAlpha

    report: RealisationReport

    cone_value: float
    """
    The boundary form at the normalised direction of the condition.
    """

    def to_dict(self) -> dict:
        result = {"alpha": self.alpha.to_json()}
        result.update(self.report.flags.to_dict())
        result["cone_value"] = self.cone_value
        return result


@dataclass(frozen=True)
class AlphaSweepReport:
    """
    The classification of the realisations u(b) = αu(a) of a scalar
    specification over a grid of parameters, in grid order.
    """

    alpha_beta: complex
    """
    The value Φ(b) of the kernel element with Φ(a) = 1, the unique parameter of
    a non-bijective realisation.
    """

    alpha_beta_quadrature: complex
    """
    The value exp(−∫ c/a dx) computed by adaptive quadrature.
    """

    entries: Tuple[AlphaSweepEntry, ...]

    def alphas_where(self, flag: str) -> list[BoundaryAlpha]:
        """
        Gets the parameters whose realisations have a category flag set.
        """
        return [e.alpha for e in self.entries if getattr(e.report.flags, flag)]

    def non_bijective(self) -> list[BoundaryAlpha]:
        return [e.alpha for e in self.entries if not e.report.bijective]

    def to_dict(self) -> dict:
        return {
            "alpha_beta": complex_to_json(self.alpha_beta),
            "alpha_beta_quadrature": complex_to_json(self.alpha_beta_quadrature),
            "entries": [e.to_dict() for e in self.entries],
        }


class AlphaSweep:
    """
    Classifies the realisations u(b) = αu(a) of a scalar specification for a
    grid of parameters α, concurrently.
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

    def sweep(self,
              spec: FriedrichsSpec,
              alphas: Optional[Sequence[Any]] = None,
              include_alpha_beta: bool = True) -> AlphaSweepReport:
        """
        Runs the sweep.

        :param spec: the scalar specification.
        :param alphas: the grid of parameters; numbers, complex numbers or "inf".
        :param include_alpha_beta: whether to append α_β to the grid.
        :return: the report, with the entries in grid order.
        :raise NotScalarError: if the specification is not scalar, or has a
            degenerate coefficient.
        :raise InternalInconsistencyError: if α_β computed from the fundamental
            matrix and by quadrature disagree.
        """
        if spec.n != 1 or spec.is_degenerate:
            raise NotScalarError("The α sweep requires a scalar specification with "
                                 "an invertible coefficient A.")
        tol = self._tol or spec.tolerances
        kb = kernel_traces(spec, tol)
        alpha_beta = self.alpha_beta(kb)
        quadrature = alpha_beta_by_quadrature(spec)
        if abs(alpha_beta - quadrature) > tol.consistency_tol * max(1.0, abs(quadrature)):
            raise InternalInconsistencyError(
                f"The kernel parameter {alpha_beta!r} from the fundamental matrix "
                f"differs from the quadrature value {quadrature!r}.")
        grid = [BoundaryAlpha.of(a) for a in (alphas if alphas is not None else DEFAULT_ALPHAS)]
        if include_alpha_beta:
            candidate = BoundaryAlpha(alpha_beta)
            if all(a.distance(candidate) > tol.consistency_tol for a in grid):
                grid.append(candidate)
        self._logger.info("Sweeping %d boundary parameters; α_β = %s.",
                          len(grid), alpha_beta)
        classifier = Classifier(tol)

        def run(alpha: BoundaryAlpha) -> AlphaSweepEntry:
            report = classifier.classify(alpha.subspace(), kb)
            return AlphaSweepEntry(alpha, report, alpha.cone_value(kb.form))

        workers = self._max_workers or get_thread_count()
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(run, alpha) for alpha in grid]
            iterable = get_iterable_or_tqdm(futures, self._show_progress,
                                            MIN_SIZE_TO_SHOW_PROGRESS, "alpha sweep")
            entries = tuple(f.result() for f in iterable)
        return AlphaSweepReport(alpha_beta=alpha_beta,
                                alpha_beta_quadrature=quadrature,
                                entries=entries)

    @staticmethod
    def alpha_beta(kb: KernelBases) -> complex:
        """
        Gets the parameter α_β = Φ(b)/Φ(a) of the kernel traces of a scalar
        specification.
        """
        column = kb.k_columns[:, 0]
        return complex(column[1] / column[0])


def alpha_beta_by_quadrature(spec: FriedrichsSpec) -> complex:
    """
    Computes α_β = exp(−∫ c/a dx) over the interval by adaptive quadrature.
    """
    def ratio(x: float) -> complex:
        return complex(spec.C.evaluate(x)[0, 0] / spec.A.evaluate(x)[0, 0])

    real, _ = quad(lambda x: ratio(x).real, spec.a, spec.b, epsabs=1e-14, epsrel=1e-13)
    imag, _ = quad(lambda x: ratio(x).imag, spec.a, spec.b, epsabs=1e-14, epsrel=1e-13)
    return cmath.exp(-complex(real, imag))


def sweep_alpha(spec: FriedrichsSpec,
                alphas: Optional[Sequence[Any]] = None,
                tol: Optional[ToleranceConfig] = None,
                include_alpha_beta: bool = True,
                show_progress: bool = False) -> AlphaSweepReport:
    """
    Classifies the realisations u(b) = αu(a) of a scalar specification.

    See `AlphaSweep.sweep`.
    """
    return AlphaSweep(tol, show_progress).sweep(spec, alphas, include_alpha_beta)
