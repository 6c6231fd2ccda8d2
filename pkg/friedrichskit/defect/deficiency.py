# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from dataclasses import dataclass
from typing import Optional, Tuple

from ..coefficients.friedrichs_spec import FriedrichsSpec
from ..common.tolerance_config import ToleranceConfig
from ..trace.kernel_bases import kernel_traces
from .singular_block import SingularBlockReport


@dataclass(frozen=True)
class DeficiencyIndices:
    """
    The deficiency indices d₊ = dim ker T₁ and d₋ = dim ker T̃₁.
    """

    d_plus: int

    d_minus: int

    effective_dimension: int
    """
    The dimension of the effective trace space, which equals d₊ + d₋.
    """

    singular_blocks: Tuple[SingularBlockReport, ...] = ()

    def as_tuple(self) -> Tuple[int, int]:
        return self.d_plus, self.d_minus

    def to_dict(self) -> dict:
        return {
            "d_plus": self.d_plus,
            "d_minus": self.d_minus,
            "effective_dimension": self.effective_dimension,
            "singular_blocks": [r.to_dict() for r in self.singular_blocks],
        }


def deficiency_indices(spec: FriedrichsSpec,
                       tol: Optional[ToleranceConfig] = None) -> DeficiencyIndices:
    """
    Computes the deficiency indices of a specification.

    Regular components contribute their full dimension to both indices; a
    flagged block contributes to each index whose kernel element is square
    integrable near its singular endpoint.

    :param spec: the validated specification.
    :param tol: the tolerances, by default those of the specification.
    :return: the indices.
    :raise UndecidableIntegrabilityError: if the singular endpoint analysis is
        inconclusive.
    """
    kb = kernel_traces(spec, tol)
    return DeficiencyIndices(d_plus=kb.d_plus,
                             d_minus=kb.d_minus,
                             effective_dimension=kb.effective_dimension,
                             singular_blocks=kb.singular_blocks)
