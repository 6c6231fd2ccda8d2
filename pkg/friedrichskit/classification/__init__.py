# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from .classifying_map import (
    ClassifyingMap,
    build_U,
    build_V_from_U,
    complement_from_U,
    unitary_from_bijection,
    mutually_adjoint_realisation,
    kernel_grams,
)
from .realisation_report import BijectivityCheck, CategoryFlags, RealisationReport, CATEGORY_NAMES
from .classifier import Classifier, classify, is_bijective
from .mutual_adjoint_count import MutualAdjointCount, count_mutually_adjoint, count_from_indices
from .alpha_sweep import (
    AlphaSweep,
    AlphaSweepEntry,
    AlphaSweepReport,
    DEFAULT_ALPHAS,
    sweep_alpha,
    alpha_beta_by_quadrature,
)
from .symmetric_adapter import SymmetricSystem, symmetric_adapter
