# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from .singular_block import (
    SingularBlockAnalyzer,
    SingularBlockReport,
    DirectionEvidence,
    analyze_singular_block,
    analyze_spec_block,
)
from .deficiency import DeficiencyIndices, deficiency_indices
from .sample_generator import random_bounded_parts
from .invariance_harness import (
    InvarianceHarness,
    InvarianceReport,
    InvarianceRow,
    RobustnessReport,
    RobustnessRow,
    Verdict,
    convex_path,
    invariance_harness,
    boundary_condition_robustness,
    DEFAULT_LAMBDAS,
)
