# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from .trace_form import TraceForm, TraceCoordinate, build_trace_form, full_index
from .trace_subspace import TraceSubspace
from .cone import Cone, cone_test, compressed_eigenvalues
from .subspace_algebra import ortho_complement, is_symmetric, is_selfadjoint_type
from .kernel_bases import (
    KernelBases,
    DecompositionReport,
    kernel_traces,
    project_kernels,
    check_decomposition,
)
from .boundary_condition import (
    BoundaryAlpha,
    BoundaryCondition,
    BoundaryConditionKind,
    parse_boundary_condition,
    alpha_condition,
)
