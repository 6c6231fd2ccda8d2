# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from .apriori import AprioriReport, AprioriTrial
from .boundary_value_solution import BoundaryValueSolution
from .bvp_solver import (
    BoundaryValueSolver,
    DualityReport,
    adjoint_solve,
    check_apriori,
    duality_check,
    refined_tolerances,
    solve,
)
from .random_rhs import RandomRhsGenerator, random_rhs

__all__ = [
    "AprioriReport",
    "AprioriTrial",
    "BoundaryValueSolution",
    "BoundaryValueSolver",
    "DualityReport",
    "RandomRhsGenerator",
    "adjoint_solve",
    "check_apriori",
    "duality_check",
    "random_rhs",
    "refined_tolerances",
    "solve",
]
