# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from .trajectory import Trajectory, SmoothTrajectory, SampledTrajectory, ExpressionTrajectory
from .fundamental_matrix import FundamentalMatrix
from .linear_system import LinearSystem, zero_order_field, leading_sign
from .ode_integrator import (
    OdeIntegrator,
    default_integrator,
    fundamental_matrix,
    particular_solution,
    solve_initial_value,
)
from .quadrature import QuadratureResult, l2_inner, l2_norm, integrate_on_nodes
from .operator_image import OperatorImage, apply_operator
from .identities import (
    IdentityCheck,
    boundary_pairing,
    green_identity,
    accretivity_identity,
    green_identity_residual,
    accretivity_identity_residual,
)
