# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from .math_utils import (
    hermitian_part,
    conj_transpose,
    numerical_rank,
    orthonormal_basis,
    null_space_basis,
    subspace_distance,
    subspace_intersection,
    compress,
    eigenvalue_range,
    inertia,
)
from .common_utils import (
    get_thread_count,
    records_to_csv,
    get_iterable_or_tqdm,
    complex_to_json,
    complex_from_json,
    matrix_to_json,
)
