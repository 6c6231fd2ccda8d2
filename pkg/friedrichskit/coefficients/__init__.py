# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from .coefficient_field import CoefficientField, Interval, EntryPair
from .friedrichs_spec import FriedrichsSpec, DegeneracyFlag
from .parts_decomposition import PartsDecomposition
from .spec_validator import SpecValidator, validate_spec, split_parts, split_fields
