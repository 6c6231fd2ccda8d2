# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from .errors import (
    FriedrichsError,
    SpecValidationError,
    NumericalError,
    UsageError,
    InternalInconsistencyError,
    ExpressionSyntaxError,
    UnknownIdentifierError,
    ArityError,
    PointwiseSpecError,
    NotHermitianError,
    NotStrictlyPositiveError,
    DegenerateOutsideFlagsError,
    NotRealError,
    NotSmoothError,
    UnboundedCoefficientError,
    DegeneracyStructureError,
    NotScalarError,
    IntervalMismatchError,
    WellDefinednessError,
    NotBijectiveError,
    PreconditionNotSignedError,
    UnsupportedSpecError,
    StepSizeUnderflowError,
    SingularAError,
    ResidualCheckError,
    UndecidableIntegrabilityError,
    IllConditionedError,
    DecompositionDefectError,
)
from .tolerance_config import ToleranceConfig
from .scalar_field import ScalarField
from .endpoint import Endpoint
from .operator_variant import OperatorVariant
from .matrix import Matrix, Vector, as_matrix, as_vector
