# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from typing import Optional


class FriedrichsError(Exception):
    """
    The base class of all errors raised by this library.
    """


class SpecValidationError(FriedrichsError, ValueError):
    """
    Raised when a user supplied specification, expression or boundary condition
    violates the Friedrichs axioms or a precondition of an operation.
    """


class NumericalError(FriedrichsError, ArithmeticError):
    """
    Raised when a numerical procedure cannot reach a reliable result.
    """


class UsageError(FriedrichsError):
    """
    Raised when the command line is used incorrectly or an input file cannot be
    read.
    """


class InternalInconsistencyError(FriedrichsError, RuntimeError):
    """
    Raised when two independent routes computing the same quantity disagree.
    """


class ExpressionSyntaxError(SpecValidationError):
    """
    Raised when an expression cannot be parsed.
    """

    def __init__(self, message: str, offset: int) -> None:
        """
        Creates an ExpressionSyntaxError.

        :param message: the error message.
        :param offset: the byte offset of the offending token in the UTF-8
            encoded source text.
        """
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class UnknownIdentifierError(ExpressionSyntaxError):
    """
    Raised when an expression refers to an unknown identifier.
    """


class ArityError(ExpressionSyntaxError):
    """
    Raised when a function is called with a wrong number of arguments.
    """


class PointwiseSpecError(SpecValidationError):
    """
    The base class of validation errors located at a point of the interval.
    """

    def __init__(self, message: str, worst_x: Optional[float] = None) -> None:
        if worst_x is not None:
            message = f"{message} (worst x = {worst_x!r})"
        super().__init__(message)
        self.worst_x = worst_x


class NotHermitianError(PointwiseSpecError):
    """
    Raised when the A field or the symmetric part S is not Hermitian.
    """

    def __init__(self, field_name: str, worst_x: float, residual: float) -> None:
        super().__init__(f"The field {field_name} is not Hermitian: "
                         f"residual {residual!r}", worst_x)
        self.field_name = field_name
        self.residual = residual


class NotStrictlyPositiveError(PointwiseSpecError):
    """
    Raised when the symmetric part S is not uniformly positive definite.
    """

    def __init__(self, worst_x: float, min_eigenvalue: float) -> None:
        super().__init__(f"The symmetric part S is not strictly positive: "
                         f"minimum eigenvalue {min_eigenvalue!r}", worst_x)
        self.min_eigenvalue = min_eigenvalue


class DegenerateOutsideFlagsError(PointwiseSpecError):
    """
    Raised when A is singular at a point not covered by a degeneracy flag.
    """

    def __init__(self, worst_x: float, determinant: float) -> None:
        super().__init__(f"A is singular outside the declared degeneracies: "
                         f"|det A| = {determinant!r}", worst_x)
        self.determinant = determinant


class NotRealError(PointwiseSpecError):
    """
    Raised when a coefficient of a real specification has an imaginary part.
    """


class NotSmoothError(PointwiseSpecError):
    """
    Raised when the finite difference check disagrees with the symbolic
    derivative of A.
    """


class UnboundedCoefficientError(PointwiseSpecError):
    """
    Raised when a coefficient is not finite on the closed interval.
    """


class DegeneracyStructureError(SpecValidationError):
    """
    Raised when a degeneracy flag does not describe a scalar diagonal block
    vanishing at exactly the flagged endpoint.
    """


class NotScalarError(SpecValidationError):
    """
    Raised when a scalar-only operation receives a system.
    """


class IntervalMismatchError(SpecValidationError):
    """
    Raised when two objects are defined on different intervals.
    """


class WellDefinednessError(SpecValidationError):
    """
    Raised when the classifying map is requested for a subspace meeting the
    kernel of the maximal operator.
    """


class NotBijectiveError(SpecValidationError):
    """
    Raised when a boundary value problem is posed on a non-bijective
    realisation.
    """


class PreconditionNotSignedError(SpecValidationError):
    """
    Raised when the a priori estimate is requested for a realisation without a
    signed boundary map.
    """


class UnsupportedSpecError(SpecValidationError):
    """
    Raised when an operation does not support the given kind of specification.
    """


class StepSizeUnderflowError(NumericalError):
    """
    Raised when the adaptive integrator cannot make progress.
    """


class SingularAError(NumericalError):
    """
    Raised when A is not invertible on the integration range.
    """


class ResidualCheckError(NumericalError):
    """
    Raised when the dense output of an integration, or a computed solution of
    a boundary value problem, fails its residual check.
    """


class UndecidableIntegrabilityError(NumericalError):
    """
    Raised when the dyadic collar evidence cannot decide square integrability.
    """


class IllConditionedError(NumericalError):
    """
    Raised when a linear system is too ill-conditioned to be trusted.
    """

    def __init__(self, message: str, condition_number: float) -> None:
        super().__init__(f"{message}: condition number {condition_number!r}")
        self.condition_number = condition_number


class DecompositionDefectError(NumericalError):
    """
    Raised when the trace space does not split into the two kernel trace
    spaces.
    """
