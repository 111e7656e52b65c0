"""Exception hierarchy shared by the library and the command-line front end."""


class TriangleModuliError(Exception):
    """Base class for every error raised by this package."""

    code = 'TriangleModuliError'


class ConfigurationError(TriangleModuliError):
    code = 'ConfigurationError'


class MalformedLiteral(TriangleModuliError, ValueError):
    """Text input that does not follow one of the accepted literal formats."""

    code = 'MalformedLiteral'

    def __init__(self, token, expected):
        super().__init__(f"Malformed literal {token!r}: expected {expected}")
        self.token = token
        self.expected = expected


class UsageError(TriangleModuliError):
    """Command-line input rejected before any computation ran."""

    code = 'UsageError'


class DomainError(TriangleModuliError, ValueError):
    """Input is well formed but lies outside the domain of the operation."""

    code = 'DomainError'


class NonFiniteValueError(DomainError):
    code = 'NonFiniteValue'


class NotInUpperHalfPlaneError(DomainError):
    code = 'NotInUpperHalfPlane'


class DegenerateInputError(DomainError):
    code = 'DegenerateInput'


class InvalidMatrixError(DomainError):
    code = 'InvalidMatrix'


class IntegerOverflowError(DomainError, ArithmeticError):
    code = 'IntegerOverflow'


class NonTerminationError(DomainError, RuntimeError):
    code = 'NonTermination'


class InvalidPermutationError(DomainError):
    code = 'InvalidPermutation'


class OutsideTError(DomainError):
    code = 'OutsideT'


class OnIsoscelesLocusError(DomainError):
    code = 'OnIsoscelesLocus'


class NotAcuteOrRightError(DomainError):
    code = 'NotAcuteOrRight'


class NotInClosureOfTError(DomainError):
    code = 'NotInClosureOfT'


class NotInTError(DomainError):
    code = 'NotInT'


class ObtuseInputError(DomainError):
    code = 'ObtuseInput'


class CollinearBasisError(DomainError):
    code = 'CollinearBasis'


class NegativeOrientationError(DomainError):
    code = 'NegativeOrientation'


class EmptyTileListError(DomainError):
    code = 'EmptyTileList'


class InvalidViewportError(DomainError):
    code = 'InvalidViewport'


class InvalidParallelogramError(DomainError):
    code = 'InvalidParallelogram'
