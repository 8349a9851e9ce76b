"""Exception hierarchy shared by every module of the package."""


class ACMError(Exception):
    """Base class for all library errors."""


class SingularMatrix(ACMError, ValueError):
    pass


class NotSymmetric(ACMError, ValueError):
    pass


class DimensionMismatch(ACMError, ValueError):
    pass


class DegreeOverflow(ACMError, ValueError):
    pass


class EvenDimension(ACMError, ValueError):
    pass


class NotContact(ACMError, ValueError):
    pass


class InvalidLieAlgebra(ACMError, ValueError):
    """Raised when a structure-constant table violates the Jacobi identity."""


class InvalidStructure(ACMError, ValueError):
    """Raised when an almost contact metric or Kähler axiom fails."""


class NotAqs(ACMError, ValueError):
    pass


class ZeroLambda(ACMError, ValueError):
    pass


class NotTransverselyKahler(ACMError, ValueError):
    pass


class NotSasakian(ACMError, ValueError):
    pass


class Degenerate(ACMError, ValueError):
    pass


class DegenerateOmega(Degenerate):
    pass


class OmegaNotClosed(ACMError, ValueError):
    pass


class TrivialCenter(ACMError, ValueError):
    pass


class NotMaximalRank(ACMError, ValueError):
    pass


class NonDiagonalMetric(ACMError, ValueError):
    pass


class ParamConstraintViolation(ACMError, ValueError):
    pass


class ParseError(ACMError, ValueError):
    pass


class MissingAcmBlock(ACMError, ValueError):
    pass
