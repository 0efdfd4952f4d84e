"""Exception types raised across the package."""


class G41Error(Exception):
    """Base class for all errors raised by g41."""


class GradeError(G41Error, ValueError):
    """A grade index or a grade precondition was violated."""


class NonScalarSquare(G41Error, ValueError):
    """An element expected to square to a scalar did not."""


class NegativeNorm(G41Error, ValueError):
    """B ~B is negative, so the norm is not real."""


class DegenerateFrame(G41Error, ValueError):
    """The five frame vectors do not span the space."""


class SingularBasis(G41Error, RuntimeError):
    """The blade images do not form a basis of M(4, C)."""


class InvalidPair(G41Error, ValueError):
    """Two elements do not form a valid commuting unitary pair."""


class ClosureViolation(G41Error, ArithmeticError):
    """A commutator left the span of the generator set."""


class CensusMismatch(G41Error, ArithmeticError):
    """Closed-form and brute-force solution censuses disagree."""


class NonDiagonalRep(G41Error, ValueError):
    """A matrix image expected to be diagonal was not."""


class NotUnitary(G41Error, ValueError):
    """An element expected to square to +1 did not."""


class ZeroMass(G41Error, ValueError):
    """The gauge derivative divides by the rest mass, which was zero."""


class ExprSyntaxError(G41Error, ValueError):
    """Malformed multivector expression.

    ``offset`` is the byte offset (UTF-8) of the offending token and
    ``expected`` the set of tokens that would have been accepted there.
    """

    def __init__(self, message, offset=0, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = message
        if self.expected:
            detail += " (expected one of: " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(f"{detail} at offset {offset}")


class InvalidBlade(ExprSyntaxError):
    """A blade literal with repeated, descending or out-of-range digits."""
