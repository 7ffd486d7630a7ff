"""Exception taxonomy shared across the package.

ValueError is used for plain precondition violations (negative input,
composite where a prime is required, and so on); the classes here mark
outcomes a caller may want to handle structurally.
"""


class SquaresError(Exception):
    """Base class for all domain errors raised by this package."""


class GirardViolation(SquaresError):
    """Input has a prime divisor p = 4a+3 to an odd power, so no two-square
    representation exists."""


class NotRepresentable(SquaresError):
    """No solution of the requested form x^2 + d*y^2 = p."""


class IneligibleForm(SquaresError):
    """Input is of the form 4^r(8s+7) and has no three-square representation."""


class SearchExhausted(SquaresError):
    """Randomized search hit its iteration cap and no fallback applied."""


class ShiftExhausted(SquaresError):
    """No shift within the configured bound produced an eligible remainder."""


class PartOutOfBasis(SquaresError):
    """A decomposition part fell outside its designated basis set (usually a
    sign of a mis-tuned scale constant)."""


class NoDecompositionFound(SquaresError):
    """The greedy cube split failed; expected for a finite set of small inputs."""


class InputTooLarge(SquaresError):
    """Exhaustive oracle guard tripped; the requested enumeration is out of range."""


class NoPositiveRep(SquaresError):
    """No representation as at most four strictly positive squares."""
