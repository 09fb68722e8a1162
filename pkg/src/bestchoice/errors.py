"""Exception types shared across the package.

Every error raised deliberately by this library derives from
:class:`BestChoiceError`, so callers can catch one type at the boundary.
The command-line front end maps these onto its exit-code contract.
"""


class BestChoiceError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSequence(BestChoiceError):
    """Input is empty, has repeated entries, or is not a permutation of 1..n."""


class IndexOutOfRange(BestChoiceError):
    """A 1-based position argument falls outside 1..rank."""


class ResourceLimit(BestChoiceError):
    """The requested computation exceeds the configured exhaustive-search bounds."""


class NotInTree(BestChoiceError):
    """The given prefix is not a node of the given prefix tree."""


class RankMismatch(BestChoiceError):
    """Operands have incompatible ranks."""


class EmptyGame(BestChoiceError):
    """The operation needs a nonempty collection of rank orderings."""


class InvalidStrikeSet(BestChoiceError):
    """The prefix collection is not a valid strategy for the requested operation."""


class NotApplicable(BestChoiceError):
    """The map is undefined on this input."""


class NotSupported(BestChoiceError):
    """No closed form is available for the requested class."""


class NotInDomain(BestChoiceError):
    """The input lies outside the domain of the bijection."""


class InputError(BestChoiceError):
    """A file or text input is malformed."""
