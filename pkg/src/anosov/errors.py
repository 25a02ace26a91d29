"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class AnosovError(Exception):
    """Base class for all library errors."""


class InputError(AnosovError):
    """Malformed or inconsistent input data."""


class GTypeSyntaxError(InputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SumMismatch(InputError):
    def __init__(self, sum_h: int, sum_v: int):
        super().__init__(f"sum of h ({sum_h}) differs from sum of v ({sum_v})")
        self.sum_h = sum_h
        self.sum_v = sum_v


class NotBijective(InputError):
    def __init__(self, target: tuple[int, int]):
        k, l = target
        super().__init__(f"target ({k},{l}) is hit more than once or not at all")
        self.target = target


class IndexOutOfRange(InputError):
    pass


class TraceDiverged(AnosovError):
    pass


class NonOrientable(AnosovError):
    pass


class UnpairedSeparatrix(AnosovError):
    pass


class InvalidType(InputError):
    pass


class EmptySubset(InputError):
    pass


class NoMarkedLeaves(InputError):
    pass


class BadPairing(InputError):
    pass


class MissingIncidence(InputError):
    pass


class PreconditionFailed(AnosovError):
    """A surgery operator was applied outside its hypotheses."""

    kind = "PreconditionFailed"


class PositiveMultiplier(PreconditionFailed):
    kind = "PositiveMultiplier"


class FreeSeparatrix(PreconditionFailed):
    kind = "FreeSeparatrix"


class TrivialPiece(PreconditionFailed):
    kind = "TrivialPiece"


class InvalidExtension(PreconditionFailed):
    kind = "InvalidExtension"


class NoSuchAnnulus(PreconditionFailed):
    kind = "NoSuchAnnulus"


class NotAlternatingElementary(PreconditionFailed):
    kind = "NotAlternatingElementary"
