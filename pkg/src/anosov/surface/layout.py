"""Exact band layouts and affine maps between height intervals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Affine:
    """The map ``t -> a*t + b`` with rational coefficients."""

    a: Fraction
    b: Fraction

    def __call__(self, t):
        return self.a * t + self.b

    def then(self, other: "Affine") -> "Affine":
        """``other`` after ``self``."""
        return Affine(other.a * self.a, other.a * self.b + other.b)

    def inverse(self) -> "Affine":
        return Affine(1 / self.a, -self.b / self.a)

    def fixed_point(self) -> Fraction:
        if self.a == 1:
            raise ZeroDivisionError("translation has no fixed point")
        return self.b / (1 - self.a)


IDENTITY = Affine(Fraction(1), Fraction(0))


@dataclass(frozen=True)
class BandLayout:
    """Places ``count`` bands strictly inside ``[0, 1]``, in increasing order.

    ``thirds``: band ``j`` (0-based) of ``b`` is ``[(3j+1)/3b, (3j+2)/3b]``.
    ``quarters``: band ``j`` is ``[(4j+1)/4b, (4j+2)/4b]``, giving unequal gaps.
    """

    rule: str = "thirds"

    def __post_init__(self) -> None:
        if self.rule not in ("thirds", "quarters"):
            raise ValueError(f"unknown layout rule {self.rule!r}")

    def band(self, j: int, count: int) -> tuple[Fraction, Fraction]:
        if not 0 <= j < count:
            raise IndexError(j)
        if self.rule == "thirds":
            return Fraction(3 * j + 1, 3 * count), Fraction(3 * j + 2, 3 * count)
        return Fraction(4 * j + 1, 4 * count), Fraction(4 * j + 2, 4 * count)

    def embed(self, j: int, count: int, eps: int) -> Affine:
        """Map ``[0, 1]`` onto band ``j``, reversing it when ``eps = -1``."""
        lo, hi = self.band(j, count)
        if eps == 1:
            return Affine(hi - lo, lo)
        return Affine(lo - hi, hi)


THIRDS = BandLayout("thirds")
QUARTERS = BandLayout("quarters")
