"""Abstract geometric types of Markov partitions.

A geometric type records ``n`` rectangles, the number ``h[i]`` of horizontal
subrectangles and ``v[k]`` of vertical subrectangles of each, and the map
``phi`` sending the horizontal band ``(i, j)`` onto the vertical band
``(k, l)`` with a sign telling whether vertical orientation is preserved.

Indices are 0-based in memory and 1-based in files and reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import GTypeSyntaxError, IndexOutOfRange, NotBijective, SumMismatch

HEADER = "geomtype v1"

Symbol = tuple[int, int]


@dataclass(frozen=True, order=True)
class SignedTarget:
    k: int
    l: int
    eps: int

    def __post_init__(self) -> None:
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps!r}")

    @property
    def band(self) -> Symbol:
        return (self.k, self.l)


@dataclass(frozen=True)
class GeometricType:
    """A validated geometric type. Construct with :func:`make_type` or :func:`parse`."""

    n: int
    h: tuple[int, ...]
    v: tuple[int, ...]
    phi: tuple[tuple[SignedTarget, ...], ...]
    _inverse: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        validate(self.n, self.h, self.v, self.phi)
        inverse = {}
        for i, row in enumerate(self.phi):
            for j, t in enumerate(row):
                inverse[(t.k, t.l)] = (i, j, t.eps)
        object.__setattr__(self, "_inverse", inverse)

    def __hash__(self) -> int:
        return hash((self.n, self.h, self.v, self.phi))

    def target(self, i: int, j: int) -> SignedTarget:
        return self.phi[i][j]

    def source(self, k: int, l: int) -> tuple[int, int, int]:
        """Return ``(i, j, eps)`` with ``phi(i, j) = ((k, l), eps)``."""
        return self._inverse[(k, l)]

    def symbols(self) -> Iterator[Symbol]:
        for i in range(self.n):
            for j in range(self.h[i]):
                yield (i, j)

    @property
    def size(self) -> int:
        return sum(self.h)


def validate(n, h, v, phi) -> None:
    if n < 1:
        raise IndexOutOfRange(f"n must be positive, got {n}")
    if len(h) != n or len(v) != n or len(phi) != n:
        raise IndexOutOfRange("h, v and phi must have one entry per rectangle")
    if any(x < 1 for x in h) or any(x < 1 for x in v):
        raise IndexOutOfRange("band counts must be positive")
    if sum(h) != sum(v):
        raise SumMismatch(sum(h), sum(v))
    seen: set[Symbol] = set()
    for i, row in enumerate(phi):
        if len(row) != h[i]:
            raise IndexOutOfRange(f"rectangle {i + 1} needs {h[i]} phi entries, got {len(row)}")
        for t in row:
            if not (0 <= t.k < n) or not (0 <= t.l < v[t.k]):
                raise IndexOutOfRange(f"target ({t.k + 1},{t.l + 1}) out of range")
            if t.band in seen:
                raise NotBijective((t.k + 1, t.l + 1))
            seen.add(t.band)


def make_type(
    h: Iterable[int],
    v: Iterable[int],
    phi: Mapping[Symbol, tuple[int, int, int]],
    *,
    one_based: bool = True,
) -> GeometricType:
    """Build a type from a dict ``(i, j) -> (k, l, eps)``.

    >>> T = make_type([2], [2], {(1, 1): (1, 1, 1), (1, 2): (1, 2, 1)})
    >>> T.target(0, 1)
    SignedTarget(k=0, l=1, eps=1)
    """
    h = tuple(h)
    v = tuple(v)
    off = 1 if one_based else 0
    rows = []
    for i in range(len(h)):
        row = []
        for j in range(h[i]):
            key = (i + off, j + off)
            if key not in phi:
                raise IndexOutOfRange(f"phi undefined at ({i + 1},{j + 1})")
            k, l, eps = phi[key]
            row.append(SignedTarget(k - off, l - off, eps))
        rows.append(tuple(row))
    extra = set(phi) - {(i + off, j + off) for i in range(len(h)) for j in range(h[i])}
    if extra:
        i, j = min(extra)
        raise IndexOutOfRange(f"phi defined outside the domain at ({i - off + 1},{j - off + 1})")
    return GeometricType(len(h), h, v, tuple(rows))


def transpose(T: GeometricType) -> GeometricType:
    """Time reversal: swap the roles of horizontal and vertical bands."""
    rows = []
    for k in range(T.n):
        row = []
        for l in range(T.v[k]):
            i, j, eps = T.source(k, l)
            row.append(SignedTarget(i, j, eps))
        rows.append(tuple(row))
    return GeometricType(T.n, T.v, T.h, tuple(rows))


def disjoint_union(*types: GeometricType) -> GeometricType:
    h: list[int] = []
    v: list[int] = []
    rows: list[tuple[SignedTarget, ...]] = []
    offset = 0
    for T in types:
        h.extend(T.h)
        v.extend(T.v)
        for row in T.phi:
            rows.append(tuple(SignedTarget(t.k + offset, t.l, t.eps) for t in row))
        offset += T.n
    return GeometricType(offset, tuple(h), tuple(v), tuple(rows))


def serialize(T: GeometricType) -> str:
    lines = [HEADER, f"n {T.n}", "h " + " ".join(map(str, T.h)), "v " + " ".join(map(str, T.v))]
    for i, j in T.symbols():
        t = T.target(i, j)
        sign = "+" if t.eps == 1 else "-"
        lines.append(f"phi {i + 1} {j + 1} -> {t.k + 1} {t.l + 1} {sign}")
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GTypeSyntaxError(lineno, "expected integers") from None


def parse(text: str) -> GeometricType:
    """Parse and validate the ``geomtype v1`` format."""
    content = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            content.append((lineno, line.split()))
    if not content or content[0][1] != HEADER.split():
        raise GTypeSyntaxError(content[0][0] if content else 1, f"expected '{HEADER}' header")
    if len(content) < 4:
        raise GTypeSyntaxError(content[-1][0], "missing n, h or v line")

    def keyed(idx: int, key: str) -> tuple[int, list[int]]:
        lineno, toks = content[idx]
        if toks[0] != key:
            raise GTypeSyntaxError(lineno, f"expected '{key}' line")
        return lineno, _ints(toks[1:], lineno)

    lineno, vals = keyed(1, "n")
    if len(vals) != 1:
        raise GTypeSyntaxError(lineno, "n takes exactly one value")
    n = vals[0]
    if n < 1:
        raise GTypeSyntaxError(lineno, "n must be positive")
    h_line, h = keyed(2, "h")
    v_line, v = keyed(3, "v")
    for lno, vals, name in ((h_line, h, "h"), (v_line, v, "v")):
        if len(vals) != n:
            raise GTypeSyntaxError(lno, f"{name} needs {n} values")
        if any(x < 1 for x in vals):
            raise GTypeSyntaxError(lno, f"{name} values must be positive")

    phi: dict[Symbol, tuple[int, int, int]] = {}
    for lineno, toks in content[4:]:
        if len(toks) != 7 or toks[0] != "phi" or toks[3] != "->" or toks[6] not in ("+", "-"):
            raise GTypeSyntaxError(lineno, "expected 'phi i j -> k l +|-'")
        i, j, k, l = _ints([toks[1], toks[2], toks[4], toks[5]], lineno)
        if (i, j) in phi:
            raise GTypeSyntaxError(lineno, f"phi ({i},{j}) given twice")
        if not (1 <= i <= n and 1 <= j <= h[i - 1]):
            raise IndexOutOfRange(f"line {lineno}: source ({i},{j}) out of range")
        if not (1 <= k <= n and 1 <= l <= v[k - 1]):
            raise IndexOutOfRange(f"line {lineno}: target ({k},{l}) out of range")
        phi[(i, j)] = (k, l, 1 if toks[6] == "+" else -1)

    if sum(h) != sum(v):
        raise SumMismatch(sum(h), sum(v))
    if len(phi) != sum(h):
        last = content[-1][0]
        raise GTypeSyntaxError(last, f"expected {sum(h)} phi lines, got {len(phi)}")
    seen: dict[Symbol, Symbol] = {}
    for src, (k, l, _) in sorted(phi.items()):
        if (k, l) in seen:
            raise NotBijective((k, l))
        seen[(k, l)] = src
    return make_type(h, v, phi)


def read(path) -> GeometricType:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# Fixtures used throughout the test-suite and documentation.

def fake_horseshoe() -> GeometricType:
    return make_type([2], [2], {(1, 1): (1, 1, 1), (1, 2): (1, 2, 1)})


def smale_horseshoe() -> GeometricType:
    return make_type([2], [2], {(1, 1): (1, 1, 1), (1, 2): (1, 2, -1)})


def trivial_type() -> GeometricType:
    return make_type([1], [1], {(1, 1): (1, 1, 1)})
