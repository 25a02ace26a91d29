"""The strip complex obtained by cutting rectangles along bands and regluing.

One engine serves both sides. For every rectangle ``i`` there are ``cuts[i]``
full-height cuts splitting it into strips ``0..cuts[i]``, and ``bands[i]``
bands on each of its two outer vertical sides. Cut ``l`` (0-based) separates
strip ``l`` from strip ``l + 1``; its two banks are ``g`` (right side of strip
``l``) and ``d`` (left side of strip ``l + 1``).

On the stable side the cuts are the vertical bands and the outer bands are the
horizontal bands. The unstable side swaps the roles.

Each cut is glued to its partner band ``(k, m)`` with sign ``eps``. For
``eps = +1`` bank ``g`` goes to the band on the first (left) outer side of
rectangle ``k`` and bank ``d`` to the last (right) one, heights ``t`` mapping
to ``bot + t*len``. For ``eps = -1`` the outer sides are exchanged and heights
reversed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from ..errors import NonOrientable
from ..geomtype import GeometricType
from .layout import THIRDS, Affine, BandLayout

Kind = Literal["stable", "unstable"]

FIRST, LAST = "first", "last"
SIDE_NAMES = {"stable": ("left", "right"), "unstable": ("low", "high")}


@dataclass(frozen=True)
class StripTable:
    """Combinatorial gluing data of one side of a geometric type."""

    kind: Kind
    n: int
    cuts: tuple[int, ...]
    bands: tuple[int, ...]
    cut_partner: dict  # (i, l) -> (k, m, eps)
    band_partner: dict  # (k, m) -> (i, l, eps)

    @classmethod
    def of(cls, T: GeometricType, kind: Kind) -> "StripTable":
        cut_partner = {}
        band_partner = {}
        if kind == "stable":
            for k, m in T.symbols():
                t = T.target(k, m)
                cut_partner[(t.k, t.l)] = (k, m, t.eps)
                band_partner[(k, m)] = (t.k, t.l, t.eps)
            return cls(kind, T.n, T.v, T.h, cut_partner, band_partner)
        if kind == "unstable":
            for i, j in T.symbols():
                t = T.target(i, j)
                cut_partner[(i, j)] = (t.k, t.l, t.eps)
                band_partner[(t.k, t.l)] = (i, j, t.eps)
            return cls(kind, T.n, T.h, T.v, cut_partner, band_partner)
        raise ValueError(f"unknown side {kind!r}")

    def last(self, i: int) -> int:
        return self.cuts[i]

    def outer_strip(self, i: int, outer: str) -> int:
        return 0 if outer == FIRST else self.cuts[i]

    def strips(self):
        for i in range(self.n):
            for s in range(self.cuts[i] + 1):
                yield (i, s)

    def bank_target(self, i: int, l: int, bank: str) -> tuple[int, int, str, int]:
        """Outer band receiving a cut bank: ``(k, m, outer, eps)``."""
        k, m, eps = self.cut_partner[(i, l)]
        if (bank == "g") == (eps == 1):
            return k, m, FIRST, eps
        return k, m, LAST, eps

    def band_source(self, k: int, m: int, outer: str) -> tuple[int, int, str, int]:
        """Cut bank glued onto band ``m`` of the given outer side: ``(i, l, bank, eps)``."""
        i, l, eps = self.band_partner[(k, m)]
        if (outer == FIRST) == (eps == 1):
            return i, l, "g", eps
        return i, l, "d", eps

    def height_map(self, layout: BandLayout, k: int, m: int, eps: int) -> Affine:
        """Cut height to band height."""
        return layout.embed(m, self.bands[k], eps)

    def extremal_successor(self, state: tuple[int, str]) -> tuple[tuple[int, str], tuple[int, int, int]]:
        """Cut-extremal map on ``(rect, first|last)``; returns the partner band too."""
        i, side = state
        l = 0 if side == FIRST else self.cuts[i] - 1
        k, m, eps = self.cut_partner[(i, l)]
        nxt = side if eps == 1 else (LAST if side == FIRST else FIRST)
        return (k, nxt), (k, m, eps)

    def side_name(self, side: str) -> str:
        first, last = SIDE_NAMES[self.kind]
        return first if side == FIRST else last

    def side_code(self, name: str) -> str:
        first, last = SIDE_NAMES[self.kind]
        if name == first:
            return FIRST
        if name == last:
            return LAST
        raise ValueError(name)


Point = tuple[int, int, int, Fraction]  # (rect, strip, x in {0,1}, height)


@dataclass
class Dart:
    """One side segment of a strip, oriented counter-clockwise around it."""

    id: int
    face: tuple[int, int]
    kind: str  # bottom | top | cut | band | gap
    ref: tuple
    start: Point
    end: Point
    twin: int | None = None
    next: int = -1
    prev: int = -1


@dataclass
class SurfaceComplex:
    T: GeometricType
    table: StripTable
    layout: BandLayout
    darts: list[Dart] = field(default_factory=list)
    faces: dict = field(default_factory=dict)  # (i, s) -> list of dart ids in ccw order

    @property
    def kind(self) -> Kind:
        return self.table.kind

    @property
    def gluing_maps(self) -> int:
        """Number of band identifications, one per subrectangle."""
        return len(self.table.cut_partner)

    @property
    def edge_pairs(self) -> int:
        return sum(1 for d in self.darts if d.twin is not None) // 2

    def free_darts(self) -> list[Dart]:
        return [d for d in self.darts if d.twin is None]

    def find(self, face, kind, ref) -> Dart:
        for did in self.faces[face]:
            d = self.darts[did]
            if d.kind == kind and d.ref == ref:
                return d
        raise KeyError((face, kind, ref))


def _outer_segments(layout: BandLayout, count: int):
    """Segments of an outer side from bottom to top: ``(kind, index, lo, hi)``."""
    segs = []
    y = Fraction(0)
    for m in range(count):
        lo, hi = layout.band(m, count)
        segs.append(("gap", m, y, lo))
        segs.append(("band", m, lo, hi))
        y = hi
    segs.append(("gap", count, y, Fraction(1)))
    return segs


def build_complex(T: GeometricType, kind: Kind = "stable", layout: BandLayout = THIRDS) -> SurfaceComplex:
    table = StripTable.of(T, kind)
    cx = SurfaceComplex(T, table, layout)
    zero, one = Fraction(0), Fraction(1)

    def add(face, dkind, ref, start, end):
        d = Dart(len(cx.darts), face, dkind, ref, start, end)
        cx.darts.append(d)
        cx.faces.setdefault(face, []).append(d.id)
        return d

    for i, s in table.strips():
        face = (i, s)
        c = table.cuts[i]
        add(face, "bottom", (), (i, s, 0, zero), (i, s, 1, zero))
        if s < c:
            add(face, "cut", (s, "g"), (i, s, 1, zero), (i, s, 1, one))
        else:
            for segkind, idx, lo, hi in _outer_segments(layout, table.bands[i]):
                add(face, segkind, (idx, LAST), (i, s, 1, lo), (i, s, 1, hi))
        add(face, "top", (), (i, s, 1, one), (i, s, 0, one))
        if s > 0:
            add(face, "cut", (s - 1, "d"), (i, s, 0, one), (i, s, 0, zero))
        else:
            for segkind, idx, lo, hi in reversed(_outer_segments(layout, table.bands[i])):
                add(face, segkind, (idx, FIRST), (i, s, 0, hi), (i, s, 0, lo))
        ids = cx.faces[face]
        for a, did in enumerate(ids):
            cx.darts[did].next = ids[(a + 1) % len(ids)]
            cx.darts[did].prev = ids[a - 1]

    for (i, l), (k, m, eps) in table.cut_partner.items():
        for bank, strip in (("g", l), ("d", l + 1)):
            d = cx.find((i, strip), "cut", (l, bank))
            kk, mm, outer, _ = table.bank_target(i, l, bank)
            e = cx.find((k, table.outer_strip(k, outer)), "band", (mm, outer))
            B = table.height_map(layout, k, m, eps)
            # a gluing must reverse the boundary direction of the two strips
            if (B(d.start[3]), B(d.end[3])) != (e.end[3], e.start[3]):
                raise NonOrientable(f"cut ({i},{l}) bank {bank} glued without reversing")
            d.twin, e.twin = e.id, d.id
    return cx


def unstable_complex_via_transpose(T: GeometricType, layout: BandLayout = THIRDS) -> SurfaceComplex:
    from ..geomtype import transpose

    return build_complex(transpose(T), "stable", layout)
