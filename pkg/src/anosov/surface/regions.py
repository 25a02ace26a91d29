"""Complementary regions of the lamination that reach the boundary.

A piece is a strip crossed with one gap of ``K_i``. Three kinds of pieces
matter:

* ``B`` -- the gap ``[0, min K_i)`` of any strip,
* ``T`` -- the gap ``(max K_i, 1]`` of any strip,
* ``M`` -- a gap between two consecutive bands, in an outer strip only.

Every other piece (gaps inside a band, or between bands in a middle strip) lies
on an infinite chain of pieces that spirals onto compact leaves, and such a
chain is always a strip. The inner end of an ``M`` piece starts such a chain;
we call it a tentacle.

Each cut bank glues the ends of its ``B`` and ``T`` pieces onto portions of the
outer pieces of the partner rectangle, giving ``4 * sum(cuts)`` gluings. After
capping the boundary circles of the complex with disks, a region has Euler
characteristic ``#pieces - #gluings + #caps``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from .census import boundary_cycles, component_of, raw_census
from .complex import FIRST, LAST, SurfaceComplex
from .lamination import CycleLeaf, Extremes, cycle_leaves, extremes, leaf_itinerary, MAX, MIN

Piece = tuple  # ("B", i, s) | ("T", i, s) | ("M", i, s, g)


@dataclass
class Region:
    id: int
    component: int
    pieces: list = field(default_factory=list)
    gluings: int = 0
    caps: int = 0
    circles: list = field(default_factory=list)  # list of (states, tentacles)
    kind: str = ""
    leaves: list = field(default_factory=list)  # cycle leaves of pure circles

    @property
    def chi(self) -> int:
        return len(self.pieces) - self.gluings + self.caps

    @property
    def tentacles(self) -> int:
        return sum(1 for p in self.pieces if p[0] == "M")


class RegionAnalysis:
    """Pieces, gluings and frontier walks of one strip complex."""

    def __init__(self, cx: SurfaceComplex):
        self.cx = cx
        self.table = cx.table
        self.layout = cx.layout
        self.ext: Extremes = extremes(cx.table, cx.layout)
        self.raw = raw_census(cx)
        self.component_of = component_of(self.raw)
        self.leaves: list[CycleLeaf] = cycle_leaves(cx)
        self.pieces = self._pieces()
        self.gluings = self._gluings()
        self.regions = self._regions()

    # -------------------------------------------------------------- pieces

    def outer_piece(self, i: int, outer: str, g: int) -> Piece:
        s = self.table.outer_strip(i, outer)
        if g == 0:
            return ("B", i, s)
        if g == self.table.bands[i]:
            return ("T", i, s)
        return ("M", i, s, g)

    def _pieces(self) -> list[Piece]:
        out = []
        for i, s in self.table.strips():
            out.append(("B", i, s))
            out.append(("T", i, s))
            if s in (0, self.table.cuts[i]):
                out.extend(("M", i, s, g) for g in range(1, self.table.bands[i]))
        return out

    def interval(self, p: Piece) -> tuple[Fraction, Fraction]:
        i = p[1]
        if p[0] == "B":
            return Fraction(0), self.ext.lo[i]
        if p[0] == "T":
            return self.ext.hi[i], Fraction(1)
        g = p[3]
        return self.ext.band_max[i][g - 1], self.ext.band_min[i][g]

    def side_height(self, p: Piece, side: str) -> Fraction:
        a, b = self.interval(p)
        return a if side == "lo" else b

    def sides(self, p: Piece) -> list[str]:
        if p[0] == "B":
            return ["up"]
        if p[0] == "T":
            return ["lo"]
        return ["lo", "up"]

    def bank_gluing(self, i: int, l: int, bank: str, which: str):
        """Where the end of piece ``which`` (B or T) at a cut bank lands.

        Returns ``(outer_piece, side)``: the piece receiving it and which of its
        leaf sides continues the leaf side of the B/T piece.
        """
        k, m, outer, eps = self.table.bank_target(i, l, bank)
        if (which == "B") == (eps == 1):
            return self.outer_piece(k, outer, m), "up"
        return self.outer_piece(k, outer, m + 1), "lo"

    def _gluings(self) -> list[tuple[Piece, Piece]]:
        out = []
        for (i, l) in sorted(self.table.cut_partner):
            for bank, s in (("g", l), ("d", l + 1)):
                for which in ("B", "T"):
                    target, _ = self.bank_gluing(i, l, bank, which)
                    out.append(((which, i, s), target))
        return out

    # ----------------------------------------------------------- frontier walk

    def _end(self, p: Piece, direction: int):
        """What lies at the end of piece ``p`` reached moving in ``direction``."""
        i, s = p[1], p[2]
        c = self.table.cuts[i]
        if direction == 1:
            return ("bank", s, "g") if s < c else ("outer", LAST)
        return ("bank", s - 1, "d") if s > 0 else ("outer", FIRST)

    def successor(self, state):
        """Next leaf side along a frontier circle; returns ``(state, tentacle)``.

        A leaf side is walked keeping the region on the left: lower sides move
        in ``+x``, upper sides in ``-x``.
        """
        p, side = state
        direction = 1 if side == "lo" else -1
        end = self._end(p, direction)
        i = p[1]
        if end[0] == "bank":
            if p[0] == "M":
                return (p, "up" if side == "lo" else "lo"), True
            q, qside = self.bank_gluing(i, end[1], end[2], p[0])
            return (q, qside), False
        outer = end[1]
        g = {"B": 0, "T": self.table.bands[i]}.get(p[0], p[3] if p[0] == "M" else None)
        m = g - 1 if side == "lo" else g
        k, l, bank, eps = self.table.band_source(i, m, outer)
        strip = l if bank == "g" else l + 1
        if side == "lo":
            # lower side continues into the portion just above band m
            return ((("T", k, strip), "lo") if eps == 1 else (("B", k, strip), "up")), False
        return ((("B", k, strip), "up") if eps == 1 else (("T", k, strip), "lo")), False

    def circles(self) -> list[tuple[list, int]]:
        states = [(p, side) for p in self.pieces for side in self.sides(p)]
        seen: set = set()
        out = []
        for st in states:
            if st in seen:
                continue
            cyc, tent = [], 0
            cur = st
            while cur not in seen:
                seen.add(cur)
                cyc.append(cur)
                cur, t = self.successor(cur)
                tent += t
            if cur != st:
                raise AssertionError("frontier walk is not a permutation")
            out.append((cyc, tent))
        return out

    def leaf_of_circle(self, cyc) -> CycleLeaf:
        segs = frozenset((p[1], p[2], self.side_height(p, side)) for p, side in cyc)
        for leaf in self.leaves:
            if leaf.segments(self.table) == segs:
                return leaf
        raise AssertionError(f"closed frontier circle {segs} matches no extremal cycle")

    # --------------------------------------------------------------- regions

    def _regions(self) -> list[Region]:
        G = nx.Graph()
        G.add_nodes_from(self.pieces)
        G.add_edges_from(self.gluings)
        comps = sorted((sorted(c) for c in nx.connected_components(G)), key=lambda c: c[0])
        region_of = {}
        regions = []
        for rid, comp in enumerate(comps):
            r = Region(rid, self.component_of[(comp[0][1], comp[0][2])], comp)
            regions.append(r)
            for p in comp:
                region_of[p] = r
        self.region_of = region_of
        for a, _ in self.gluings:
            region_of[a].gluings += 1
        for cyc in boundary_cycles(self.cx):
            owners = {region_of[self.dart_piece(d)].id for d in cyc}
            assert len(owners) == 1, "boundary circle crosses regions"
            regions[owners.pop()].caps += 1
        for cyc, tent in self.circles():
            r = region_of[cyc[0][0]]
            r.circles.append((cyc, tent))
            if tent == 0:
                r.leaves.append(self.leaf_of_circle(cyc))
        for r in regions:
            pure = [c for c in r.circles if c[1] == 0]
            if r.chi == 1 and len(r.circles) == 1 and pure and r.tentacles == 0:
                r.kind = "cap"
            elif r.chi == 1 and len(r.circles) == 1 and r.circles[0][1] == 2:
                r.kind = "strip"
            elif pure:
                r.kind = "compact-non-cap"
            else:
                r.kind = "non-strip"
        return regions

    def dart_piece(self, did: int) -> Piece:
        d = self.cx.darts[did]
        i, s = d.face
        if d.kind == "bottom":
            return ("B", i, s)
        if d.kind == "top":
            return ("T", i, s)
        if d.kind == "gap":
            g, outer = d.ref
            return self.outer_piece(i, outer, g)
        raise ValueError(f"dart {did} is not free")

    # ------------------------------------------------------------ reporting

    def caps_by_component(self) -> dict[int, list[Region]]:
        out: dict[int, list[Region]] = {c.id: [] for c in self.raw}
        for r in self.regions:
            if r.kind == "cap":
                out[r.component].append(r)
        return out

    def gap_report(self) -> list["GapEntry"]:
        entries = []
        table = self.table
        for i in range(table.n):
            for outer in (FIRST, LAST):
                for g in range(table.bands[i] + 1):
                    p = self.outer_piece(i, outer, g)
                    r = self.region_of[p]
                    lower = upper = None
                    if g > 0:
                        lower = self._bounding_leaf(p, "lo", i, g - 1, MAX)
                    if g < table.bands[i]:
                        upper = self._bounding_leaf(p, "up", i, g, MIN)
                    entries.append(
                        GapEntry(i, table.side_name(outer), g, lower, upper, r.kind, r.id, r.component)
                    )
        return entries

    def _bounding_leaf(self, p, side, i, m, which) -> "BoundingLeaf":
        prefix, period = leaf_itinerary(self.table, self.layout, i, m, which)
        circle = next(c for c in self.circles_cache() if (p, side) in c[0])
        return BoundingLeaf(self.side_height(p, side), prefix, period, circle[1] == 0)

    def circles_cache(self):
        if not hasattr(self, "_circles"):
            self._circles = [(set(c), t) for r in self.regions for c, t in r.circles]
        return self._circles


@dataclass(frozen=True)
class BoundingLeaf:
    height: Fraction
    prefix: tuple
    period: tuple
    compact: bool

    def label(self) -> str:
        fmt = lambda w: "".join(f"({a + 1},{b + 1})" for a, b in w)
        return f"{fmt(self.prefix)}[{fmt(self.period)}]^inf"


@dataclass(frozen=True)
class GapEntry:
    """One level-0 gap segment on an outer side of a rectangle."""

    rect: int
    side: str
    gap: int
    lower: BoundingLeaf | None
    upper: BoundingLeaf | None
    kind: str
    region: int
    component: int

    @property
    def cap(self) -> bool:
        return self.kind == "cap"
