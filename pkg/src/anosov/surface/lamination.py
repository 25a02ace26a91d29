"""Leaves of the lamination on a strip complex, in exact arithmetic.

Inside rectangle ``i`` the lamination meets every strip in the horizontal
segments at heights of a compact set ``K_i``; ``K_i`` is the union over bands
``m`` of the images of ``K_k`` under the band map of ``(i, m)``, where ``k`` is
the rectangle of the partner cut. Only extreme points of these sets are ever
needed, and they are solved for exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import TraceDiverged
from ..symdyn import PeriodicOrbit, make_orbit
from .complex import FIRST, LAST, StripTable, SurfaceComplex
from .layout import Affine, BandLayout

MIN, MAX = "min", "max"


def solve_chain(states, step) -> dict:
    """Solve ``value(s) = A_s(value(next(s)))`` for a deterministic ``step``.

    ``step(s)`` returns ``(next_state, A_s)``. Every orbit ends in a cycle
    whose composed map is a contraction, so all values are determined.
    """
    values: dict = {}
    for start in states:
        path = []
        index: dict = {}
        s = start
        while s not in values and s not in index:
            index[s] = len(path)
            path.append(s)
            s = step(s)[0]
        if s not in values:
            loop = path[index[s]:]
            total = None
            for t in reversed(loop):
                A = step(t)[1]
                total = A if total is None else total.then(A)
            values[loop[0]] = total.fixed_point()
            for t in reversed(loop[1:]):
                values[t] = step(t)[1](values[step(t)[0]])
            path = path[: index[s]]
        for t in reversed(path):
            nxt, A = step(t)
            values[t] = A(values[nxt])
    return values


@dataclass(frozen=True)
class Extremes:
    """``lo[i] = min K_i``, ``hi[i] = max K_i`` and the per-band extremes."""

    lo: tuple[Fraction, ...]
    hi: tuple[Fraction, ...]
    band_min: tuple[tuple[Fraction, ...], ...]
    band_max: tuple[tuple[Fraction, ...], ...]


def band_extremal_step(table: StripTable, layout: BandLayout, state):
    i, which = state
    m = 0 if which == MIN else table.bands[i] - 1
    k, _, eps = table.band_partner[(i, m)]
    nxt = which if eps == 1 else (MAX if which == MIN else MIN)
    return (k, nxt), layout.embed(m, table.bands[i], eps)


def extremes(table: StripTable, layout: BandLayout) -> Extremes:
    states = [(i, w) for i in range(table.n) for w in (MIN, MAX)]
    val = solve_chain(states, lambda s: band_extremal_step(table, layout, s))
    lo = tuple(val[(i, MIN)] for i in range(table.n))
    hi = tuple(val[(i, MAX)] for i in range(table.n))
    bmin, bmax = [], []
    for i in range(table.n):
        rmin, rmax = [], []
        for m in range(table.bands[i]):
            k, _, eps = table.band_partner[(i, m)]
            B = layout.embed(m, table.bands[i], eps)
            a, b = B(lo[k]), B(hi[k])
            rmin.append(min(a, b))
            rmax.append(max(a, b))
        bmin.append(tuple(rmin))
        bmax.append(tuple(rmax))
    return Extremes(lo, hi, tuple(bmin), tuple(bmax))


def leaf_itinerary(table: StripTable, layout: BandLayout, i: int, m: int, which: str):
    """Band itinerary of the leaf at the ``which`` extreme of ``K_i`` in band ``m``.

    Returns ``(prefix, period)``: the symbol sequence is ``prefix`` followed by
    ``period`` repeated forever.
    """
    word = [(i, m)]
    k, _, eps = table.band_partner[(i, m)]
    state = (k, which if eps == 1 else (MAX if which == MIN else MIN))
    seen = {}
    while state not in seen:
        seen[state] = len(word)
        j, w = state
        mm = 0 if w == MIN else table.bands[j] - 1
        word.append((j, mm))
        state = band_extremal_step(table, layout, state)[0]
    cut = seen[state]
    prefix, period = word[:cut], word[cut:]
    while prefix and prefix[-1] == period[-1]:
        period = [prefix.pop()] + period[:-1]
    return tuple(prefix), tuple(period)


# ---------------------------------------------------------------- leaves


@dataclass(frozen=True)
class CycleLeaf:
    """Compact leaf of one extremal cycle: one segment per state."""

    index: int
    states: tuple[tuple[int, str], ...]
    partners: tuple[tuple[int, int, int], ...]
    heights: tuple[Fraction, ...]
    orbit: PeriodicOrbit

    def segments(self, table: StripTable) -> frozenset:
        return frozenset(
            (i, table.outer_strip(i, side), y) for (i, side), y in zip(self.states, self.heights)
        )


def cycle_leaves(cx: SurfaceComplex) -> list[CycleLeaf]:
    """Cycles of the cut-extremal map with their exact leaf heights.

    The orbit of each cycle is written in the horizontal-band symbols of the
    original type, whichever side the complex models.
    """
    table, layout = cx.table, cx.layout
    states = [(i, s) for i in range(table.n) for s in (FIRST, LAST)]
    succ = {s: table.extremal_successor(s) for s in states}
    order = lambda x: (x[0], x[1] != FIRST)
    out = []
    seen: set = set()
    for start in states:
        path: list = []
        s = start
        while s not in path and s not in seen:
            path.append(s)
            s = succ[s][0]
        seen.update(path)
        if s not in path:
            continue
        loop = path[path.index(s):]
        r = loop.index(min(loop, key=order))
        loop = loop[r:] + loop[:r]
        partners = [succ[x][1] for x in loop]
        total: Affine | None = None
        for k, m, eps in partners:
            A = layout.embed(m, table.bands[k], eps)
            total = A if total is None else total.then(A)
        ys = [total.fixed_point()]
        for k, m, eps in partners[:-1]:
            ys.append(layout.embed(m, table.bands[k], eps)(ys[-1]))
        if cx.kind == "stable":
            word = [(k, m) for k, m, _ in reversed(partners)]
        else:
            word = [(i, 0 if side == FIRST else table.cuts[i] - 1) for i, side in loop]
        out.append((tuple(loop), tuple(partners), tuple(ys), make_orbit(cx.T, word)))
    out.sort(key=lambda c: order(c[0][0]))
    return [CycleLeaf(n, *c) for n, c in enumerate(out)]


@dataclass(frozen=True)
class LeafTrace:
    start: CycleLeaf
    steps: tuple[tuple[int, int, Fraction, int], ...]  # (rect, strip, height, direction)
    closed: bool
    component: int


def step_line(table: StripTable, layout: BandLayout, state):
    """Follow a horizontal line to the next strip; ``None`` at free boundary."""
    i, s, y, direction = state
    c = table.cuts[i]
    if direction == 1 and s < c:
        return _through_bank(table, layout, i, s, "g", y)
    if direction == -1 and s > 0:
        return _through_bank(table, layout, i, s - 1, "d", y)
    outer = LAST if direction == 1 else FIRST
    for m in range(table.bands[i]):
        lo, hi = layout.band(m, table.bands[i])
        if lo <= y <= hi:
            k, l, bank, eps = table.band_source(i, m, outer)
            t = layout.embed(m, table.bands[i], eps).inverse()(y)
            if bank == "g":
                return (k, l, t, -1)
            return (k, l + 1, t, 1)
    return None


def _through_bank(table, layout, i, l, bank, y):
    k, m, outer, eps = table.bank_target(i, l, bank)
    z = layout.embed(m, table.bands[k], eps)(y)
    if outer == FIRST:
        return (k, 0, z, 1)
    return (k, table.cuts[k], z, -1)


def trace_leaf(cx: SurfaceComplex, leaf: CycleLeaf, component_of: dict, bound: int | None = None) -> LeafTrace:
    table = cx.table
    i, side = leaf.states[0]
    s = table.outer_strip(i, side)
    # move away from the outer side, into the first cut
    direction = 1 if side == FIRST else -1
    start = (i, s, leaf.heights[0], direction)
    if bound is None:
        bound = len(leaf.states) * sum(table.cuts) * (max(table.cuts) + 1)
    steps = [start]
    state = start
    for _ in range(bound):
        state = step_line(table, cx.layout, state)
        if state is None:
            break
        if state == start:
            return LeafTrace(leaf, tuple(steps), True, component_of[(i, s)])
        steps.append(state)
    raise TraceDiverged(f"leaf of cycle {leaf.index} did not close within {bound} steps")
