"""Symbolic dynamics of a geometric type.

Symbols are the horizontal bands ``(i, j)``. The return map sends band
``(i, j)`` across rectangle ``k = phi(i, j).k``, so ``(i, j)`` may be followed
by any band ``(k, j')`` of that rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import networkx as nx
import numpy as np

from .geomtype import GeometricType, Symbol

Side = Literal["stable", "unstable"]

STABLE_SIDES = ("left", "right")
UNSTABLE_SIDES = ("low", "high")


def symbol_graph(T: GeometricType) -> nx.DiGraph:
    G = nx.DiGraph()
    G.add_nodes_from(T.symbols())
    for i, j in T.symbols():
        k = T.target(i, j).k
        for jj in range(T.h[k]):
            G.add_edge((i, j), (k, jj))
    return G


@dataclass(frozen=True)
class BasicPiece:
    id: int
    symbols: frozenset[Symbol]
    trivial: bool


def basic_pieces(T: GeometricType) -> tuple[list[BasicPiece], list[Symbol]]:
    """Strongly connected components carrying a cycle, and the wandering rest.

    Pieces are numbered by their smallest symbol.
    """
    G = symbol_graph(T)
    comps = []
    wandering = []
    for comp in nx.strongly_connected_components(G):
        if len(comp) > 1 or any(G.has_edge(s, s) for s in comp):
            comps.append(frozenset(comp))
        else:
            wandering.extend(comp)
    comps.sort(key=min)
    pieces = []
    for idx, comp in enumerate(comps):
        # a single periodic orbit: every symbol has exactly one successor inside
        trivial = all(sum(1 for t in G.successors(s) if t in comp) == 1 for s in comp)
        pieces.append(BasicPiece(idx, comp, trivial))
    return pieces, sorted(wandering)


def is_transitive(T: GeometricType) -> bool:
    pieces, wandering = basic_pieces(T)
    return len(pieces) == 1 and not wandering


def adjacency_matrix(T: GeometricType) -> np.ndarray:
    syms = list(T.symbols())
    index = {s: a for a, s in enumerate(syms)}
    M = np.zeros((len(syms), len(syms)), dtype=object)
    for s, t in symbol_graph(T).edges:
        M[index[s], index[t]] = 1
    return M


def count_periodic_itineraries(T: GeometricType, p: int) -> int:
    """Number of points of period ``p`` (not necessarily least), ``trace(M^p)``."""
    if p < 1:
        raise ValueError("period must be positive")
    M = adjacency_matrix(T)
    return int(np.trace(np.linalg.matrix_power(M, p)))


@dataclass(frozen=True)
class PeriodicOrbit:
    """A primitive periodic orbit, stored as its lexicographically least rotation."""

    word: tuple[Symbol, ...]
    sign: int

    @property
    def period(self) -> int:
        return len(self.word)

    def label(self) -> str:
        return "".join(f"({i + 1},{j + 1})" for i, j in self.word)


def least_rotation(word) -> tuple:
    word = tuple(word)
    return min(word[r:] + word[:r] for r in range(len(word)))


def primitive_root(word) -> tuple:
    word = tuple(word)
    p = len(word)
    for d in range(1, p + 1):
        if p % d == 0 and word == word[:d] * (p // d):
            return word[:d]
    return word


def orbit_sign(T: GeometricType, word) -> int:
    sign = 1
    for i, j in word:
        sign *= T.target(i, j).eps
    return sign


def make_orbit(T: GeometricType, word) -> PeriodicOrbit:
    """Canonical primitive orbit through a closed itinerary."""
    word = tuple(word)
    n = len(word)
    for a in range(n):
        (i, j), (k, _) = word[a], word[(a + 1) % n]
        if T.target(i, j).k != k:
            raise ValueError(f"{word!r} is not an admissible cyclic itinerary")
    root = least_rotation(primitive_root(word))
    return PeriodicOrbit(root, orbit_sign(T, root))


def periodic_orbits(T: GeometricType, max_period: int) -> list[PeriodicOrbit]:
    """All primitive periodic orbits of period at most ``max_period``."""
    G = symbol_graph(T)
    found: list[PeriodicOrbit] = []
    syms = sorted(G.nodes)
    for start in syms:
        # words whose least rotation starts here: no symbol is below start
        stack = [(start, (start,))]
        while stack:
            node, word = stack.pop()
            for nxt in G.successors(node):
                if nxt == start and least_rotation(word) == word and primitive_root(word) == word:
                    found.append(PeriodicOrbit(word, orbit_sign(T, word)))
                if nxt >= start and len(word) < max_period:
                    stack.append((nxt, word + (nxt,)))
    found.sort(key=lambda o: (o.period, o.word))
    return found


@dataclass(frozen=True)
class SeparatrixCycle:
    """One cycle of the extremal map.

    ``states`` lists ``(rect, side)`` pairs in iteration order, ``bands`` the band
    used at each step. On the stable side ``bands[t]`` is the horizontal band
    whose image is the extremal vertical band of ``states[t]``; on the unstable
    side it is the extremal horizontal band of ``states[t]`` itself.
    """

    kind: Side
    states: tuple[tuple[int, str], ...]
    bands: tuple[Symbol, ...]
    orbit: PeriodicOrbit

    @property
    def itinerary(self) -> tuple[Symbol, ...]:
        """Forward itinerary of the orbit point attached to ``states[0]``."""
        if self.kind == "unstable":
            return self.bands
        return tuple(reversed(self.bands))


def extremal_successor(T: GeometricType, kind: Side, state: tuple[int, str]):
    """One step of the extremal map: returns ``(next_state, band)``."""
    i, side = state
    if kind == "stable":
        first = side == "left"
        l = 0 if first else T.v[i] - 1
        k, m, eps = T.source(i, l)
        nxt = side if eps == 1 else ("right" if first else "left")
        return (k, nxt), (k, m)
    first = side == "low"
    j = 0 if first else T.h[i] - 1
    t = T.target(i, j)
    nxt = side if t.eps == 1 else ("high" if first else "low")
    return (t.k, nxt), (i, j)


def _state_order(state: tuple[int, str]) -> tuple[int, int]:
    return state[0], state[1] in ("right", "high")


def extremal_states(T: GeometricType, kind: Side) -> list[tuple[int, str]]:
    names = STABLE_SIDES if kind == "stable" else UNSTABLE_SIDES
    return [(i, s) for i in range(T.n) for s in names]


def free_separatrices(T: GeometricType, kind: Side) -> list[SeparatrixCycle]:
    """Cycles of the extremal map, one per free separatrix.

    Each cycle is rotated to start at its least state; cycles are sorted by
    that state.
    """
    succ = {s: extremal_successor(T, kind, s) for s in extremal_states(T, kind)}
    on_cycle: set = set()
    cycles = []
    for start in succ:
        seen: dict = {}
        s = start
        while s not in seen and s not in on_cycle:
            seen[s] = len(seen)
            s = succ[s][0]
        if s in on_cycle:
            continue
        # s closes a fresh cycle
        loop = []
        t = s
        while True:
            loop.append(t)
            t = succ[t][0]
            if t == s:
                break
        on_cycle.update(loop)
        r = loop.index(min(loop, key=_state_order))
        loop = loop[r:] + loop[:r]
        bands = tuple(succ[x][1] for x in loop)
        cyc = SeparatrixCycle(kind, tuple(loop), bands, None)
        cycles.append(SeparatrixCycle(kind, tuple(loop), bands, make_orbit(T, cyc.itinerary)))
    cycles.sort(key=lambda c: _state_order(c.states[0]))
    return cycles


def transient_states(T: GeometricType, kind: Side) -> list[tuple[int, str]]:
    cyc = {s for c in free_separatrices(T, kind) for s in c.states}
    return [s for s in extremal_states(T, kind) if s not in cyc]


def smale_graph_of_type(T: GeometricType) -> nx.DiGraph:
    """Directed graph on basic pieces; ``a -> b`` when ``a`` reaches ``b``.

    Reachability may pass through wandering symbols. Self-loops are omitted.
    """
    pieces, _ = basic_pieces(T)
    G = symbol_graph(T)
    S = nx.DiGraph()
    S.add_nodes_from(p.id for p in pieces)
    owner = {s: p.id for p in pieces for s in p.symbols}
    for p in pieces:
        reach = nx.descendants(G, min(p.symbols))
        for s in reach:
            q = owner.get(s)
            if q is not None and q != p.id:
                S.add_edge(p.id, q)
    return S
