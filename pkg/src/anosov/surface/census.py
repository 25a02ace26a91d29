"""Topology of the raw strip complex: components, Euler characteristic, boundary."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ..errors import NonOrientable
from .complex import SurfaceComplex


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class RawComponent:
    """One connected component of the complex before any capping."""

    id: int
    strips: tuple[tuple[int, int], ...]
    vertices: int
    edges: int
    faces: int
    boundary_circles: int
    tally_chi: int

    @property
    def chi(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def capped_chi(self) -> int:
        return self.chi + self.boundary_circles

    @property
    def capped_genus(self) -> int:
        return (2 - self.capped_chi) // 2


def face_components(cx: SurfaceComplex) -> list[tuple[tuple[int, int], ...]]:
    G = nx.Graph()
    G.add_nodes_from(cx.faces)
    for d in cx.darts:
        if d.twin is not None:
            G.add_edge(d.face, cx.darts[d.twin].face)
    comps = [tuple(sorted(c)) for c in nx.connected_components(G)]
    comps.sort()
    return comps


def check_orientable(cx: SurfaceComplex) -> None:
    """Every glued pair of darts must run in opposite directions."""
    uf = _UnionFind()
    for d in cx.darts:
        if d.twin is not None:
            e = cx.darts[d.twin]
            uf.union(d.start, e.end)
            uf.union(d.end, e.start)
    for d in cx.darts:
        if d.twin is not None:
            e = cx.darts[d.twin]
            if uf.find(d.start) != uf.find(e.end) or d.twin == d.id:
                raise NonOrientable(f"dart {d.id}")


def boundary_cycles(cx: SurfaceComplex, darts=None) -> list[list[int]]:
    """Walk free darts through vertex fans; each cycle is one boundary circle."""
    free = [d.id for d in cx.darts if d.twin is None and (darts is None or d.id in darts)]
    seen: set[int] = set()
    cycles = []
    for start in free:
        if start in seen:
            continue
        cyc = []
        d = start
        while d not in seen:
            seen.add(d)
            cyc.append(d)
            e = cx.darts[d].next
            while cx.darts[e].twin is not None:
                e = cx.darts[cx.darts[e].twin].next
            d = e
        if d != start:
            raise NonOrientable("boundary walk did not close")
        cycles.append(cyc)
    return cycles


def _vertex_count_by_coordinates(cx: SurfaceComplex, darts) -> int:
    uf = _UnionFind()
    for did in darts:
        d = cx.darts[did]
        uf.find(d.start)
        uf.find(d.end)
        if d.twin is not None:
            e = cx.darts[d.twin]
            uf.union(d.start, e.end)
            uf.union(d.end, e.start)
    return len({uf.find(cx.darts[did].start) for did in darts})


def _tally_chi(cx: SurfaceComplex, darts, faces: int) -> int:
    """Independent count from dart incidences: corners grouped into fans."""
    nd = len(darts)
    nfree = sum(1 for did in darts if cx.darts[did].twin is None)
    edges, rem = divmod(nd + nfree, 2)
    assert rem == 0
    # corner at the start of d is adjacent to the corner at the start of next(twin(d))
    G = nx.Graph()
    G.add_nodes_from(darts)
    for did in darts:
        t = cx.darts[did].twin
        if t is not None:
            G.add_edge(did, cx.darts[t].next)
    vertices = nx.number_connected_components(G)
    return vertices - edges + faces


def raw_census(cx: SurfaceComplex) -> list[RawComponent]:
    check_orientable(cx)
    out = []
    for cid, strips in enumerate(face_components(cx)):
        darts = {did for f in strips for did in cx.faces[f]}
        nfree = sum(1 for did in darts if cx.darts[did].twin is None)
        edges = (len(darts) - nfree) // 2 + nfree
        vertices = _vertex_count_by_coordinates(cx, darts)
        circles = len(boundary_cycles(cx, darts))
        out.append(
            RawComponent(cid, strips, vertices, edges, len(strips), circles, _tally_chi(cx, sorted(darts), len(strips)))
        )
    return out


def component_of(components: list[RawComponent]) -> dict:
    return {s: c.id for c in components for s in c.strips}
