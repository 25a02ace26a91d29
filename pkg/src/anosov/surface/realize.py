"""Boundary census, realizability of a filled block, and its boundary tori."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

import networkx as nx

from ..errors import UnpairedSeparatrix
from ..geomtype import GeometricType
from ..symdyn import PeriodicOrbit
from .complex import SurfaceComplex, build_complex
from .layout import THIRDS, BandLayout
from .regions import RegionAnalysis

SIDES = ("stable", "unstable")
VIOLATION_KINDS = (
    "BadGenus",
    "WrongCapCount",
    "SharedCapLeaf",
    "CompactNonCapGap",
    "NonStripGap",
    "NegativeCapOrbit",
    "EmptyLaminationComponent",
)


@dataclass(frozen=True)
class SurfaceComponent:
    """A component of the boundary surface carrying the lamination.

    ``chi`` and ``boundary_circles`` describe the capped surface with the open
    cap disks removed; ``complex_chi`` and ``complex_boundary_circles``
    describe the raw strip complex.
    """

    id: int
    strips: tuple[tuple[int, int], ...]
    chi: int
    boundary_circles: int
    capped_genus: int
    complex_chi: int
    complex_boundary_circles: int
    orientable: bool
    compact_leaves: tuple[int, ...]
    cap_leaves: tuple[int, ...]

    @property
    def is_sphere(self) -> bool:
        return self.capped_genus == 0


def surface_census(cx: SurfaceComplex, analysis: RegionAnalysis | None = None) -> list[SurfaceComponent]:
    ra = analysis or RegionAnalysis(cx)
    caps = ra.caps_by_component()
    leaves_by_comp = defaultdict(list)
    for leaf in ra.leaves:
        i, side = leaf.states[0]
        leaves_by_comp[ra.component_of[(i, ra.table.outer_strip(i, side))]].append(leaf.index)
    out = []
    for c in ra.raw:
        d = len(caps[c.id])
        out.append(
            SurfaceComponent(
                id=c.id,
                strips=c.strips,
                chi=c.capped_chi - d,
                boundary_circles=d,
                capped_genus=c.capped_genus,
                complex_chi=c.chi,
                complex_boundary_circles=c.boundary_circles,
                orientable=True,
                compact_leaves=tuple(leaves_by_comp[c.id]),
                cap_leaves=tuple(sorted(r.leaves[0].index for r in caps[c.id])),
            )
        )
    return out


@dataclass(frozen=True)
class Violation:
    kind: str
    side: str
    component: int
    detail: str

    def label(self) -> str:
        return f"{self.kind}({self.side}:{self.component}) {self.detail}"


@dataclass(frozen=True)
class BlockTorus:
    orbits: tuple[PeriodicOrbit, ...]
    entrance_components: tuple[int, ...]
    exit_components: tuple[int, ...]

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(o.sign for o in self.orbits)


@dataclass(frozen=True)
class BlockBoundarySummary:
    tori: tuple[BlockTorus, ...]


@dataclass
class SideReport:
    side: str
    complex: SurfaceComplex
    analysis: RegionAnalysis
    components: list[SurfaceComponent]


@dataclass
class RealizabilityVerdict:
    realizable: bool
    sides: dict[str, SideReport]
    violations: list[Violation] = field(default_factory=list)
    summary: BlockBoundarySummary | None = None


def side_violations(rep: SideReport) -> list[Violation]:
    ra = rep.analysis
    side = rep.side
    out = []
    caps = ra.caps_by_component()
    leaves = {leaf.index: leaf for leaf in ra.leaves}
    for comp in rep.components:
        if not comp.compact_leaves and not any(r.component == comp.id for r in ra.regions if r.circles):
            out.append(Violation("EmptyLaminationComponent", side, comp.id, "no lamination"))
        g = comp.capped_genus
        d = caps[comp.id]
        if g > 1:
            out.append(Violation("BadGenus", side, comp.id, f"capped genus {g}"))
        elif g == 0 and len(d) != 2:
            out.append(Violation("WrongCapCount", side, comp.id, f"sphere with {len(d)} caps"))
        elif g == 1 and d:
            out.append(Violation("WrongCapCount", side, comp.id, f"torus with {len(d)} caps"))
        if g == 0 and len(d) == 2:
            a, b = (r.leaves[0] for r in d)
            if a.index == b.index:
                out.append(Violation("SharedCapLeaf", side, comp.id, f"both caps bound leaf {a.index}"))
            elif a.orbit == b.orbit:
                out.append(Violation("SharedCapLeaf", side, comp.id, f"both caps bound orbit {a.orbit.label()}"))
        for r in d:
            leaf = leaves[r.leaves[0].index]
            if leaf.orbit.sign != 1:
                out.append(Violation("NegativeCapOrbit", side, comp.id, f"orbit {leaf.orbit.label()}"))
    for r in ra.regions:
        if r.kind == "compact-non-cap":
            out.append(Violation("CompactNonCapGap", side, r.component, f"region {r.id}"))
        elif r.kind == "non-strip":
            out.append(Violation("NonStripGap", side, r.component, f"region {r.id}"))
    return out


def analyze_side(T: GeometricType, side: str, layout: BandLayout = THIRDS) -> SideReport:
    cx = build_complex(T, side, layout)
    ra = RegionAnalysis(cx)
    return SideReport(side, cx, ra, surface_census(cx, ra))


def check_realizable_filled(T: GeometricType, layout: BandLayout = THIRDS) -> RealizabilityVerdict:
    sides = {s: analyze_side(T, s, layout) for s in SIDES}
    violations = [v for s in SIDES for v in side_violations(sides[s])]
    verdict = RealizabilityVerdict(not violations, sides, violations)
    if verdict.realizable:
        verdict.summary = _summary(sides)
    return verdict


def _cap_orbits(rep: SideReport) -> list[tuple[int, PeriodicOrbit]]:
    caps = rep.analysis.caps_by_component()
    return [(cid, r.leaves[0].orbit) for cid, regs in sorted(caps.items()) for r in regs]


def _summary(sides: dict[str, SideReport]) -> BlockBoundarySummary:
    ins = _cap_orbits(sides["stable"])
    outs = _cap_orbits(sides["unstable"])
    cin = Counter(o for _, o in ins)
    cout = Counter(o for _, o in outs)
    for o in sorted(set(cin) | set(cout), key=lambda o: o.word):
        if cin[o] != cout[o]:
            raise UnpairedSeparatrix(
                f"orbit {o.label()} bounds {cin[o]} entrance caps and {cout[o]} exit caps"
            )
    G = nx.MultiGraph()
    for comp in sides["stable"].components:
        G.add_node(("in", comp.id))
    for comp in sides["unstable"].components:
        G.add_node(("out", comp.id))
    pool = defaultdict(list)
    for cid, o in outs:
        pool[o].append(cid)
    for cid, o in ins:
        G.add_edge(("in", cid), ("out", pool[o].pop(0)), orbit=o)
    tori = []
    for comp in nx.connected_components(G):
        sub = G.subgraph(comp)
        orbits = tuple(sorted((d["orbit"] for _, _, d in sub.edges(data=True)), key=lambda o: o.word))
        assert len(orbits) % 2 == 0, "boundary torus with an odd number of orbits"
        tori.append(
            BlockTorus(
                orbits,
                tuple(sorted(c for s, c in comp if s == "in")),
                tuple(sorted(c for s, c in comp if s == "out")),
            )
        )
    tori.sort(key=lambda t: (t.entrance_components, t.exit_components))
    return BlockBoundarySummary(tuple(tori))


def block_boundary_summary(T: GeometricType, layout: BandLayout = THIRDS) -> BlockBoundarySummary:
    verdict = check_realizable_filled(T, layout)
    if not verdict.realizable:
        raise UnpairedSeparatrix("type is not realizable: " + "; ".join(v.label() for v in verdict.violations))
    return verdict.summary
