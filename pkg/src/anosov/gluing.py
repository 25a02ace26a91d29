"""Block summaries and the gluing and surgery calculus.

A block summary keeps what the transitivity and gluing criteria consume: the
boundary components with their periodic orbit counts and lamination flavor,
the Smale graph of the block, and which boundary components the stable and
unstable laminations of each basic piece meet.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Sequence

import networkx as nx

from .errors import (
    BadPairing,
    FreeSeparatrix,
    GTypeSyntaxError,
    InputError,
    InvalidExtension,
    MissingIncidence,
    NoSuchAnnulus,
    NotAlternatingElementary,
    PositiveMultiplier,
    PreconditionFailed,
    TrivialPiece,
)
from .folia import CombinatorialType, analyze, elementary_type, restrict

FULL = "full"
ALTERNATING = "alternating"
COHERENT = "coherent"
ORBIT_COUNT = "orbits"
SINGLE_LEAF = "leaf"
FLAVORS = (FULL, ALTERNATING, COHERENT, ORBIT_COUNT, SINGLE_LEAF)


@dataclass(frozen=True)
class Flavor:
    """Lamination flavor of one boundary component.

    ``full`` carries a combinatorial type; ``alternating`` and ``coherent`` are
    elementary laminations with ``2p`` marked leaves; ``orbits`` records only
    the orbit count; ``leaf`` is a transverse torus with one compact leaf.
    """

    kind: str
    p: int = 0
    ctype: CombinatorialType | None = None

    def __post_init__(self) -> None:
        if self.kind not in FLAVORS:
            raise InputError(f"unknown lamination flavor {self.kind!r}")
        if self.kind == FULL and self.ctype is None:
            raise InputError("a full flavor needs a combinatorial type")
        if self.kind in (ALTERNATING, COHERENT) and self.p < 1:
            raise InputError("an elementary flavor needs p >= 1")

    @property
    def type(self) -> CombinatorialType | None:
        """The combinatorial type when the flavor determines one."""
        if self.kind == FULL:
            return self.ctype
        if self.kind in (ALTERNATING, COHERENT):
            return elementary_type(self.p, coherent=self.kind == COHERENT)
        return None

    def expected_orbits(self) -> int | None:
        if self.kind == FULL:
            return len(self.ctype.marked)
        if self.kind in (ALTERNATING, COHERENT):
            return 2 * self.p
        if self.kind == SINGLE_LEAF:
            return 0
        return None


@dataclass(frozen=True)
class BoundaryComponent:
    name: str
    orbit_count: int
    signs: tuple[int, ...]
    flavor: Flavor
    transverse: str | None = None  # "in" or "out" for a transverse torus

    def __post_init__(self) -> None:
        if self.orbit_count < 0 or self.orbit_count % 2:
            raise InputError(f"component {self.name}: orbit count must be even and nonnegative")
        if len(self.signs) != self.orbit_count or any(s not in (1, -1) for s in self.signs):
            raise InputError(f"component {self.name}: one sign per orbit expected")
        want = self.flavor.expected_orbits()
        if want is not None and want != self.orbit_count:
            raise InputError(f"component {self.name}: flavor needs {want} orbits, got {self.orbit_count}")
        if self.transverse not in (None, "in", "out"):
            raise InputError(f"component {self.name}: transverse must be in or out")
        if self.transverse and self.orbit_count:
            raise InputError(f"component {self.name}: a transverse torus carries no orbits")


@dataclass(frozen=True)
class OrbitRecord:
    """A periodic orbit available to surgery operators."""

    name: str
    piece: str
    sign: int
    free_separatrix: bool
    prongs: int = 0  # stable separatrix count; 0 means derived from the sign

    @property
    def separatrices(self) -> int:
        if self.prongs:
            return self.prongs
        return 1 if self.sign == -1 else 2


@dataclass(frozen=True)
class BlockSummary:
    name: str
    components: tuple[BoundaryComponent, ...] = ()
    vertices: tuple[str, ...] = ()
    edges: tuple[tuple[str, str], ...] = ()
    trivial: frozenset[str] = frozenset()
    stable_incidence: frozenset[tuple[str, str]] = frozenset()
    unstable_incidence: frozenset[tuple[str, str]] = frozenset()
    transitive: bool = False
    filled: bool = False
    orbits: tuple[OrbitRecord, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(sorted(set(self.edges))))
        object.__setattr__(self, "trivial", frozenset(self.trivial))
        object.__setattr__(self, "stable_incidence", frozenset(self.stable_incidence))
        object.__setattr__(self, "unstable_incidence", frozenset(self.unstable_incidence))
        names = [c.name for c in self.components]
        if len(set(names)) != len(names):
            raise InputError(f"block {self.name}: duplicate component names")
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError(f"block {self.name}: duplicate piece names")
        verts = set(self.vertices)
        for a, b in self.edges:
            if a not in verts or b not in verts or a == b:
                raise InputError(f"block {self.name}: bad edge {a} -> {b}")
        if not self.trivial <= verts:
            raise InputError(f"block {self.name}: trivial flag on an unknown piece")
        for piece, comp in self.stable_incidence | self.unstable_incidence:
            if piece not in verts or comp not in names:
                raise InputError(f"block {self.name}: incidence ({piece}, {comp}) names an unknown piece or component")
        for o in self.orbits:
            if o.piece not in verts:
                raise InputError(f"block {self.name}: orbit {o.name} lies on unknown piece {o.piece}")

    def component(self, name: str) -> BoundaryComponent:
        for c in self.components:
            if c.name == name:
                return c
        raise InputError(f"block {self.name} has no component {name!r}")

    def orbit(self, name: str) -> OrbitRecord:
        for o in self.orbits:
            if o.name == name:
                return o
        raise InputError(f"block {self.name} has no orbit {name!r}")

    def graph(self) -> nx.DiGraph:
        G = nx.DiGraph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(self.edges)
        return G

    def renamed(self, name: str, pieces: dict[str, str] | None = None) -> "BlockSummary":
        """A copy under a new block name, optionally renaming pieces."""
        m = pieces or {}
        r = lambda v: m.get(v, v)  # noqa: E731
        return BlockSummary(
            name,
            self.components,
            tuple(r(v) for v in self.vertices),
            tuple((r(a), r(b)) for a, b in self.edges),
            frozenset(r(v) for v in self.trivial),
            frozenset((r(p), c) for p, c in self.stable_incidence),
            frozenset((r(p), c) for p, c in self.unstable_incidence),
            self.transitive,
            self.filled,
            tuple(replace(o, piece=r(o.piece)) for o in self.orbits),
        )


# ------------------------------------------------------------------ gluing

Ref = tuple[str, str]  # (block, component)


@dataclass(frozen=True)
class Pair:
    a: Ref
    b: Ref
    reversed: bool = True
    sqt: bool = True


@dataclass(frozen=True)
class GluingResult:
    exists: bool
    obstruction: str | None = None


def _blocks_by_name(blocks: Sequence[BlockSummary]) -> dict[str, BlockSummary]:
    out = {}
    for b in blocks:
        if b.name in out:
            raise BadPairing(f"two blocks are named {b.name!r}")
        out[b.name] = b
    return out


def _resolve(blocks: dict[str, BlockSummary], ref: Ref) -> BoundaryComponent:
    block, comp = ref
    if block not in blocks:
        raise BadPairing(f"unknown block {block!r}")
    try:
        return blocks[block].component(comp)
    except InputError:
        raise BadPairing(f"unknown component {block}.{comp}") from None


def check_pairing(blocks: Sequence[BlockSummary], pairs: Sequence[Pair]) -> dict[str, BlockSummary]:
    """Pairs must form a fixed-point-free involution on the components they use."""
    by_name = _blocks_by_name(blocks)
    used: set[Ref] = set()
    for p in pairs:
        if p.a == p.b:
            raise BadPairing(f"{p.a[0]}.{p.a[1]} is paired with itself")
        for ref in (p.a, p.b):
            _resolve(by_name, ref)
            if ref in used:
                raise BadPairing(f"{ref[0]}.{ref[1]} is used by two pairs")
            used.add(ref)
    return by_name


def gluing_exists(blocks: Sequence[BlockSummary], pairs: Sequence[Pair]) -> GluingResult:
    """Paired components must carry the same number of boundary orbits.

    Transverse tori must meet with opposite directions.
    """
    by_name = check_pairing(blocks, pairs)
    for p in pairs:
        x, y = _resolve(by_name, p.a), _resolve(by_name, p.b)
        label = f"{p.a[0]}.{p.a[1]} ~ {p.b[0]}.{p.b[1]}"
        if x.orbit_count != y.orbit_count:
            return GluingResult(False, f"{label}: orbit counts {x.orbit_count} and {y.orbit_count} differ")
        if (x.transverse or y.transverse) and {x.transverse, y.transverse} != {"in", "out"}:
            return GluingResult(False, f"{label}: transverse directions {x.transverse} and {y.transverse} do not match")
    return GluingResult(True)


Node = tuple[str, str]  # (block, piece)


def triple_smale_graph(blocks: Sequence[BlockSummary], pairs: Sequence[Pair]) -> nx.DiGraph:
    """Smale graph of the glued triple.

    Across a pair ``(X, Y)`` every piece whose unstable lamination meets ``X``
    flows into every piece whose stable lamination meets ``Y``, and the same
    with ``X`` and ``Y`` exchanged. The rule needs filling laminations and a
    strongly quasi-transverse gluing; both are declared inputs.
    """
    by_name = check_pairing(blocks, pairs)
    res = gluing_exists(blocks, pairs)
    if not res.exists:
        raise BadPairing(res.obstruction)
    G = nx.DiGraph()
    for b in blocks:
        G.add_nodes_from((b.name, v) for v in b.vertices)
        G.add_edges_from(((b.name, u), (b.name, v)) for u, v in b.edges)
    for p in pairs:
        if not p.sqt:
            raise InputError(f"pair {p.a[0]}.{p.a[1]} ~ {p.b[0]}.{p.b[1]} is not declared strongly quasi-transverse")
        for ref in (p.a, p.b):
            if not by_name[ref[0]].filled:
                raise InputError(f"block {ref[0]} is not declared filled")
        for x, y in ((p.a, p.b), (p.b, p.a)):
            sources = _incident(by_name[x[0]], x[1], "unstable")
            targets = _incident(by_name[y[0]], y[1], "stable")
            G.add_edges_from(((x[0], s), (y[0], t)) for s in sources for t in targets)
        for ref in (p.a, p.b):
            if not _incident(by_name[ref[0]], ref[1], "stable") | _incident(by_name[ref[0]], ref[1], "unstable"):
                raise MissingIncidence(f"no piece meets component {ref[0]}.{ref[1]}")
    G.remove_edges_from(list(nx.selfloop_edges(G)))
    return G


def _incident(block: BlockSummary, comp: str, kind: str) -> set[str]:
    rel = block.stable_incidence if kind == "stable" else block.unstable_incidence
    return {p for p, c in rel if c == comp}


def is_transitive_glued(G: nx.DiGraph) -> bool:
    return G.number_of_nodes() > 0 and nx.is_strongly_connected(G)


@dataclass(frozen=True)
class GlueReport:
    gluable: bool
    transitive: bool | None
    graph: nx.DiGraph | None
    obstruction: str | None = None


def glue(blocks: Sequence[BlockSummary], pairs: Sequence[Pair]) -> GlueReport:
    res = gluing_exists(blocks, pairs)
    if not res.exists:
        return GlueReport(False, None, None, res.obstruction)
    G = triple_smale_graph(blocks, pairs)
    return GlueReport(True, is_transitive_glued(G), G)


def theorem_h_check(blocks: Sequence[BlockSummary], pairs: Sequence[Pair]) -> GlueReport:
    """Gluing of skewed blocks along alternating elementary laminations."""
    by_name = check_pairing(blocks, pairs)
    for p in pairs:
        for ref in (p.a, p.b):
            if _resolve(by_name, ref).flavor.kind != ALTERNATING:
                raise NotAlternatingElementary(f"{ref[0]}.{ref[1]} is not alternating elementary")
    report = glue(blocks, pairs)
    if report.gluable and all(b.transitive for b in blocks):
        assert report.transitive, "gluing transitive blocks must give a transitive graph"
    return report


# ---------------------------------------------------------------- surgery


def _fresh(name: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    if name not in taken:
        return name
    k = 2
    while f"{name}#{k}" in taken:
        k += 1
    return f"{name}#{k}"


def _da(S: BlockSummary, orbit: str, direction: str) -> BlockSummary:
    o = S.orbit(orbit)
    if o.sign != -1:
        raise PositiveMultiplier(f"orbit {orbit} has positive multipliers")
    if o.free_separatrix:
        raise FreeSeparatrix(f"orbit {orbit} has a free separatrix")
    if o.piece in S.trivial:
        raise TrivialPiece(f"orbit {orbit} is a trivial piece")
    name = _fresh(f"da:{orbit}", (c.name for c in S.components))
    comp = BoundaryComponent(name, 0, (), Flavor(SINGLE_LEAF), direction)
    inc = {(o.piece, name)}
    return replace(
        S,
        components=S.components + (comp,),
        stable_incidence=S.stable_incidence | (inc if direction == "in" else set()),
        unstable_incidence=S.unstable_incidence | (inc if direction == "out" else set()),
        orbits=tuple(x for x in S.orbits if x.name != orbit),
    )


def attracting_da(S: BlockSummary, orbit: str) -> BlockSummary:
    """The orbit becomes an attractor; removing its basin adds an exit torus."""
    return _da(S, orbit, "out")


def repelling_da(S: BlockSummary, orbit: str) -> BlockSummary:
    """The orbit becomes a repeller; removing its basin adds an entrance torus."""
    return _da(S, orbit, "in")


def double_blow_up_excise(S: BlockSummary, orbit: str, p: int | None = None) -> BlockSummary:
    """Blow up the orbit twice and excise: a torus carrying ``2p`` boundary orbits.

    ``p`` is the number of stable separatrices of the orbit and defaults to
    the value recorded in the summary.
    """
    if not S.transitive:
        raise PreconditionFailed(f"block {S.name} is not transitive")
    o = S.orbit(orbit)
    if p is None:
        p = o.separatrices
    if p < 1 or p != o.separatrices:
        raise PreconditionFailed(f"orbit {orbit} has {o.separatrices} stable separatrices, not {p}")
    name = _fresh(f"dbe:{orbit}", (c.name for c in S.components))
    comp = BoundaryComponent(name, 2 * p, (1,) * (2 * p), Flavor(COHERENT, p))
    inc = {(o.piece, name)}
    return replace(
        S,
        components=S.components + (comp,),
        stable_incidence=S.stable_incidence | inc,
        unstable_incidence=S.unstable_incidence | inc,
        orbits=tuple(x for x in S.orbits if x.name != orbit),
    )


def add_compact_leaf(
    S: BlockSummary,
    component: str,
    annulus: int,
    triple,
    pieces: Sequence[str],
    vertex: str | None = None,
) -> BlockSummary:
    """Add a saddle orbit whose invariant manifold cuts the annulus after leaf ``annulus``.

    ``pieces`` are the basic pieces whose invariant manifolds meet the annulus.
    """
    comp = S.component(component)
    sigma = comp.flavor.type
    if sigma is None:
        raise InvalidExtension(f"component {component} carries no combinatorial type")
    n = len(sigma)
    if not 0 <= annulus < n:
        raise NoSuchAnnulus(f"annulus {annulus} not in 0..{n - 1}")
    new = list(sigma.entries)
    new.insert(annulus + 1, tuple(triple))
    report = analyze(new)
    if not report.valid:
        raise InvalidExtension("; ".join(report.violations))
    kept = [i for i in range(n + 1) if i != annulus + 1]
    if tuple(restrict(new, kept)) != sigma.entries:
        raise InvalidExtension("restriction to the original leaves differs from the input type")
    if not pieces:
        raise InvalidExtension("at least one incident piece is required")
    for p in pieces:
        if p not in S.vertices:
            raise InputError(f"block {S.name} has no piece {p!r}")
    O = vertex or _fresh(f"O{len(S.vertices)}", S.vertices)
    if O in S.vertices:
        raise InputError(f"piece {O!r} already exists")
    entrance = sigma.annulus_is_entrance(annulus)
    edges = [(O, p) for p in pieces] if entrance else [(p, O) for p in pieces]
    inc = {(O, component)}
    sigma2 = CombinatorialType(tuple(new))
    comps = tuple(replace(c, flavor=Flavor(FULL, ctype=sigma2)) if c.name == component else c for c in S.components)
    G = nx.DiGraph()
    G.add_nodes_from(S.vertices + (O,))
    G.add_edges_from(S.edges + tuple(edges))
    return replace(
        S,
        components=comps,
        vertices=S.vertices + (O,),
        edges=S.edges + tuple(edges),
        trivial=S.trivial | {O},
        stable_incidence=S.stable_incidence | (inc if entrance else set()),
        unstable_incidence=S.unstable_incidence | (set() if entrance else inc),
        transitive=nx.is_strongly_connected(G),
        orbits=S.orbits + (OrbitRecord(O, O, -1, True),),
    )


@dataclass(frozen=True)
class TwoCopy:
    """Output of the two-copy construction."""

    blocks: tuple[BlockSummary, BlockSummary]
    pairs: tuple[Pair, ...]
    added: tuple[str, ...]  # saddle orbits O_1..O_2p, O_i in the annulus after leaf i-1


def two_copy_construction(base: BlockSummary, orbit: str, p: int | None = None) -> TwoCopy:
    """Excise an orbit, then glue the block to a copy with one leaf added per annulus.

    The added leaves point against the boundary orbits.
    """
    P = double_blow_up_excise(base, orbit, p)
    torus = P.components[-1].name
    pieces = {v: f"{v}0" for v in P.vertices}
    Q = P.renamed(f"{P.name}'", pieces)
    # promote the elementary flavor to its explicit type so leaves can be inserted
    sigma = Q.component(torus).flavor.type
    Q = replace(Q, components=tuple(
        replace(c, flavor=Flavor(FULL, ctype=sigma)) if c.name == torus else c for c in Q.components
    ))
    origin = pieces[base.orbit(orbit).piece]
    added = []
    for a in reversed(range(len(sigma))):
        left = sigma[a]
        o = "d" if left[1] == "u" else "u"
        triple = ("<", o, ">") if sigma.annulus_is_entrance(a) else (">", o, "<")
        name = f"O{a + 1}"
        Q = add_compact_leaf(Q, torus, a, triple, [origin], vertex=name)
        added.append(name)
    return TwoCopy((P, Q), (Pair((P.name, torus), (Q.name, torus), True, True),), tuple(reversed(added)))


# ------------------------------------------------------- from a geometric type


def summary_from_type(T, name: str = "B", max_period: int = 2, layout=None) -> BlockSummary:
    """Summary of the model block of a realizable geometric type.

    A piece meets an entrance component when it is reachable from a band of a
    rectangle with a strip in that component, and an exit component when it
    reaches such a band.
    """
    from .surface import THIRDS, check_realizable_filled
    from .symdyn import (
        basic_pieces,
        free_separatrices,
        is_transitive,
        periodic_orbits,
        smale_graph_of_type,
        symbol_graph,
    )

    verdict = check_realizable_filled(T, layout or THIRDS)
    if not verdict.realizable:
        raise InputError("type is not realizable: " + "; ".join(v.label() for v in verdict.violations))
    pieces, _ = basic_pieces(T)
    pname = {p.id: f"L{p.id + 1}" for p in pieces}
    owner = {s: p.id for p in pieces for s in p.symbols}
    G = symbol_graph(T)
    comps, stable, unstable = [], set(), set()
    rects = {
        side: {c.id: {i for i, _ in c.strips} for c in verdict.sides[side].components}
        for side in ("stable", "unstable")
    }
    for t, torus in enumerate(verdict.summary.tori):
        cname = f"T{t + 1}"
        transverse = None
        if not torus.orbits:
            transverse = "in" if torus.entrance_components else "out"
        comps.append(BoundaryComponent(cname, torus.orbit_count, torus.signs, Flavor(ORBIT_COUNT), transverse))
        ins = set().union(*(rects["stable"][c] for c in torus.entrance_components)) if torus.entrance_components else set()
        outs = set().union(*(rects["unstable"][c] for c in torus.exit_components)) if torus.exit_components else set()
        for p in pieces:
            seed = min(p.symbols)
            if any(s in p.symbols or seed in nx.descendants(G, s) for s in T.symbols() if s[0] in ins):
                stable.add((pname[p.id], cname))
            reach = nx.descendants(G, seed) | {seed}
            if any(s[0] in outs for s in reach):
                unstable.add((pname[p.id], cname))
    free = {c.orbit for side in ("stable", "unstable") for c in free_separatrices(T, side)}
    orbits = []
    for o in periodic_orbits(T, max_period):
        pid = owner.get(o.word[0])
        if pid is None:
            continue
        orbits.append(OrbitRecord(o.label(), pname[pid], o.sign, o in free))
    edges = tuple((pname[a], pname[b]) for a, b in smale_graph_of_type(T).edges)
    return BlockSummary(
        name,
        tuple(comps),
        tuple(pname[p.id] for p in pieces),
        edges,
        frozenset(pname[p.id] for p in pieces if p.trivial),
        frozenset(stable),
        frozenset(unstable),
        is_transitive(T),
        True,
        tuple(orbits),
    )


# ------------------------------------------------------------- file formats

_SIGN = {"+": 1, "-": -1}


def _signs(tok: str, no: int) -> tuple[int, ...]:
    if tok == "none":
        return ()
    if any(c not in _SIGN for c in tok):
        raise GTypeSyntaxError(no, f"bad sign string {tok!r}")
    return tuple(_SIGN[c] for c in tok)


def _flavor(tok: list[str], no: int) -> tuple[Flavor, str | None]:
    transverse = None
    if len(tok) >= 2 and tok[-2] == "transverse":
        transverse = tok[-1]
        tok = tok[:-2]
    if not tok:
        raise GTypeSyntaxError(no, "missing flavor")
    kind, args = tok[0], tok[1:]
    try:
        if kind in (ALTERNATING, COHERENT) and len(args) == 1:
            return Flavor(kind, int(args[0])), transverse
        if kind == FULL and len(args) == 1:
            entries = tuple(tuple(e) for e in args[0].split(","))
            return Flavor(FULL, ctype=CombinatorialType(entries)), transverse
        if kind in (ORBIT_COUNT, SINGLE_LEAF) and not args:
            return Flavor(kind), transverse
    except (ValueError, InputError) as exc:
        raise GTypeSyntaxError(no, str(exc)) from None
    raise GTypeSyntaxError(no, f"bad flavor {' '.join(tok)!r}")


def _yes(tok: str, no: int) -> bool:
    if tok not in ("yes", "no"):
        raise GTypeSyntaxError(no, "expected yes or no")
    return tok == "yes"


def parse_summary(text: str) -> BlockSummary:
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((no, line.split()))
    if not lines or lines[0][1] != ["summary", "v1"]:
        raise GTypeSyntaxError(lines[0][0] if lines else 1, "expected header 'summary v1'")
    f: dict = {"name": None, "transitive": False, "filled": False}
    vertices, trivial, edges, comps, stable, unstable, orbits = [], set(), [], [], set(), set(), []
    for no, tok in lines[1:]:
        key, args = tok[0], tok[1:]
        if key == "name" and len(args) == 1:
            f["name"] = args[0]
        elif key in ("transitive", "filled") and len(args) == 1:
            f[key] = _yes(args[0], no)
        elif key == "piece" and len(args) in (1, 2) and args[1:] in ([], ["trivial"]):
            vertices.append(args[0])
            if args[1:]:
                trivial.add(args[0])
        elif key == "edge" and len(args) == 2:
            edges.append((args[0], args[1]))
        elif key == "component" and len(args) >= 4:
            try:
                count = int(args[1])
            except ValueError:
                raise GTypeSyntaxError(no, "orbit count must be an integer") from None
            flavor, transverse = _flavor(args[3:], no)
            try:
                comps.append(BoundaryComponent(args[0], count, _signs(args[2], no), flavor, transverse))
            except InputError as exc:
                raise GTypeSyntaxError(no, str(exc)) from None
        elif key in ("stable", "unstable") and len(args) == 2:
            (stable if key == "stable" else unstable).add((args[0], args[1]))
        elif key == "orbit" and len(args) in (4, 5):
            if args[2] not in _SIGN or args[3] not in ("free", "nofree"):
                raise GTypeSyntaxError(no, "expected 'orbit <name> <piece> <+|-> <free|nofree> [prongs]'")
            prongs = int(args[4]) if len(args) == 5 else 0
            orbits.append(OrbitRecord(args[0], args[1], _SIGN[args[2]], args[3] == "free", prongs))
        else:
            raise GTypeSyntaxError(no, f"unrecognized line {' '.join(tok)!r}")
    if f["name"] is None:
        raise GTypeSyntaxError(lines[0][0], "missing 'name' line")
    return BlockSummary(
        f["name"], tuple(comps), tuple(vertices), tuple(edges), frozenset(trivial),
        frozenset(stable), frozenset(unstable), f["transitive"], f["filled"], tuple(orbits),
    )


def _flavor_text(c: BoundaryComponent) -> str:
    fl = c.flavor
    if fl.kind == FULL:
        text = "full " + ",".join("".join(t) for t in fl.ctype.entries)
    elif fl.kind in (ALTERNATING, COHERENT):
        text = f"{fl.kind} {fl.p}"
    else:
        text = fl.kind
    return text + (f" transverse {c.transverse}" if c.transverse else "")


def serialize_summary(S: BlockSummary) -> str:
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    out = ["summary v1", f"name {S.name}", f"transitive {yn(S.transitive)}", f"filled {yn(S.filled)}"]
    out += [f"piece {v}" + (" trivial" if v in S.trivial else "") for v in S.vertices]
    out += [f"edge {a} {b}" for a, b in S.edges]
    for c in S.components:
        signs = "".join("+" if s > 0 else "-" for s in c.signs) or "none"
        out.append(f"component {c.name} {c.orbit_count} {signs} {_flavor_text(c)}")
    out += [f"stable {p} {c}" for p, c in sorted(S.stable_incidence)]
    out += [f"unstable {p} {c}" for p, c in sorted(S.unstable_incidence)]
    for o in S.orbits:
        tail = f" {o.prongs}" if o.prongs else ""
        out.append(f"orbit {o.name} {o.piece} {'+' if o.sign > 0 else '-'} {'free' if o.free_separatrix else 'nofree'}{tail}")
    return "\n".join(out) + "\n"


@dataclass
class GlueSpec:
    blocks: list[BlockSummary] = field(default_factory=list)
    pairs: list[Pair] = field(default_factory=list)


def _ref(tok: str, no: int) -> Ref:
    block, dot, comp = tok.partition(".")
    if not dot or not block or not comp:
        raise GTypeSyntaxError(no, f"expected <block>.<component>, got {tok!r}")
    return block, comp


def parse_gluespec(text: str, base: Path | None = None) -> GlueSpec:
    """Parse a glue spec; block files are read relative to ``base``."""
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((no, line.split()))
    if not lines or lines[0][1] != ["gluespec", "v1"]:
        raise GTypeSyntaxError(lines[0][0] if lines else 1, "expected header 'gluespec v1'")
    spec = GlueSpec()
    for no, tok in lines[1:]:
        if tok[0] == "block" and len(tok) == 3:
            path = Path(tok[2]) if base is None else base / tok[2]
            try:
                S = parse_summary(path.read_text(encoding="utf-8"))
            except OSError as exc:
                raise InputError(f"line {no}: cannot read {path}: {exc.strerror}") from None
            spec.blocks.append(S.renamed(tok[1]) if S.name != tok[1] else S)
        elif tok[0] == "pair" and len(tok) >= 3:
            flags = set(tok[3:])
            if not flags <= {"reversed", "sqt"}:
                raise GTypeSyntaxError(no, f"unknown pair flags {sorted(flags - {'reversed', 'sqt'})}")
            spec.pairs.append(Pair(_ref(tok[1], no), _ref(tok[2], no), "reversed" in flags, "sqt" in flags))
        else:
            raise GTypeSyntaxError(no, f"unrecognized line {' '.join(tok)!r}")
    return spec
