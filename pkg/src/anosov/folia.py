"""Combinatorial types of foliations and bifoliations on the torus.

An entry ``(left, orient, right)`` describes one compact leaf. ``orient`` is
``"u"`` when the leaf is freely homotopic to leaf 0 as an oriented curve and
``"d"`` otherwise. ``left`` is ``">"`` when the left side of the leaf lies in
the exit part of the torus, and ``right`` is ``"<"`` when the right side does.
Glyphs match the file format: ``<``/``>`` for arrows, ``u``/``d`` for
orientations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import EmptySubset, GTypeSyntaxError, InputError, InvalidType, NoMarkedLeaves

LEFT, RIGHT = "<", ">"  # arrow glyphs: <- and ->
UP, DOWN = "u", "d"
ARROWS = (LEFT, RIGHT)
ORIENTS = (UP, DOWN)
PRETTY = {LEFT: "←", RIGHT: "→", UP: "↑", DOWN: "↓"}

Triple = tuple[str, str, str]


def flip_arrow(a: str) -> str:
    return LEFT if a == RIGHT else RIGHT


def flip_orient(o: str) -> str:
    return DOWN if o == UP else UP


def check_triple(t) -> Triple:
    t = tuple(t)
    if len(t) != 3 or t[0] not in ARROWS or t[1] not in ORIENTS or t[2] not in ARROWS:
        raise InputError(f"malformed entry {t!r}")
    return t  # type: ignore[return-value]


def pretty(t: Triple) -> str:
    return "".join(PRETTY[c] for c in t)


# ---------------------------------------------------------------- validity


def adjacency_ok(a: Triple, b: Triple) -> bool:
    """Two consecutive leaves agree on the annulus between them."""
    return (a[2] == RIGHT) == (b[0] == LEFT)


def ctype_violations(entries: Sequence[Triple]) -> list[str]:
    out = []
    n = len(entries)
    if n == 0:
        return ["empty type"]
    if entries[0][1] != UP:
        out.append("entry 0 must have orientation u")
    for i in range(n):
        if not adjacency_ok(entries[i], entries[(i + 1) % n]):
            out.append(f"entries {i} and {(i + 1) % n} disagree on the annulus between them")
    marked = sum(1 for t in entries if t[0] == t[2])
    if marked % 2:
        out.append(f"odd number of marked leaves ({marked})")
    return out


@dataclass(frozen=True)
class CombinatorialType:
    """A valid abstract combinatorial type on ``Z/nZ``."""

    entries: tuple[Triple, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(check_triple(t) for t in self.entries))
        bad = ctype_violations(self.entries)
        if bad:
            raise InvalidType("; ".join(bad))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Triple:
        return self.entries[i % len(self.entries)]

    @property
    def marked(self) -> tuple[int, ...]:
        return tuple(i for i, t in enumerate(self.entries) if t[0] == t[2])

    def annulus_is_entrance(self, i: int) -> bool:
        """Whether the annulus between leaves ``i`` and ``i + 1`` lies in the entrance part."""
        return self[i][2] == RIGHT

    def pretty(self) -> str:
        return "; ".join(pretty(t) for t in self.entries)


@dataclass(frozen=True)
class CTypeAnalysis:
    valid: bool
    violations: tuple[str, ...]
    marked: tuple[int, ...]
    is_morse_smale: bool
    is_elementary: bool
    is_coherent: bool
    is_alternating: bool


def analyze(entries: Iterable) -> CTypeAnalysis:
    """Validity and classification of a raw sequence of triples."""
    seq = [check_triple(t) for t in entries]
    bad = ctype_violations(seq)
    marked = tuple(i for i, t in enumerate(seq) if t[0] == t[2])
    orients = [seq[i][1] for i in marked]
    coherent = len(set(orients)) <= 1
    alternating = all(orients[a] != orients[(a + 1) % len(orients)] for a in range(len(orients)))
    return CTypeAnalysis(
        valid=not bad,
        violations=tuple(bad),
        marked=marked,
        is_morse_smale=not marked,
        is_elementary=bool(seq) and len(marked) == len(seq),
        is_coherent=coherent,
        is_alternating=alternating,
    )


def restrict(entries: Sequence[Triple] | CombinatorialType, indices: Iterable[int]) -> list[Triple]:
    """Entries at ``indices`` read in cyclic order.

    A set is read in increasing order; a sequence must already be a cyclic
    rotation of increasing order.
    """
    seq = list(entries.entries if isinstance(entries, CombinatorialType) else entries)
    if isinstance(indices, (set, frozenset)):
        idx = sorted(indices)
    else:
        idx = list(indices)
    if not idx:
        raise EmptySubset("restriction to an empty set of leaves")
    if len(set(idx)) != len(idx) or any(not 0 <= i < len(seq) for i in idx):
        raise InputError(f"bad index set {idx!r} for a type of length {len(seq)}")
    r = idx.index(min(idx))
    if idx[r:] + idx[:r] != sorted(idx):
        raise InputError(f"indices {idx!r} are not cyclically ordered")
    return [seq[i] for i in idx]


# ---------------------------------------------------------- re-enumeration


def reenumerate(entries: Sequence[Triple], r: int) -> tuple[Triple, ...]:
    """The type read from leaf ``r``.

    When leaf ``r`` points the other way, taking it as reference reverses
    every orientation, the enumeration order and the left/right sides; the
    arrows change glyph because the two sides use mirrored conventions.
    """
    n = len(entries)
    if entries[r % n][1] == UP:
        return tuple(entries[(r + i) % n] for i in range(n))
    return tuple(
        (flip_arrow(entries[(r - i) % n][2]), flip_orient(entries[(r - i) % n][1]), flip_arrow(entries[(r - i) % n][0]))
        for i in range(n)
    )


def mirror(entries: Sequence[Triple]) -> tuple[Triple, ...]:
    """Reverse the orientation of the torus: order and sides swap, leaf orientations stay."""
    n = len(entries)
    return tuple((flip_arrow(entries[-i % n][2]), entries[-i % n][1], flip_arrow(entries[-i % n][0])) for i in range(n))


def orbit(sigma: CombinatorialType, unoriented: bool = False) -> list[tuple[Triple, ...]]:
    seeds = [sigma.entries] + ([mirror(sigma.entries)] if unoriented else [])
    out = []
    for seed in seeds:
        for r in range(len(seed)):
            cand = reenumerate(seed, r)
            assert not ctype_violations(cand), "re-enumeration produced an invalid type"
            out.append(cand)
    return out


def canonical_form(sigma: CombinatorialType | Sequence[Triple], unoriented: bool = False) -> CombinatorialType:
    if not isinstance(sigma, CombinatorialType):
        sigma = CombinatorialType(tuple(sigma))
    return CombinatorialType(min(orbit(sigma, unoriented)))


def equivalent(a, b, unoriented: bool = False) -> bool:
    return canonical_form(a, unoriented) == canonical_form(b, unoriented)


def elementary_type(p: int, coherent: bool = True) -> CombinatorialType:
    """Elementary type with ``2p`` marked leaves, starting with an entrance annulus."""
    if p < 1:
        raise InputError("an elementary type needs at least two marked leaves")
    entries = []
    for i in range(2 * p):
        o = UP if coherent or i % 2 == 0 else DOWN
        entries.append((RIGHT, o, RIGHT) if i % 2 == 0 else (LEFT, o, LEFT))
    return CombinatorialType(tuple(entries))


# ------------------------------------------------------------- bifoliations

Owned = tuple[int, bool, Triple]


@dataclass(frozen=True)
class BifoliationType:
    """Entries ``(owner, marked, triple)`` indexed by ``Z/mZ``; validated on construction."""

    entries: tuple[Owned, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple((int(o), bool(m), check_triple(t)) for o, m, t in self.entries))
        report = validate_bif(self.entries)
        if not report.valid:
            raise InvalidType("; ".join(report.violations))

    def owner(self, k: int) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.entries) if e[0] == k)

    def first_foliation(self) -> list[Triple]:
        return [t for o, _, t in self.entries if o == 1]


@dataclass(frozen=True)
class BifAnalysis:
    valid: bool
    violations: tuple[str, ...]
    marked_count: int


def _chain_violations(seq: list[tuple[int, bool, Triple]], owner: int) -> list[str]:
    """Adjacency between consecutive unmarked leaves of one foliation.

    Leaves of the foliation are the entries it owns plus the marked leaves.
    Marked entries record only the holonomy of the first foliation, so pairs
    touching a marked leaf are not checked.
    """
    chain = [(i, e) for i, e in enumerate(seq) if e[0] == owner or e[1]]
    out = []
    for a in range(len(chain)):
        (i, x), (j, y) = chain[a], chain[(a + 1) % len(chain)]
        if x[1] or y[1] or len(chain) < 2:
            continue
        if not adjacency_ok(x[2], y[2]):
            out.append(f"foliation {owner}: entries {i} and {j} disagree on the annulus between them")
    return out


def validate_bif(entries: Iterable) -> BifAnalysis:
    seq = [(int(o), bool(m), check_triple(t)) for o, m, t in entries]
    out = []
    if not seq:
        return BifAnalysis(False, ("empty type",), 0)
    o0, m0, t0 = seq[0]
    if o0 != 1 or not m0 or t0[1] != UP:
        out.append("entry 0 must be a marked leaf of foliation 1 with orientation u")
    marked = 0
    for i, (o, m, t) in enumerate(seq):
        if o not in (1, 2):
            out.append(f"entry {i}: owner must be 1 or 2")
        if m:
            marked += 1
            if o != 1:
                out.append(f"entry {i}: marked leaves belong to foliation 1")
            if t[0] != t[2]:
                out.append(f"entry {i}: a marked leaf has equal arrows")
        elif t[0] == t[2]:
            out.append(f"entry {i}: an unmarked leaf has opposite arrows")
    if marked < 2 or marked % 2:
        out.append(f"marked count must be even and at least 2 (got {marked})")
    out += _chain_violations(seq, 1) + _chain_violations(seq, 2)
    return BifAnalysis(not out, tuple(out), marked)


def quasi_transverse_partner(sigma: CombinatorialType) -> BifoliationType:
    """One partner leaf inside each annulus between consecutive leaves of ``sigma``.

    The type is first read from a marked leaf (one with orientation ``u`` when
    possible, so only a rotation is needed). A partner leaf inside an entrance
    annulus gets arrows ``(>, o, <)``, inside an exit annulus ``(<, o, >)``; its
    orientation is opposite to the leaf on its left.
    """
    if not sigma.marked:
        raise NoMarkedLeaves("the partner construction needs at least one marked leaf")
    ups = [i for i in sigma.marked if sigma[i][1] == UP]
    base = reenumerate(sigma.entries, ups[0] if ups else sigma.marked[0])
    out: list[Owned] = []
    for i, t in enumerate(base):
        out.append((1, t[0] == t[2], t))
        o = flip_orient(t[1])
        out.append((2, False, (RIGHT, o, LEFT) if t[2] == RIGHT else (LEFT, o, RIGHT)))
    return BifoliationType(tuple(out))


# --------------------------------------------------------------- file formats


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _triple(tokens: list[str], no: int) -> Triple:
    try:
        return check_triple(tokens)
    except InputError as exc:
        raise GTypeSyntaxError(no, str(exc)) from None


def parse_ctype_entries(text: str) -> list[Triple]:
    """Raw entries of a ctype file; validity is left to :func:`analyze`."""
    lines = list(_lines(text))
    if not lines or lines[0][1] != ["ctype", "v1"]:
        raise GTypeSyntaxError(lines[0][0] if lines else 1, "expected header 'ctype v1'")
    out = []
    for no, tok in lines[1:]:
        if len(tok) != 3:
            raise GTypeSyntaxError(no, "expected '<g> <o> <d>'")
        out.append(_triple(tok, no))
    return out


def parse_ctype(text: str) -> CombinatorialType:
    return CombinatorialType(tuple(parse_ctype_entries(text)))


def serialize_ctype(sigma: CombinatorialType | Sequence[Triple]) -> str:
    entries = sigma.entries if isinstance(sigma, CombinatorialType) else sigma
    return "ctype v1\n" + "".join(" ".join(t) + "\n" for t in entries)


def parse_bftype_entries(text: str) -> list[Owned]:
    lines = list(_lines(text))
    if not lines or lines[0][1] != ["bftype", "v1"]:
        raise GTypeSyntaxError(lines[0][0] if lines else 1, "expected header 'bftype v1'")
    out = []
    for no, tok in lines[1:]:
        if len(tok) != 5 or tok[0] not in ("1", "2") or tok[1] not in ("m", "-"):
            raise GTypeSyntaxError(no, "expected '1|2 m|- <g> <o> <d>'")
        out.append((int(tok[0]), tok[1] == "m", _triple(tok[2:], no)))
    return out


def parse_bftype(text: str) -> BifoliationType:
    return BifoliationType(tuple(parse_bftype_entries(text)))


def serialize_bftype(beta: BifoliationType | Sequence[Owned]) -> str:
    entries = beta.entries if isinstance(beta, BifoliationType) else beta
    return "bftype v1\n" + "".join(f"{o} {'m' if m else '-'} {' '.join(t)}\n" for o, m, t in entries)


# --------------------------------------------------------------- fixtures


def _glyphs(s: str) -> Triple:
    table = {"←": LEFT, "→": RIGHT, "↑": UP, "↓": DOWN}
    return tuple(table[c] for c in s)  # type: ignore[return-value]


def four_leaf_type() -> CombinatorialType:
    """Four compact leaves, two of them marked."""
    return CombinatorialType(tuple(_glyphs(s) for s in ("←↑→", "←↓→", "←↑←", "→↑→")))


def ten_leaf_bifoliation() -> list[Owned]:
    """Ten leaves of a bifoliation, two of them marked."""
    rows = [
        (1, True, "←↑←"),
        (1, False, "←↓→"),
        (2, False, "→↑←"),
        (1, False, "←↓→"),
        (1, True, "→↑→"),
        (2, False, "→↓←"),
        (1, False, "←↑→"),
        (1, False, "←↓→"),
        (2, False, "→↑←"),
        (1, False, "←↓→"),
    ]
    return [(o, m, _glyphs(s)) for o, m, s in rows]
