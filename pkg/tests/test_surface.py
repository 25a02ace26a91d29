from fractions import Fraction

import pytest
import views

from anosov.corpus import corpus
from anosov.errors import UnpairedSeparatrix
from anosov.geomtype import fake_horseshoe, make_type, smale_horseshoe, transpose, trivial_type
from anosov.surface import (
    QUARTERS,
    THIRDS,
    BandLayout,
    block_boundary_summary,
    build_complex,
    check_realizable_filled,
    classify_gaps,
    cycle_leaves,
    raw_census,
    surface_census,
    trace_leaf,
)
from anosov.surface.complex import unstable_complex_via_transpose
from anosov.surface.census import component_of

# realizable, yet its sphere carries a third compact leaf bounding no cap
THREE_LEAVES = make_type([2, 2], [2, 2], {(1, 1): (1, 1, 1), (1, 2): (2, 2, 1), (2, 1): (1, 2, 1), (2, 2): (2, 1, 1)})


def test_layout_bands():
    assert THIRDS.band(0, 2) == (Fraction(1, 6), Fraction(1, 3))
    assert THIRDS.band(1, 2) == (Fraction(2, 3), Fraction(5, 6))
    assert QUARTERS.band(1, 2) == (Fraction(5, 8), Fraction(3, 4))
    with pytest.raises(ValueError):
        BandLayout("halves")
    for layout in (THIRDS, QUARTERS):
        for count in range(1, 5):
            bands = [layout.band(j, count) for j in range(count)]
            assert all(0 < lo < hi < 1 for lo, hi in bands)
            assert all(bands[a][1] < bands[a + 1][0] for a in range(count - 1))


def test_fake_horseshoe_census():
    comps = surface_census(build_complex(fake_horseshoe()))
    assert len(comps) == 1
    c = comps[0]
    assert (c.chi, c.boundary_circles, c.capped_genus, c.is_sphere, c.orientable) == (0, 2, 0, True, True)
    assert (c.complex_chi, c.complex_boundary_circles) == (-1, 3)
    raw = raw_census(build_complex(fake_horseshoe()))[0]
    assert (raw.vertices, raw.edges, raw.faces) == (12, 16, 3)


def test_trivial_type_has_two_components():
    cx = build_complex(trivial_type())
    comps = surface_census(cx)
    assert len(comps) == 2
    assert all((c.chi, c.boundary_circles) == (0, 2) for c in comps)
    assert (cx.gluing_maps, cx.edge_pairs) == (1, 2)


def test_leaf_heights_of_fake_horseshoe():
    leaves = cycle_leaves(build_complex(fake_horseshoe()))
    assert [leaf.heights for leaf in leaves] == [(Fraction(1, 5),), (Fraction(4, 5),)]
    cx = build_complex(fake_horseshoe())
    comp = component_of(raw_census(cx))
    for leaf in leaves:
        tr = trace_leaf(cx, leaf, comp)
        assert tr.closed and tr.component == 0


def test_gap_report_of_fake_horseshoe():
    gaps = classify_gaps(build_complex(fake_horseshoe()))
    assert [(g.side, g.gap, g.kind) for g in gaps] == [
        ("left", 0, "cap"),
        ("left", 1, "strip"),
        ("left", 2, "strip"),
        ("right", 0, "strip"),
        ("right", 1, "strip"),
        ("right", 2, "cap"),
    ]
    bottom_left, bottom_right = gaps[0], gaps[3]
    assert bottom_left.lower is None and bottom_left.upper.compact
    # same itinerary, yet the leaf above the right bottom gap is not compact
    assert not bottom_right.upper.compact


def test_verdicts():
    fake = check_realizable_filled(fake_horseshoe())
    assert fake.realizable and not fake.violations
    trivial = check_realizable_filled(trivial_type())
    assert {v.kind for v in trivial.violations} == {"SharedCapLeaf"}
    smale = check_realizable_filled(smale_horseshoe())
    assert not smale.realizable
    assert sorted({v.kind for v in smale.violations}) == ["NonStripGap", "WrongCapCount"]


def test_block_boundary_summary():
    tori = block_boundary_summary(fake_horseshoe()).tori
    assert len(tori) == 1
    assert [o.label() for o in tori[0].orbits] == ["(1,1)", "(1,2)"]
    assert tori[0].signs == (1, 1)
    with pytest.raises(UnpairedSeparatrix):
        block_boundary_summary(smale_horseshoe())


def test_third_compact_leaf_on_a_realizable_sphere():
    verdict = check_realizable_filled(THREE_LEAVES)
    assert verdict.realizable
    stable = verdict.sides["stable"]
    (comp,) = stable.components
    assert comp.compact_leaves == (0, 1, 2) and comp.cap_leaves == (0, 2)
    middle = stable.analysis.leaves[1]
    assert middle.orbit.label() == "(1,2)(2,1)"
    assert middle.heights == (Fraction(5, 7), Fraction(2, 7))
    assert [t.orbit_count for t in verdict.summary.tori] == [2]


def test_unstable_side_via_transpose():
    for T in corpus(40, seed=12, max_n=2):
        direct = [(c.strips, c.chi, c.boundary_circles) for c in raw_census(build_complex(T, "unstable"))]
        via = [(c.strips, c.chi, c.boundary_circles) for c in raw_census(unstable_complex_via_transpose(T))]
        assert direct == via
        assert via == [(c.strips, c.chi, c.boundary_circles) for c in raw_census(build_complex(transpose(T), "stable"))]


def test_caps_on_realizable_corpus():
    seen = 0
    for e in views.load_golden("surface_oracle_thirds.json"):
        verdict = check_realizable_filled(e["type"])
        if not verdict.realizable:
            continue
        seen += 1
        for rep in verdict.sides.values():
            for c in rep.components:
                assert set(c.cap_leaves) <= set(c.compact_leaves)
                assert len(c.cap_leaves) == (2 if c.is_sphere else 0)
        for torus in verdict.summary.tori:
            assert torus.orbit_count % 2 == 0
            assert all(s == 1 for s in torus.signs)
    assert seen >= 5


def test_glued_edges_have_one_partner():
    for T in corpus(40, seed=13):
        for kind in ("stable", "unstable"):
            cx = build_complex(T, kind)
            for d in cx.darts:
                if d.twin is not None:
                    assert cx.darts[d.twin].twin == d.id != d.twin
            assert cx.gluing_maps == sum(T.h)
