from itertools import product

from generators import geometric_types
from hypothesis import given, settings

from anosov.corpus import corpus
from anosov.geomtype import disjoint_union, fake_horseshoe, make_type, smale_horseshoe, trivial_type
from anosov.symdyn import (
    basic_pieces,
    count_periodic_itineraries,
    extremal_successor,
    extremal_states,
    free_separatrices,
    is_transitive,
    make_orbit,
    periodic_orbits,
    smale_graph_of_type,
    symbol_graph,
    transient_states,
)

CHAIN = make_type([1, 1], [1, 1], {(1, 1): (2, 1, 1), (2, 1): (1, 1, 1)})
# piece {1} feeds piece {3} through the wandering rectangle 2
ONE_WAY = make_type(
    [2, 1, 1],
    [1, 1, 2],
    {(1, 1): (1, 1, 1), (1, 2): (2, 1, 1), (2, 1): (3, 1, 1), (3, 1): (3, 2, 1)},
)


def test_symbol_graph_examples():
    G = symbol_graph(fake_horseshoe())
    assert G.number_of_edges() == 4
    G = symbol_graph(trivial_type())
    assert list(G.edges) == [((0, 0), (0, 0))]
    G = symbol_graph(CHAIN)
    assert sorted(G.edges) == [((0, 0), (1, 0)), ((1, 0), (0, 0))]


def test_out_degree_is_band_count_of_target():
    for T in corpus(30, seed=9):
        G = symbol_graph(T)
        assert G.number_of_nodes() == sum(T.h)
        for i, j in T.symbols():
            assert G.out_degree((i, j)) == T.h[T.target(i, j).k]


def test_basic_pieces_examples():
    pieces, wandering = basic_pieces(fake_horseshoe())
    assert len(pieces) == 1 and not wandering and not pieces[0].trivial
    pieces, _ = basic_pieces(trivial_type())
    assert len(pieces) == 1 and pieces[0].trivial
    pieces, _ = basic_pieces(disjoint_union(trivial_type(), trivial_type()))
    assert len(pieces) == 2
    pieces, wandering = basic_pieces(ONE_WAY)
    assert len(pieces) == 2 and wandering == [(0, 1), (1, 0)]


def test_transitivity():
    assert is_transitive(fake_horseshoe())
    assert is_transitive(trivial_type())
    assert not is_transitive(disjoint_union(trivial_type(), trivial_type()))
    assert not is_transitive(ONE_WAY)


def test_counts():
    assert count_periodic_itineraries(fake_horseshoe(), 3) == 8
    assert all(count_periodic_itineraries(trivial_type(), p) == 1 for p in range(1, 9))
    assert count_periodic_itineraries(CHAIN, 1) == 0
    assert count_periodic_itineraries(CHAIN, 2) == 2


def _enumerate_words(T, p):
    syms = list(T.symbols())
    total = 0
    for word in product(syms, repeat=p):
        if all(T.target(*word[a]).k == word[(a + 1) % p][0] for a in range(p)):
            total += 1
    return total


def test_counts_match_enumeration_on_small_corpus():
    for T in corpus(25, seed=4, max_n=2):
        for p in range(1, 6):
            assert count_periodic_itineraries(T, p) == _enumerate_words(T, p)


def test_periodic_orbits_and_signs():
    orbits = periodic_orbits(fake_horseshoe(), 1)
    assert [(o.label(), o.sign) for o in orbits] == [("(1,1)", 1), ("(1,2)", 1)]
    smale = {o.label(): o.sign for o in periodic_orbits(smale_horseshoe(), 2)}
    assert smale["(1,2)"] == -1
    assert smale["(1,1)(1,2)"] == -1
    assert {o.label(): o.sign for o in periodic_orbits(fake_horseshoe(), 2)}["(1,1)(1,2)"] == 1


def test_orbit_counts_agree_with_trace():
    # sum over primitive orbits whose period divides p of their period
    for T in corpus(20, seed=8, max_n=2):
        orbits = periodic_orbits(T, 6)
        for p in range(1, 7):
            assert sum(o.period for o in orbits if p % o.period == 0) == count_periodic_itineraries(T, p)


def test_make_orbit_canonicalizes():
    o = make_orbit(fake_horseshoe(), [(0, 1), (0, 0), (0, 1), (0, 0)])
    assert o.word == ((0, 0), (0, 1))


def test_free_separatrices_examples():
    cycles = free_separatrices(fake_horseshoe(), "stable")
    assert [(c.states, c.orbit.label()) for c in cycles] == [(((0, "left"),), "(1,1)"), (((0, "right"),), "(1,2)")]
    cycles = free_separatrices(smale_horseshoe(), "stable")
    assert [c.states for c in cycles] == [((0, "left"),)]
    assert transient_states(smale_horseshoe(), "stable") == [(0, "right")]
    cycles = free_separatrices(trivial_type(), "stable")
    assert [c.states for c in cycles] == [((0, "left"),), ((0, "right"),)]
    assert len({c.orbit for c in cycles}) == 1


@settings(max_examples=150, deadline=None)
@given(geometric_types())
def test_extremal_map_properties(T):
    for kind in ("stable", "unstable"):
        states = extremal_states(T, kind)
        assert len(states) == 2 * T.n
        assert all(extremal_successor(T, kind, s)[0] in states for s in states)
        cycles = free_separatrices(T, kind)
        assert cycles
        on = [s for c in cycles for s in c.states]
        assert len(on) == len(set(on))
        assert sorted(on + transient_states(T, kind)) == sorted(states)
        for c in cycles:
            assert make_orbit(T, c.itinerary) == c.orbit
            # going once around each side of the orbit reverses orientation
            if len(c.states) == 2 * c.orbit.period:
                assert c.orbit.sign == -1


def test_smale_graph():
    assert smale_graph_of_type(fake_horseshoe()).number_of_edges() == 0
    assert list(smale_graph_of_type(ONE_WAY).edges) == [(0, 1)]
    assert smale_graph_of_type(disjoint_union(trivial_type(), trivial_type())).number_of_edges() == 0
