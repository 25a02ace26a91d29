import random

import pytest
from generators import adjacent_sequences, ctype_corpus
from hypothesis import given, settings

from anosov.errors import EmptySubset, GTypeSyntaxError, InputError, InvalidType, NoMarkedLeaves
from anosov.folia import (
    BifoliationType,
    CombinatorialType,
    analyze,
    canonical_form,
    elementary_type,
    equivalent,
    four_leaf_type,
    mirror,
    orbit,
    parse_bftype,
    parse_bftype_entries,
    parse_ctype,
    parse_ctype_entries,
    quasi_transverse_partner,
    reenumerate,
    restrict,
    serialize_bftype,
    serialize_ctype,
    ten_leaf_bifoliation,
    validate_bif,
)

MS = [(">", "u", "<"), (">", "u", "<")]
ALL_DOWN = CombinatorialType((("<", "u", ">"), ("<", "d", "<"), (">", "d", ">")))


def test_analyze_examples():
    a = analyze(four_leaf_type().entries)
    assert a.valid and a.marked == (2, 3)
    assert not a.is_morse_smale and not a.is_elementary and a.is_coherent and not a.is_alternating
    b = analyze(MS)
    assert b.valid and b.is_morse_smale and b.marked == ()
    c = analyze([(">", "d", "<"), (">", "u", "<")])
    assert not c.valid and any("orientation u" in v for v in c.violations)


def test_analyze_reports_adjacency_and_parity():
    a = analyze([(">", "u", ">"), (">", "u", "<")])
    assert not a.valid
    assert any("disagree" in v for v in a.violations)
    e = analyze(elementary_type(2, coherent=False).entries)
    assert e.valid and e.is_elementary and e.is_alternating and not e.is_coherent


def test_invalid_type_raises():
    with pytest.raises(InvalidType):
        CombinatorialType(((">", "u", ">"),))
    with pytest.raises(InputError):
        CombinatorialType((("x", "u", ">"),))


def test_restrict():
    s = four_leaf_type()
    assert restrict(s, {2, 3}) == [("<", "u", "<"), (">", "u", ">")]
    assert restrict(s, range(4)) == list(s.entries)
    assert restrict(s, [0]) == [s[0]]
    assert restrict(s, [3, 0]) == [s[3], s[0]]
    with pytest.raises(EmptySubset):
        restrict(s, set())
    with pytest.raises(InputError):
        restrict(s, [2, 0, 3])


def test_rotations_are_equivalent():
    s = four_leaf_type()
    for r in range(len(s)):
        assert equivalent(s, reenumerate(s.entries, r))


def test_morse_smale_singletons_are_inequivalent():
    assert not equivalent([(">", "u", "<")], [("<", "u", ">")])


def test_canonical_form_rejects_invalid_input():
    with pytest.raises(InvalidType):
        canonical_form([(">", "d", "<")])


@settings(max_examples=200, deadline=None)
@given(adjacent_sequences())
def test_group_action_preserves_validity(seq):
    a = analyze(seq)
    assert a.valid
    assert len(a.marked) % 2 == 0
    s = CombinatorialType(tuple(seq))
    for unoriented in (False, True):
        for cand in orbit(s, unoriented):
            assert analyze(cand).valid
    n = len(s)
    for r in range(n):
        back = r if s[r][1] == "d" else (-r) % n
        assert reenumerate(reenumerate(s.entries, r), back) == s.entries
    assert mirror(mirror(s.entries)) == s.entries


def test_equivalence_is_an_equivalence_relation():
    rng = random.Random(3)
    corpus = [CombinatorialType(tuple(x)) for x in ctype_corpus(120, seed=5, max_n=4)]
    for s in corpus:
        assert equivalent(s, s)
        t = reenumerate(s.entries, rng.randrange(len(s)))
        assert equivalent(t, s) and equivalent(s, t)
        u = reenumerate(t, rng.randrange(len(s)))
        assert equivalent(s, u)
        assert canonical_form(s, unoriented=True).entries <= canonical_form(s).entries
        assert equivalent(s, mirror(s.entries), unoriented=True)


def test_bifoliation_example():
    b = validate_bif(ten_leaf_bifoliation())
    assert b.valid and b.marked_count == 2
    assert BifoliationType(tuple(ten_leaf_bifoliation())).owner(2) == (2, 5, 8)


@pytest.mark.parametrize(
    "entries, needle",
    [
        ([(1, True, (">", "u", ">"))], "marked count"),
        ([(1, False, ("<", "u", ">")), (1, True, (">", "u", ">")), (1, True, ("<", "u", "<"))], "entry 0"),
        ([(1, True, (">", "u", ">")), (2, True, ("<", "u", "<"))], "belong to foliation 1"),
        ([(1, True, (">", "u", ">")), (1, True, ("<", "d", "<")), (1, False, ("<", "u", "<"))], "opposite arrows"),
    ],
)
def test_bifoliation_violations(entries, needle):
    b = validate_bif(entries)
    assert not b.valid
    assert any(needle in v for v in b.violations)


def test_partner_of_alternating_elementary():
    s = elementary_type(1, coherent=False)
    b = quasi_transverse_partner(s)
    assert len(b.owner(2)) == 2
    assert b.first_foliation() == list(s.entries)
    assert validate_bif(b.entries).valid


def test_partner_requires_marked_leaves():
    with pytest.raises(NoMarkedLeaves):
        quasi_transverse_partner(CombinatorialType(tuple(MS)))


def test_partner_when_every_marked_leaf_points_down():
    b = quasi_transverse_partner(ALL_DOWN)
    assert equivalent(b.first_foliation(), ALL_DOWN)
    assert [e[1] for e in b.entries if e[0] == 1] == [True, False, True]


def test_partner_on_corpus():
    for seq in ctype_corpus(300, seed=9):
        s = CombinatorialType(tuple(seq))
        if not s.marked:
            continue
        b = quasi_transverse_partner(s)
        assert validate_bif(b.entries).valid
        assert len(b.owner(2)) == len(s)
        assert equivalent(b.first_foliation(), s)
        if s[0][0] == s[0][2]:
            assert b.first_foliation() == list(s.entries)
        assert sum(1 for e in b.entries if e[1]) == len(s.marked)


def test_ctype_file_round_trip():
    s = four_leaf_type()
    text = serialize_ctype(s)
    assert text.splitlines()[0] == "ctype v1"
    assert parse_ctype(text) == s
    assert parse_ctype_entries("ctype v1\n# comment\n> d <\n") == [(">", "d", "<")]
    with pytest.raises(GTypeSyntaxError):
        parse_ctype("ctype v1\n> u\n")
    with pytest.raises(GTypeSyntaxError):
        parse_ctype("ctype v2\n> u <\n")


def test_bftype_file_round_trip():
    b = BifoliationType(tuple(ten_leaf_bifoliation()))
    assert parse_bftype(serialize_bftype(b)) == b
    with pytest.raises(GTypeSyntaxError):
        parse_bftype_entries("bftype v1\n3 m > u >\n")
