import random

import pytest
from generators import geometric_types
from hypothesis import given, settings

from anosov.corpus import corpus
from anosov.errors import GTypeSyntaxError, IndexOutOfRange, NotBijective, SumMismatch
from anosov.geomtype import (
    disjoint_union,
    fake_horseshoe,
    make_type,
    parse,
    serialize,
    smale_horseshoe,
    transpose,
    trivial_type,
)

FAKE = "geomtype v1\nn 1\nh 2\nv 2\nphi 1 1 -> 1 1 +\nphi 1 2 -> 1 2 +\n"


def test_parse_fake_horseshoe():
    T = parse(FAKE)
    assert T == fake_horseshoe()
    assert (T.n, T.h, T.v) == (1, (2,), (2,))
    assert T.target(0, 1).eps == 1


def test_comments_and_blank_lines_are_ignored():
    text = "# header comment\ngeomtype v1\n\nn 1   # one rectangle\nh 1\nv 1\nphi 1 1 -> 1 1 +\n"
    assert parse(text) == trivial_type()


@pytest.mark.parametrize(
    "text, error",
    [
        ("geomtype v1\nn 1\nh 2\nv 1\nphi 1 1 -> 1 1 +\nphi 1 2 -> 1 1 +\n", SumMismatch),
        ("geomtype v1\nn 1\nh 2\nv 2\nphi 1 1 -> 1 1 +\nphi 1 2 -> 1 1 +\n", NotBijective),
        ("geomtype v1\nn 1\nh 1\nv 1\nphi 1 1 -> 2 1 +\n", IndexOutOfRange),
        ("geomtype v1\nn 1\nh 1\nv 1\nphi 1 2 -> 1 1 +\n", IndexOutOfRange),
        ("geomtype v1\nn 1\nh 1\nv 1\nphi 1 1 -> 1 1\n", GTypeSyntaxError),
        ("geomtype v2\nn 1\nh 1\nv 1\nphi 1 1 -> 1 1 +\n", GTypeSyntaxError),
        ("geomtype v1\nn x\nh 1\nv 1\n", GTypeSyntaxError),
        ("geomtype v1\nn 1\nh 2\nv 2\nphi 1 1 -> 1 1 +\n", GTypeSyntaxError),
    ],
)
def test_parse_rejects(text, error):
    with pytest.raises(error):
        parse(text)


def test_sum_mismatch_reports_both_sums():
    with pytest.raises(SumMismatch) as exc:
        parse("geomtype v1\nn 1\nh 2\nv 1\nphi 1 1 -> 1 1 +\nphi 1 2 -> 1 1 +\n")
    assert (exc.value.sum_h, exc.value.sum_v) == (2, 1)


def test_not_bijective_names_the_target():
    with pytest.raises(NotBijective) as exc:
        parse("geomtype v1\nn 1\nh 2\nv 2\nphi 1 1 -> 1 1 +\nphi 1 2 -> 1 1 +\n")
    assert exc.value.target == (1, 1)


def test_syntax_error_carries_line():
    with pytest.raises(GTypeSyntaxError) as exc:
        parse("geomtype v1\nn 1\nh 1\nv 1\nphi 1 1 => 1 1 +\n")
    assert exc.value.line == 5


def test_serialize_is_canonical():
    assert serialize(fake_horseshoe()) == FAKE
    shuffled = "geomtype v1\nn 1\nh 2\nv 2\nphi 1 2 -> 1 2 +\nphi 1 1 -> 1 1 +\n"
    assert serialize(parse(shuffled)) == FAKE


def test_transpose_examples():
    assert transpose(fake_horseshoe()) == fake_horseshoe()
    assert transpose(smale_horseshoe()) == smale_horseshoe()
    T = make_type([1, 1], [1, 1], {(1, 1): (2, 1, -1), (2, 1): (1, 1, 1)})
    U = transpose(T)
    assert U.target(1, 0).k == 0 and U.target(1, 0).l == 0 and U.target(1, 0).eps == -1


def test_disjoint_union_keeps_blocks_apart():
    U = disjoint_union(trivial_type(), trivial_type())
    assert U.n == 2
    assert U.target(1, 0).k == 1


@settings(max_examples=200, deadline=None)
@given(geometric_types())
def test_round_trip_and_involution(T):
    assert parse(serialize(T)) == T
    assert serialize(parse(serialize(T))) == serialize(T)
    assert transpose(transpose(T)) == T
    U = transpose(T)
    assert (U.h, U.v) == (T.v, T.h)


def test_structurally_equal_types_serialize_identically():
    a, b = corpus(5, seed=3), corpus(5, seed=3)
    assert [serialize(x) for x in a] == [serialize(y) for y in b]


def test_fuzzed_invalid_inputs_raise_only_known_errors():
    rng = random.Random(11)
    known = (GTypeSyntaxError, SumMismatch, NotBijective, IndexOutOfRange)
    for T in corpus(100, seed=5):
        lines = serialize(T).splitlines()
        k = rng.randrange(4, len(lines))
        toks = lines[k].split()
        toks[rng.choice((1, 2, 4, 5))] = str(rng.randint(0, 4))
        lines[k] = " ".join(toks)
        try:
            parse("\n".join(lines))
        except known:
            pass
