"""Seeded generators and hypothesis strategies shared by the tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from anosov.corpus import random_type
from anosov.folia import LEFT, RIGHT, flip_arrow


def adjacent_sequence(rng: random.Random, n: int) -> list[tuple[str, str, str]]:
    """Triples satisfying only the adjacency rule, with entry 0 pointing up."""
    rights = [rng.choice((LEFT, RIGHT)) for _ in range(n)]
    orients = ["u"] + [rng.choice("ud") for _ in range(n - 1)]
    # the annulus after leaf i-1 decides the left arrow of leaf i
    return [(flip_arrow(rights[i - 1]), orients[i], rights[i]) for i in range(n)]


def ctype_corpus(size: int, seed: int = 7, max_n: int = 8) -> list[list[tuple[str, str, str]]]:
    rng = random.Random(seed)
    return [adjacent_sequence(rng, rng.randint(1, max_n)) for _ in range(size)]


@st.composite
def adjacent_sequences(draw, max_n: int = 8):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(1, max_n))
    return adjacent_sequence(random.Random(seed), n)


@st.composite
def geometric_types(draw, max_n: int = 3, max_bands: int = 3):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_type(random.Random(seed), max_n, max_bands)
