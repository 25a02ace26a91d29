"""Seeded random generation of valid geometric types."""

from __future__ import annotations

import random

from .geomtype import GeometricType, make_type


def random_type(rng: random.Random, max_n: int = 3, max_bands: int = 3) -> GeometricType:
    """A uniformly shuffled valid type with ``n <= max_n`` and band counts ``<= max_bands``."""
    while True:
        n = rng.randint(1, max_n)
        h = [rng.randint(1, max_bands) for _ in range(n)]
        total = sum(h)
        # split the same total into n parts of size 1..max_bands
        if not n <= total <= n * max_bands:
            continue
        v = [1] * n
        for _ in range(total - n):
            free = [k for k in range(n) if v[k] < max_bands]
            v[rng.choice(free)] += 1
        targets = [(k + 1, l) for k in range(n) for l in range(1, v[k] + 1)]
        rng.shuffle(targets)
        phi = {}
        a = 0
        for i in range(n):
            for j in range(h[i]):
                k, l = targets[a]
                phi[(i + 1, j + 1)] = (k, l, rng.choice((1, -1)))
                a += 1
        return make_type(h, v, phi)


def corpus(size: int, seed: int = 20240601, max_n: int = 3, max_bands: int = 3) -> list[GeometricType]:
    rng = random.Random(seed)
    return [random_type(rng, max_n, max_bands) for _ in range(size)]
