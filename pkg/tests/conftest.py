from __future__ import annotations

import random

import pytest

from tilez.lattice import Lattice, UnimodularMap, canonicalize_tile

ACCEPTANCE_LINES: list[str] = []

DOMINO = canonicalize_tile([(0, 0), (1, 0)])
TROMINO = canonicalize_tile([(0, 0), (1, 0), (0, 1)])
MONO = canonicalize_tile([(0, 0)])
GAPPY = canonicalize_tile([(0, 0), (1, 0), (3, 0)])


def span_member(g1, g2, v) -> bool:
    """v in Z g1 + Z g2, by Cramer's rule (g1, g2 independent)."""
    det = g1[0] * g2[1] - g1[1] * g2[0]
    a = v[0] * g2[1] - v[1] * g2[0]
    b = g1[0] * v[1] - g1[1] * v[0]
    return a % det == 0 and b % det == 0


def lattice_points(lat: Lattice, radius: int) -> set:
    """Members of lat in [-radius, radius]^2 via Cramer's rule on its basis."""
    g1, g2 = lat.basis
    rng = range(-radius, radius + 1)
    return {(x, y) for x in rng for y in rng if span_member(g1, g2, (x, y))}


def random_lattice(rng: random.Random, max_index: int) -> Lattice:
    n = rng.randint(1, max_index)
    ps = [p for p in range(1, n + 1) if n % p == 0]
    p = rng.choice(ps)
    return Lattice(p, rng.randrange(p), n // p)


def random_unimodular(rng: random.Random, bound: int = 3) -> UnimodularMap:
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if abs(a * d - b * c) == 1:
            return UnimodularMap(a, b, c, d)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
