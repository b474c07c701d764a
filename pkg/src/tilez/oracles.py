"""Deliberately naive reference searches.

Nothing here imports the cover engine or the optimized searches; these
functions mint the expected constants in the test suite and re-verify
obstruction certificates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable

from .errors import BudgetExceeded
from .lattice import Cell, Lattice

BRUTE_TORUS_MAX_INDEX = 9
BRUTE_BOX_MAX_RADIUS = 5
BRUTE_BOX_MAX_CELLS = 6


@dataclass
class OracleReport:
    subject: str
    instance: dict[str, Any]
    oracle_answer: Any
    engine_answer: Any = None
    seed: int | None = None
    agree: bool | None = field(default=None)

    def __post_init__(self):
        if self.agree is None and self.engine_answer is not None:
            self.agree = self.oracle_answer == self.engine_answer


def _reduce(lat: Lattice, v: Cell) -> Cell:
    # restated on purpose instead of reusing the lattice module
    x, y = v
    b, j = divmod(y, lat.r)
    return (x - b * lat.q) % lat.p, j


def brute_torus(tile: Iterable[Cell], lat: Lattice) -> tuple[Cell, ...] | None:
    """Every subset of D(L) of the right size, in lexicographic order."""
    cells = list(tile)
    if lat.index > BRUTE_TORUS_MAX_INDEX:
        raise BudgetExceeded(f"brute_torus handles index <= {BRUTE_TORUS_MAX_INDEX}")
    if lat.index % len(cells):
        return None
    domain = sorted((i, j) for i in range(lat.p) for j in range(lat.r))
    want = set(domain)
    for reps in itertools.combinations(domain, lat.index // len(cells)):
        hit = [_reduce(lat, (f[0] + s[0], f[1] + s[1])) for s in reps for f in cells]
        if len(hit) == len(set(hit)) and set(hit) == want:
            return reps
    return None


def _pack(cells: list[Cell], order: list[Cell], covered: set[Cell], pos: int) -> bool:
    while pos < len(order) and order[pos] in covered:
        pos += 1
    if pos == len(order):
        return True
    cx, cy = order[pos]
    for fx, fy in cells:
        placed = [(gx - fx + cx, gy - fy + cy) for gx, gy in cells]
        if covered.isdisjoint(placed):
            covered.update(placed)
            if _pack(cells, order, covered, pos + 1):
                return True
            covered.difference_update(placed)
    return False


def naive_box_coverable(tile: Iterable[Cell], n: int) -> bool:
    """First-uncovered-cell packer for B_n = [-n, n]^2; no size limits.

    Translates may stick out of the box but never overlap, inside or out.
    """
    cells = list(tile)
    order = [(x, y) for y in range(-n, n + 1) for x in range(-n, n + 1)]
    return _pack(cells, order, set(), 0)


def brute_box(tile: Iterable[Cell], n: int) -> bool:
    cells = list(tile)
    if n > BRUTE_BOX_MAX_RADIUS or len(cells) > BRUTE_BOX_MAX_CELLS:
        raise BudgetExceeded(
            f"brute_box handles n <= {BRUTE_BOX_MAX_RADIUS}, |F| <= {BRUTE_BOX_MAX_CELLS}"
        )
    return naive_box_coverable(cells, n)


def least_uncoverable_radius(tile: Iterable[Cell], max_n: int = BRUTE_BOX_MAX_RADIUS) -> int | None:
    cells = list(tile)
    for n in range(max_n + 1):
        if not brute_box(cells, n):
            return n
    return None


def _cyclic_pack(offsets: list[int], p: int, covered: list[bool], starts: list[int]) -> bool:
    try:
        c = covered.index(False)
    except ValueError:
        return True
    for f in offsets:
        t = (c - f) % p
        spots = [(t + g) % p for g in offsets]
        if not any(covered[s] for s in spots):
            for s in spots:
                covered[s] = True
            starts.append(t)
            if _cyclic_pack(offsets, p, covered, starts):
                return True
            starts.pop()
            for s in spots:
                covered[s] = False
    return False


def brute_line(offsets: Iterable[int], horizon: int) -> tuple[int, tuple[int, ...]] | None:
    """Smallest period p <= horizon admitting a tiling of Z/pZ, with starts.

    Any tiling of Z by a finite set is periodic, so with a horizon beyond the
    period bound this decides the 1-D problem.
    """
    offs = sorted(set(offsets))
    offs = [o - offs[0] for o in offs]
    k = len(offs)
    for p in range(k, horizon + 1, k):
        if len({o % p for o in offs}) < k:
            continue
        starts: list[int] = []
        if _cyclic_pack(offs, p, [False] * p, starts):
            return p, tuple(sorted(starts))
    return None
