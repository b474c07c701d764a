"""Turning 1-periodic tilings into periodic ones.

A set D with D + (m, 0) = D has at most 2**(m*k) distinct horizontal strips
of height k, so two strips at different heights agree. Cutting D between
them and repeating vertically gives a set that is also periodic in y and,
when k exceeds the tile diameter, still tiles. General invariance vectors
are first moved to (m, 0) by a unimodular change of coordinates.

Infinite sets enter through pull-based oracles answering membership (and,
for (m, 0)-invariant sets, strip windows).
"""

from __future__ import annotations

import math
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    BudgetExceeded,
    NotAPartition,
    OracleInconsistent,
    PromiseViolated,
    WindowOutOfRange,
    ZeroVector,
)
from .lattice import (
    Cell,
    Lattice,
    PeriodicSet,
    Tile,
    UnimodularMap,
    common_lattice,
    cross,
    gl2_normalize,
    hnf,
    tile_diameter,
    union_disjoint,
)
from .torus import PeriodicTiling, check_periodic, covers_exactly

MAX_STRIP_BITS = 12


# -- oracles -----------------------------------------------------------------


class SetOracle(ABC):
    """Membership oracle for a (usually infinite) subset of Z^2."""

    @abstractmethod
    def __contains__(self, cell: Cell) -> bool: ...


class WindowOracle(SetOracle):
    """Oracle for a set invariant under (m, 0)."""

    m: int

    def window(self, s: int, r: int) -> frozenset[Cell]:
        """The set intersected with [0, m) x [s, s + r)."""
        return frozenset(
            (x, y) for y in range(s, s + r) for x in range(self.m) if (x, y) in self
        )


class OffsetRows(WindowOracle):
    """Row y holds the cells x = offset(y) mod width.

    With the horizontal bar of length ``width`` this is a tiling invariant
    under (width, 0).
    """

    def __init__(self, width: int, offset: Callable[[int], int]):
        self.m = width
        self._offset = offset
        self._cache: dict[int, int] = {}

    def offset(self, y: int) -> int:
        if y not in self._cache:
            self._cache[y] = self._offset(y) % self.m
        return self._cache[y]

    def __contains__(self, cell: Cell) -> bool:
        return cell[0] % self.m == self.offset(cell[1])


class OffsetColumns(SetOracle):
    """Column x holds the cells y = offset(x) mod width."""

    def __init__(self, width: int, offset: Callable[[int], int]):
        self.rows = OffsetRows(width, offset)

    def __contains__(self, cell: Cell) -> bool:
        return (cell[1], cell[0]) in self.rows


def _seeded_offset(seed: int, width: int) -> Callable[[int], int]:
    return lambda j: random.Random(f"{seed}:{j}").randrange(width)


def brick(width: int, vertical: bool = False) -> SetOracle:
    """Staggered bars: row j shifted by j."""
    cls = OffsetColumns if vertical else OffsetRows
    return cls(width, lambda j: j)


def random_rows(width: int, seed: int, vertical: bool = False) -> SetOracle:
    cls = OffsetColumns if vertical else OffsetRows
    return cls(width, _seeded_offset(seed, width))


class WindowTable(WindowOracle):
    """Explicit rows of an (m, 0)-invariant set on a bounded range of y."""

    def __init__(self, m: int, rows: Mapping[int, Iterable[int]], y_min: int, y_max: int):
        if m < 1 or y_max < y_min:
            raise ValueError("bad window table shape")
        self.m = m
        self.y_min = y_min
        self.y_max = y_max
        self.rows = {}
        for y, xs in rows.items():
            xs = frozenset(xs)
            if not y_min <= y <= y_max:
                raise ValueError(f"row {y} outside declared range")
            if any(not 0 <= x < m for x in xs):
                raise ValueError(f"row {y} has x outside [0, {m})")
            self.rows[y] = xs

    def __contains__(self, cell: Cell) -> bool:
        x, y = cell
        if not self.y_min <= y <= self.y_max:
            raise WindowOutOfRange(f"row {y} outside [{self.y_min}, {self.y_max}]")
        return x % self.m in self.rows.get(y, ())


class Transformed(WindowOracle):
    """Image T(D) of an oracle's set, declared invariant under (m, 0)."""

    def __init__(self, base: SetOracle, t: UnimodularMap, m: int):
        self.base = base
        self.inv = t.inverse()
        self.m = m

    def __contains__(self, cell: Cell) -> bool:
        return self.inv(cell) in self.base


class Union(SetOracle):
    def __init__(self, parts: Sequence[SetOracle]):
        self.parts = list(parts)

    def __contains__(self, cell: Cell) -> bool:
        return any(cell in p for p in self.parts)


class Predicate(SetOracle):
    def __init__(self, fn: Callable[[Cell], bool]):
        self.fn = fn

    def __contains__(self, cell: Cell) -> bool:
        return bool(self.fn(cell))


@dataclass
class OnePeriodicPart:
    direction: Cell
    oracle: SetOracle


# -- strip gluing ------------------------------------------------------------


@dataclass(frozen=True)
class GlueResult:
    placed: PeriodicSet
    start: int
    length: int
    probes: int


def vertical_period(lat: Lattice) -> int:
    """Least v > 0 with (0, v) in the lattice."""
    return lat.r * (lat.p // math.gcd(lat.p, lat.q))


def glue(
    cells: Sequence[Cell], oracle: WindowOracle, target: PeriodicSet | None = None
) -> GlueResult:
    """Strip pigeonhole for an (m, 0)-invariant D with cells (+) D = target.

    Strips of height k = diam + 1 are read at spacing a multiple of the
    target's vertical period and at least 2k; the first strip that repeats
    an earlier one fixes the cut. ``target`` None means the whole plane.
    """
    m = oracle.m
    k = tile_diameter(cells) + 1
    if m * k > MAX_STRIP_BITS:
        raise BudgetExceeded(f"m*k = {m * k} exceeds the strip cap {MAX_STRIP_BITS}")
    vp = 1 if target is None else vertical_period(target.lattice)
    spacing = vp * -(-2 * k // vp)
    seen: dict[frozenset[Cell], int] = {}
    for j in range(2 ** (m * k) + 1):
        base = j * spacing
        content = frozenset((x, y - base) for x, y in oracle.window(base, k))
        if any(not (0 <= x < m and 0 <= y < k) for x, y in content):
            raise OracleInconsistent(f"window at y={base} answered cells outside the strip")
        if content in seen:
            i = seen[content]
            s, l = i * spacing, (j - i) * spacing
            lat = hnf([(m, 0), (0, l)])
            placed = PeriodicSet.build(lat, oracle.window(s, l))
            return GlueResult(placed, s, l, j + 1)
        seen[content] = j
    raise OracleInconsistent(
        f"no repeated strip among {2 ** (m * k) + 1} probes; the oracle is not (m, 0)-invariant"
    )


def glue_strips(tile: Tile, oracle: WindowOracle) -> PeriodicTiling:
    res = glue(tile.cells, oracle)
    pt = PeriodicTiling(tile, res.placed.lattice, res.placed.reps)
    if not check_periodic(tile, pt):
        raise PromiseViolated("glued set does not tile; the oracle's set was not a tiling")
    return pt


def periodize_general(
    tile: Tile, h: Cell, oracle: SetOracle, target: PeriodicSet | None = None
) -> PeriodicSet:
    """Periodic D' with tile (+) D' = target, from an h-invariant D with
    tile (+) D = target. Works in coordinates where h = (m, 0) and maps the
    result back."""
    if tuple(h) == (0, 0):
        raise ZeroVector("invariance vector must be nonzero")
    if target is None:
        target = PeriodicSet.whole_plane()
    t, m = gl2_normalize(h)
    moved = [t(f) for f in tile]
    res = glue(moved, Transformed(oracle, t, m), target.transform(t))
    placed = res.placed.transform(t.inverse())
    if not covers_exactly(tile, placed, target):
        raise PromiseViolated("glued set does not cover the target exactly")
    return placed


def _merge_direction(a: Cell, b: Cell) -> Cell:
    """Common nonzero multiple of two proportional vectors."""
    ga = math.gcd(*a)
    gb = math.gcd(*b)
    u = (a[0] // ga, a[1] // ga)
    n = math.lcm(ga, gb)
    return u[0] * n, u[1] * n


def merge_proportional(parts: Sequence[OnePeriodicPart]) -> list[OnePeriodicPart]:
    out = list(parts)
    merged = True
    while merged:
        merged = False
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                if cross(out[i].direction, out[j].direction) == 0:
                    h = _merge_direction(out[i].direction, out[j].direction)
                    joined = OnePeriodicPart(h, Union([out[i].oracle, out[j].oracle]))
                    out = out[:i] + [joined] + out[i + 1 : j] + out[j + 1 :]
                    merged = True
                    break
            if merged:
                break
    return out


def covered_parts(tile: Tile, parts: Sequence[OnePeriodicPart], lat: Lattice) -> list[PeriodicSet]:
    """E_i = tile (+) C_i as periodic sets over ``lat``.

    Each coset is sampled at its representative and at +-2 basis steps;
    every sample must be covered by exactly one (part, tile cell) pair and
    all samples of a coset by the same part.
    """
    (p, _), (q, r) = lat.basis
    owners: list[list[Cell]] = [[] for _ in parts]
    for g in lat.domain():
        seen = set()
        for a in range(-2, 3):
            for b in range(-2, 3):
                v = (g[0] + a * p + b * q, g[1] + b * r)
                hits = [
                    i for i, part in enumerate(parts) for f in tile
                    if (v[0] - f[0], v[1] - f[1]) in part.oracle
                ]
                if len(hits) != 1:
                    raise NotAPartition(f"cell {v} is covered {len(hits)} times")
                seen.add(hits[0])
        if len(seen) != 1:
            raise PromiseViolated(f"coset of {g} is split between parts; parts not invariant")
        owners[seen.pop()].append(g)
    return [PeriodicSet(lat, tuple(sorted(o))) for o in owners]


def periodize_partition(tile: Tile, parts: Sequence[OnePeriodicPart]) -> PeriodicTiling:
    """Periodic tiling from a tiling split into 1-periodic parts."""
    if not parts:
        raise NotAPartition("no parts given")
    for part in parts:
        if tuple(part.direction) == (0, 0):
            raise ZeroVector("invariance vectors must be nonzero")
    parts = merge_proportional(parts)
    if len(parts) == 1:
        targets = [PeriodicSet.whole_plane()]
    else:
        targets = covered_parts(tile, parts, common_lattice([p.direction for p in parts]))
    pieces = [
        periodize_general(tile, part.direction, part.oracle, target)
        for part, target in zip(parts, targets)
        if target.reps
    ]
    whole = union_disjoint(pieces)
    pt = PeriodicTiling(tile, whole.lattice, whole.reps)
    if not check_periodic(tile, pt):
        raise PromiseViolated("assembled parts do not tile the plane")
    return pt


def restricted_agrees(oracle: WindowOracle, result: GlueResult) -> bool:
    """The glued set equals the oracle's set on the cut strip W(s, l)."""
    s, l = result.start, result.length
    mine = {
        (x, y) for y in range(s, s + l) for x in range(oracle.m)
        if (x, y) in result.placed
    }
    return mine == set(oracle.window(s, l))
