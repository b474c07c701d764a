"""Integer geometry on Z^2: tiles, sublattices in Hermite normal form,
unimodular maps and periodic sets.

Sublattices use the lower-triangular basis {(p, 0), (q, r)} with
0 <= q < p, so the rectangle [0, p) x [0, r) is a fundamental domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .errors import (
    EmptyTile,
    NotFiniteIndex,
    ProportionalVectors,
    TooFewVectors,
    ZeroVector,
)

Cell = tuple[int, int]


def _yx(cell: Cell) -> tuple[int, int]:
    return cell[1], cell[0]


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with u*a + v*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_u, u = u, old_u - k * u
        old_v, v = v, old_v - k * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def crt(b1: int, m1: int, b2: int, m2: int) -> int | None:
    """Smallest x >= 0 with x = b1 (mod m1) and x = b2 (mod m2), or None."""
    g, u, _ = egcd(m1, m2)
    if (b2 - b1) % g:
        return None
    lcm = m1 // g * m2
    k = (b2 - b1) // g * u % (m2 // g)
    return (b1 + m1 * k) % lcm


# -- tiles -------------------------------------------------------------------


@dataclass(frozen=True)
class Tile:
    """A finite subset of Z^2 translated so min x = min y = 0.

    ``cells`` is sorted by (y, x). Build through :func:`canonicalize_tile`.
    """

    cells: tuple[Cell, ...]

    def __post_init__(self):
        if not self.cells:
            raise EmptyTile("a tile needs at least one cell")
        if len(set(self.cells)) != len(self.cells):
            raise ValueError("tile cells must be distinct")
        if min(x for x, _ in self.cells) != 0 or min(y for _, y in self.cells) != 0:
            raise ValueError("tile is not in canonical position")
        if list(self.cells) != sorted(self.cells, key=_yx):
            raise ValueError("tile cells must be sorted by (y, x)")

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    @property
    def diameter(self) -> int:
        return tile_diameter(self)

    def width(self) -> int:
        return max(x for x, _ in self.cells) + 1

    def height(self) -> int:
        return max(y for _, y in self.cells) + 1


def canonicalize_tile(cells: Iterable[Sequence[int]]) -> Tile:
    pts = {(int(c[0]), int(c[1])) for c in cells}
    if not pts:
        raise EmptyTile("a tile needs at least one cell")
    mx = min(x for x, _ in pts)
    my = min(y for _, y in pts)
    return Tile(tuple(sorted(((x - mx, y - my) for x, y in pts), key=_yx)))


def tile_diameter(tile: Tile | Iterable[Cell]) -> int:
    """Chebyshev diameter: the larger of the x-extent and the y-extent."""
    cells = list(tile)
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    return max(max(xs) - min(xs), max(ys) - min(ys))


# -- lattices ----------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Lattice:
    """Finite-index sublattice with basis {(p, 0), (q, r)}."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.p < 1 or self.r < 1 or not 0 <= self.q < self.p:
            raise ValueError(f"not a lattice in Hermite normal form: {self}")

    @property
    def index(self) -> int:
        return self.p * self.r

    @property
    def basis(self) -> tuple[Cell, Cell]:
        return (self.p, 0), (self.q, self.r)

    def __contains__(self, v: Cell) -> bool:
        return lattice_member(self, v)

    def reduce(self, v: Cell) -> Cell:
        return coset_reduce(self, v)

    def domain(self) -> list[Cell]:
        """Fundamental domain D(L), sorted lexicographically."""
        return [(i, j) for i in range(self.p) for j in range(self.r)]

    def domain_index(self, v: Cell) -> int:
        """Position of coset_reduce(v) in :meth:`domain` order."""
        i, j = coset_reduce(self, v)
        return i * self.r + j

    def as_tuple(self) -> tuple[int, int, int]:
        return self.p, self.q, self.r


FULL = Lattice(1, 0, 1)


def hnf(generators: Iterable[Sequence[int]]) -> Lattice:
    """Lower-triangular Hermite normal form of the subgroup spanned by
    ``generators``. Raises NotFiniteIndex when the span has rank < 2."""
    pivot = (0, 0)
    p = 0
    for v in generators:
        x, y = int(v[0]), int(v[1])
        if y == 0:
            p = math.gcd(p, x)
        elif pivot[1] == 0:
            pivot = (x, y)
        else:
            # unimodular 2x2 step: one row keeps gcd of the y's, the other y = 0
            g, a, b = egcd(pivot[1], y)
            px, py = pivot
            pivot = (a * px + b * x, g)
            p = math.gcd(p, (y // g) * px - (py // g) * x)
    if p == 0 or pivot[1] == 0:
        raise NotFiniteIndex("generators do not span a finite-index subgroup")
    qx, r = pivot
    if r < 0:
        qx, r = -qx, -r
    return Lattice(p, qx % p, r)


def lattice_member(lat: Lattice, v: Cell) -> bool:
    x, y = v
    if y % lat.r:
        return False
    b = y // lat.r
    return (x - b * lat.q) % lat.p == 0


def coset_reduce(lat: Lattice, v: Cell) -> Cell:
    x, y = v
    j = y % lat.r
    b = (y - j) // lat.r
    return (x - b * lat.q) % lat.p, j


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def enumerate_lattices(n: int) -> list[Lattice]:
    """All sublattices of index exactly ``n``; there are sigma(n) of them."""
    if n < 1:
        raise ValueError("index must be positive")
    return [Lattice(p, q, n // p) for p in divisors(n) for q in range(p)]


def lattice_intersect(a: Lattice, b: Lattice) -> Lattice:
    # y must be a multiple of lcm(r_a, r_b); along that line the x-congruences
    # are compatible only on a subgroup t*Z, found by a gcd.
    big_r = math.lcm(a.r, b.r)
    ca = big_r // a.r * a.q
    cb = big_r // b.r * b.q
    g = math.gcd(a.p, b.p)
    step = g // math.gcd(g, ca - cb)
    x = crt(step * ca % a.p, a.p, step * cb % b.p, b.p)
    assert x is not None
    p = math.lcm(a.p, b.p)
    return Lattice(p, x % p, big_r * step)


def intersect_all(lattices: Iterable[Lattice]) -> Lattice:
    return reduce(lattice_intersect, lattices, FULL)


def cross(u: Cell, v: Cell) -> int:
    return u[0] * v[1] - u[1] * v[0]


def common_lattice(vectors: Sequence[Cell]) -> Lattice:
    """Intersection over all pairs of the subgroups <h_i, h_j>.

    A partition of Z^2 into parts E_i with E_i + h_i = E_i (no two h_i
    proportional) is invariant under the result, part by part.
    """
    hs = [tuple(h) for h in vectors]
    if len(hs) < 2:
        raise TooFewVectors("need at least two invariance vectors")
    for h in hs:
        if h == (0, 0):
            raise ZeroVector("invariance vectors must be nonzero")
    out = FULL
    for i in range(len(hs)):
        for j in range(i + 1, len(hs)):
            if cross(hs[i], hs[j]) == 0:
                raise ProportionalVectors(f"{hs[i]} and {hs[j]} are proportional")
            out = lattice_intersect(out, hnf([hs[i], hs[j]]))
    return out


# -- unimodular maps ---------------------------------------------------------


@dataclass(frozen=True)
class UnimodularMap:
    """Integer 2x2 matrix ((a, b), (c, d)) with determinant +-1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if abs(self.det) != 1:
            raise ValueError(f"determinant {self.det} is not +-1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "UnimodularMap":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __call__(self, v: Cell) -> Cell:
        return self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]

    def __matmul__(self, other: "UnimodularMap") -> "UnimodularMap":
        return UnimodularMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "UnimodularMap":
        s = self.det  # 1/det == det when det is +-1
        return UnimodularMap(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def apply_tile(self, tile: Iterable[Cell]) -> Tile:
        return canonicalize_tile(self(c) for c in tile)

    def apply_lattice(self, lat: Lattice) -> Lattice:
        return hnf([self(v) for v in lat.basis])


IDENTITY = UnimodularMap(1, 0, 0, 1)


def gl2_normalize(h: Cell) -> tuple[UnimodularMap, int]:
    """Unimodular T with T(h) = (m, 0), m = gcd(|hx|, |hy|).

    First row is the Bezout pair with the smallest nonnegative first
    coefficient; second row is +-(hy, -hx)/m with its first nonzero entry
    positive.
    """
    a, b = h
    if a == 0 and b == 0:
        raise ZeroVector("cannot normalize the zero vector")
    m, u, v = egcd(a, b)
    ag, bg = a // m, b // m
    if bg:
        # (u, v) + k * (-bg, ag) is the full family of Bezout pairs
        u_min = u % abs(bg)
        k = (u - u_min) // bg
        u, v = u_min, v + k * ag
    else:
        v = 0
    second = (bg, -ag)
    if second[0] < 0 or (second[0] == 0 and second[1] < 0):
        second = (-bg, ag)
    return UnimodularMap(u, v, *second), m


# -- periodic sets -----------------------------------------------------------


@dataclass(frozen=True)
class PeriodicSet:
    """The set L + reps, reps a subset of the fundamental domain D(L)."""

    lattice: Lattice
    reps: tuple[Cell, ...]

    def __post_init__(self):
        lat = self.lattice
        if any(coset_reduce(lat, s) != s for s in self.reps):
            raise ValueError("periodic set reps must lie in the fundamental domain")
        if len(set(self.reps)) != len(self.reps):
            raise ValueError("duplicate periodic set reps")

    @classmethod
    def build(cls, lattice: Lattice, cells: Iterable[Cell]) -> "PeriodicSet":
        """Periodic set generated by arbitrary cells (reduced, deduplicated)."""
        return cls(lattice, tuple(sorted({coset_reduce(lattice, c) for c in cells})))

    @classmethod
    def whole_plane(cls) -> "PeriodicSet":
        return cls(FULL, ((0, 0),))

    def __contains__(self, v: Cell) -> bool:
        return coset_reduce(self.lattice, v) in self._repset

    @property
    def _repset(self) -> frozenset[Cell]:
        try:
            return self.__dict__["_repset_cache"]
        except KeyError:
            s = frozenset(self.reps)
            object.__setattr__(self, "_repset_cache", s)
            return s

    @property
    def density(self) -> float:
        return len(self.reps) / self.lattice.index

    def is_whole_plane(self) -> bool:
        return len(self.reps) == self.lattice.index

    def lift(self, finer: Lattice) -> "PeriodicSet":
        """Same set, written over a sublattice of the current one."""
        if any(not lattice_member(self.lattice, v) for v in finer.basis):
            raise ValueError("target lattice is not contained in the current one")
        return PeriodicSet(finer, tuple(v for v in finer.domain() if v in self))

    def transform(self, t: UnimodularMap) -> "PeriodicSet":
        return PeriodicSet.build(t.apply_lattice(self.lattice), (t(s) for s in self.reps))

    def translate(self, v: Cell) -> "PeriodicSet":
        return PeriodicSet.build(self.lattice, ((s[0] + v[0], s[1] + v[1]) for s in self.reps))


def union_disjoint(parts: Sequence[PeriodicSet]) -> PeriodicSet:
    lat = intersect_all(p.lattice for p in parts)
    reps: set[Cell] = set()
    for part in parts:
        lifted = part.lift(lat).reps
        if reps.intersection(lifted):
            raise ValueError("periodic sets overlap")
        reps.update(lifted)
    return PeriodicSet(lat, tuple(sorted(reps)))
