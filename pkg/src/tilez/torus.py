"""Periodic tilings: exact cover of the finite group Z^2 / L.

A tiling C with C + L = C is the same thing as a set S of cosets such that
the translates F + s, read modulo L, cover every coset once.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .cover import CoverInstance, solve_cover
from .lattice import (
    Cell,
    Lattice,
    PeriodicSet,
    Tile,
    coset_reduce,
    enumerate_lattices,
    lattice_intersect,
)


@dataclass(frozen=True)
class PeriodicTiling:
    """Tiling tile + (lattice + reps) of the whole plane."""

    tile: Tile
    lattice: Lattice
    reps: tuple[Cell, ...]

    @property
    def index(self) -> int:
        return self.lattice.index

    def as_periodic_set(self) -> PeriodicSet:
        return PeriodicSet(self.lattice, self.reps)

    def translates(self) -> Iterator[Cell]:
        """Translate origins inside the fundamental domain."""
        return iter(self.reps)


def project_tile(tile: Tile, lat: Lattice) -> list[Cell] | None:
    """Tile cells reduced mod the lattice, or None if two share a coset."""
    image = [coset_reduce(lat, f) for f in tile]
    if len(set(image)) != len(image):
        return None
    return image


def torus_instance(tile: Tile, lat: Lattice) -> CoverInstance:
    """Columns are D(L) in domain order; row k places the tile at the k-th
    cell of D(L)."""
    domain = lat.domain()
    rows = [
        sorted(lat.domain_index((f[0] + t[0], f[1] + t[1])) for f in tile)
        for t in domain
    ]
    return CoverInstance.build(len(domain), 0, rows)


def solve_torus(tile: Tile, lat: Lattice) -> PeriodicTiling | None:
    if lat.index % len(tile) or project_tile(tile, lat) is None:
        return None
    sol = solve_cover(torus_instance(tile, lat))
    if sol is None:
        return None
    domain = lat.domain()
    return PeriodicTiling(tile, lat, tuple(sorted(domain[i] for i in sol)))


def _solve_indexed(args: tuple[Tile, Lattice]) -> PeriodicTiling | None:
    return solve_torus(*args)


def periodic_at_index(tile: Tile, n: int, workers: int = 1) -> PeriodicTiling | None:
    """First success among enumerate_lattices(n), in enumeration order.

    With workers > 1 all lattices are solved in a process pool; the earliest
    success in enumeration order is kept, so the answer is unchanged.
    """
    if n % len(tile):
        return None
    lattices = enumerate_lattices(n)
    if workers <= 1 or len(lattices) < 2:
        for lat in lattices:
            found = solve_torus(tile, lat)
            if found is not None:
                return found
        return None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for found in pool.map(_solve_indexed, [(tile, lat) for lat in lattices]):
            if found is not None:
                return found
    return None


def find_periodic_tiling(
    tile: Tile, max_index: int, workers: int = 1
) -> PeriodicTiling | None:
    """Scan indices |F|, 2|F|, ... up to ``max_index``."""
    n = len(tile)
    while n <= max_index:
        found = periodic_at_index(tile, n, workers)
        if found is not None:
            return found
        n += len(tile)
    return None


def check_periodic(tile: Tile, pt: PeriodicTiling) -> bool:
    """Direct counting check of a periodic tiling certificate."""
    lat = pt.lattice
    if tuple(pt.tile.cells) != tuple(tile.cells):
        return False
    if any(coset_reduce(lat, s) != s for s in pt.reps) or len(set(pt.reps)) != len(pt.reps):
        return False
    if len(tile) * len(pt.reps) != lat.index:
        return False
    if len({coset_reduce(lat, f) for f in tile}) != len(tile):
        return False
    hits = [0] * lat.index
    for s in pt.reps:
        for f in tile:
            hits[lat.domain_index((f[0] + s[0], f[1] + s[1]))] += 1
    return all(h == 1 for h in hits)


def covers_exactly(tile: Tile, placed: PeriodicSet, target: PeriodicSet) -> bool:
    """True iff tile (+) placed == target, by counting on a common quotient."""
    lat = lattice_intersect(placed.lattice, target.lattice)
    origins = placed.lift(lat).reps
    want = set(target.lift(lat).reps)
    hits: dict[Cell, int] = {}
    for s in origins:
        for f in tile:
            c = coset_reduce(lat, (f[0] + s[0], f[1] + s[1]))
            hits[c] = hits.get(c, 0) + 1
    return set(hits) == want and all(v == 1 for v in hits.values())
