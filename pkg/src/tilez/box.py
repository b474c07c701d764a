"""Finite obstructions: square boxes that no packing of translates covers.

If every box [-n, n]^2 can be covered exactly by translates of F that are
allowed to stick out (overlapping nowhere), a tiling of the plane exists by
compactness. So a single uncoverable box proves F does not tile.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import CoverInstance, solve_cover
from .lattice import Cell, Tile, tile_diameter

POLICY_VERSION = "box-dlx-mrv/1"


@dataclass(frozen=True)
class ObstructionCertificate:
    tile: Tile
    radius: int
    search_policy_version: str = POLICY_VERSION


def box_cells(n: int) -> list[Cell]:
    return [(x, y) for y in range(-n, n + 1) for x in range(-n, n + 1)]


def box_instance(tile: Tile, n: int) -> tuple[CoverInstance, list[Cell]]:
    """Exact-cover encoding of coverable(tile, n).

    Primary columns are the cells of B_n, secondary columns the halo
    B_{n+d} minus B_n, with d the tile diameter. Returns the instance and
    the translate of each row.
    """
    d = tile_diameter(tile)
    column: dict[Cell, int] = {c: i for i, c in enumerate(box_cells(n))}
    n_primary = len(column)
    outer = n + d
    for y in range(-outer, outer + 1):
        for x in range(-outer, outer + 1):
            if (x, y) not in column:
                column[(x, y)] = len(column)
    rows = []
    shifts = []
    for ty in range(-outer, n + 1):
        for tx in range(-outer, n + 1):
            cells = [(fx + tx, fy + ty) for fx, fy in tile]
            if any(abs(x) <= n and abs(y) <= n for x, y in cells):
                rows.append(sorted(column[c] for c in cells))
                shifts.append((tx, ty))
    return CoverInstance.build(n_primary, len(column) - n_primary, rows), shifts


def box_packing(tile: Tile, n: int) -> list[Cell] | None:
    """Translates of an exact packing of B_n, or None."""
    inst, shifts = box_instance(tile, n)
    sol = solve_cover(inst)
    if sol is None:
        return None
    return [shifts[i] for i in sol]


def coverable(tile: Tile, n: int) -> bool:
    if n < 0:
        raise ValueError("radius must be nonnegative")
    return box_packing(tile, n) is not None


def find_obstruction(tile: Tile, max_n: int, start: int = 0) -> ObstructionCertificate | None:
    """Least n in [start, max_n] whose box is not coverable."""
    for n in range(start, max_n + 1):
        if not coverable(tile, n):
            return ObstructionCertificate(tile, n)
    return None
