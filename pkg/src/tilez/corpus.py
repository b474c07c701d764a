"""Fixed polyominoes (connected, up to translation) by cell-growth.

Sizes 1..5 give 1, 2, 6, 19 and 63 shapes: 91 tiles in all.
"""

from __future__ import annotations

from functools import lru_cache

from .lattice import Tile, canonicalize_tile

FIXED_COUNTS = {1: 1, 2: 2, 3: 6, 4: 19, 5: 63, 6: 216}


@lru_cache(maxsize=None)
def fixed_polyominoes(size: int) -> tuple[Tile, ...]:
    """All fixed polyominoes with ``size`` cells, sorted by their cell lists."""
    if size < 1:
        raise ValueError("size must be positive")
    if size == 1:
        return (canonicalize_tile([(0, 0)]),)
    grown = set()
    for tile in fixed_polyominoes(size - 1):
        cells = set(tile.cells)
        for x, y in tile.cells:
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb not in cells:
                    grown.add(canonicalize_tile(cells | {nb}))
    return tuple(sorted(grown, key=lambda t: t.cells))


def corpus(max_size: int = 5) -> list[Tile]:
    return [t for k in range(1, max_size + 1) for t in fixed_polyominoes(k)]


def tile_name(tile: Tile) -> str:
    """Compact id such as 'n3:0,0;1,0;0,1'."""
    return f"n{len(tile)}:" + ";".join(f"{x},{y}" for x, y in tile.cells)
