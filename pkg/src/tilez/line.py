"""Tilings of Z by a finite set of integers.

Scanning the line cell by cell, the only information that crosses the
frontier is which of the next diam(F) cells are already covered. A cell
that is uncovered when the frontier reaches it must receive the tile's
smallest offset, so each boundary state has at most one successor, and a
bi-infinite tiling is exactly a cycle of this map. The cycle length is the
period, hence at most 2**diam(F).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class LineTile:
    offsets: tuple[int, ...]

    def __post_init__(self):
        if not self.offsets:
            raise ValueError("a line tile needs at least one offset")
        if self.offsets[0] != 0 or list(self.offsets) != sorted(set(self.offsets)):
            raise ValueError("line tile offsets must be sorted, distinct, and start at 0")

    @classmethod
    def of(cls, offsets: Iterable[int]) -> "LineTile":
        pts = sorted({int(o) for o in offsets})
        if not pts:
            raise ValueError("a line tile needs at least one offset")
        return cls(tuple(o - pts[0] for o in pts))

    @property
    def diameter(self) -> int:
        return self.offsets[-1]

    def __len__(self) -> int:
        return len(self.offsets)


@dataclass(frozen=True)
class LineTiling:
    period: int
    starts: tuple[int, ...]


def _step(state: int, mask: int, window: int) -> int | None:
    """Advance the frontier by one cell; None on a collision."""
    if state & 1:
        return state >> 1
    if state & window:
        return None
    return (state | mask) >> 1


def decide_line(tile: LineTile) -> LineTiling | None:
    d = tile.diameter
    mask = sum(1 << f for f in tile.offsets)
    window = mask & ((1 << d) - 1)
    dead: set[int] = set()
    for start in range(1 << d):
        if start in dead:
            continue
        path: dict[int, int] = {}
        order: list[int] = []
        state: int | None = start
        while state is not None and state not in path and state not in dead:
            path[state] = len(order)
            order.append(state)
            state = _step(state, mask, window)
        if state is not None and state in path:
            cycle = order[path[state]:]
            starts = tuple(i for i, s in enumerate(cycle) if not s & 1)
            return LineTiling(len(cycle), starts)
        dead.update(order)
    return None


def verify_line(tile: LineTile, tiling: LineTiling) -> bool:
    p = tiling.period
    if p < 1 or len(set(tiling.starts)) != len(tiling.starts):
        return False
    if any(not 0 <= s < p for s in tiling.starts):
        return False
    if len(tile) * len(tiling.starts) != p:
        return False
    hits = [0] * p
    for s in tiling.starts:
        for f in tile.offsets:
            hits[(s + f) % p] += 1
    return all(h == 1 for h in hits)
