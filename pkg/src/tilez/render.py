"""ASCII pictures of a patch of a periodic tiling."""

from __future__ import annotations

import string

from .lattice import Cell
from .torus import PeriodicTiling

LABELS = string.ascii_uppercase + string.ascii_lowercase


def owners(pt: PeriodicTiling, width: int, height: int) -> dict[Cell, list[Cell]]:
    """For each cell of [0, width) x [0, height), the translate origins that
    cover it (exactly one for a valid tiling)."""
    placed = pt.as_periodic_set()
    out: dict[Cell, list[Cell]] = {}
    for y in range(height):
        for x in range(width):
            out[(x, y)] = [
                (x - fx, y - fy) for fx, fy in pt.tile if (x - fx, y - fy) in placed
            ]
    return out


def render(pt: PeriodicTiling, width: int, height: int) -> str:
    """One character per cell, top row first; cells of one translate share a
    letter. Letters are handed out in reading order and recycle after 52."""
    cover = owners(pt, width, height)
    label: dict[Cell, str] = {}
    lines = []
    for y in reversed(range(height)):
        line = []
        for x in range(width):
            who = cover[(x, y)]
            if len(who) != 1:
                line.append("?" if who else " ")
                continue
            if who[0] not in label:
                label[who[0]] = LABELS[len(label) % len(LABELS)]
            line.append(label[who[0]])
        lines.append("".join(line))
    return "\n".join(lines) + "\n"
