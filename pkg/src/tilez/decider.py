"""Deciding whether a finite tile tiles the plane by translations.

Two semi-decision procedures are interleaved. Procedure A looks for a
periodic tiling over sublattices of growing index; Procedure B looks for a
square box that cannot be packed exactly. A tile that tiles the plane also
tiles it periodically, so with unbounded budgets one of the two always
stops. Real runs are budgeted and may end Inconclusive.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .box import POLICY_VERSION, ObstructionCertificate, coverable
from .errors import NotVerifiable
from .lattice import Tile
from .oracles import naive_box_coverable
from .torus import PeriodicTiling, check_periodic, periodic_at_index

NAMED_SCHEDULES = {
    "alternate": (1, 1),
    "periodic-heavy": (4, 1),
    "box-heavy": (1, 4),
}


def parse_schedule(schedule: str) -> tuple[int, int]:
    """'alternate', 'periodic-heavy', 'box-heavy' or 'A:B' step weights."""
    if schedule in NAMED_SCHEDULES:
        return NAMED_SCHEDULES[schedule]
    m = re.fullmatch(r"(\d+):(\d+)", schedule)
    if not m or (int(m[1]), int(m[2])) == (0, 0):
        raise ValueError(f"unknown schedule {schedule!r}")
    return int(m[1]), int(m[2])


@dataclass(frozen=True)
class Budget:
    max_index: int | None = 120
    max_box: int | None = 8
    schedule: str = "alternate"


@dataclass(frozen=True)
class Tiles:
    tiling: PeriodicTiling
    kind = "tiles"


@dataclass(frozen=True)
class DoesNotTile:
    obstruction: ObstructionCertificate
    kind = "does_not_tile"


@dataclass(frozen=True)
class Inconclusive:
    max_index_reached: int
    max_box_reached: int
    kind = "inconclusive"


Verdict = Union[Tiles, DoesNotTile, Inconclusive]


def decide(tile: Tile, budget: Budget = Budget(), workers: int = 1) -> Verdict:
    """Dovetail the two procedures under ``budget``.

    Round structure for weights (a, b): a periodic steps, then b box steps.
    Periodic step t tries every lattice of index t*|F|; box step t tests
    B_t. B_0 is always coverable, so box steps start at radius 1 and the
    first uncoverable radius found is the least one.
    """
    wa, wb = parse_schedule(budget.schedule)
    k = len(tile)
    index_done = 0
    radius_done = 0

    def a_open() -> bool:
        return wa > 0 and (budget.max_index is None or index_done + k <= budget.max_index)

    def b_open() -> bool:
        return wb > 0 and (budget.max_box is None or radius_done + 1 <= budget.max_box)

    while a_open() or b_open():
        for _ in range(wa):
            if not a_open():
                break
            index_done += k
            found = periodic_at_index(tile, index_done, workers)
            if found is not None:
                return Tiles(found)
        for _ in range(wb):
            if not b_open():
                break
            radius_done += 1
            if not coverable(tile, radius_done):
                return DoesNotTile(ObstructionCertificate(tile, radius_done))
    return Inconclusive(index_done, radius_done)


def verify_obstruction(tile: Tile, cert: ObstructionCertificate) -> bool:
    """Re-search the box with the naive packer; no cover-engine code."""
    if tuple(cert.tile.cells) != tuple(tile.cells):
        return False
    if cert.search_policy_version != POLICY_VERSION or cert.radius < 0:
        return False
    return not naive_box_coverable(tile.cells, cert.radius)


def verify(tile: Tile, verdict: Verdict) -> bool:
    if isinstance(verdict, Tiles):
        return check_periodic(tile, verdict.tiling)
    if isinstance(verdict, DoesNotTile):
        return verify_obstruction(tile, verdict.obstruction)
    raise NotVerifiable("an inconclusive verdict carries no certificate")
