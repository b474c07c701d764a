"""JSON documents: tiles, certificates and window tables.

Field order is fixed so certificates diff cleanly between runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from . import __version__
from .box import ObstructionCertificate
from .decider import DoesNotTile, Inconclusive, Tiles, Verdict
from .errors import DocumentError, EmptyTile
from .lattice import Lattice, Tile, canonicalize_tile
from .periodizer import WindowTable
from .torus import PeriodicTiling

VERDICTS = ("tiles", "does_not_tile", "inconclusive")


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return value


def _pair(value: Any, what: str) -> tuple[int, int]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise DocumentError(f"{what} must be an [x, y] pair, got {value!r}")
    return _int(value[0], what), _int(value[1], what)


def parse_grid(rows: list[str]) -> Tile:
    """'#' marks a cell; the first row is the top (highest y)."""
    if not rows or not all(isinstance(r, str) for r in rows):
        raise DocumentError("grid must be a nonempty list of strings")
    if len({len(r) for r in rows}) != 1:
        raise DocumentError("grid rows must have equal length")
    cells = []
    for i, row in enumerate(rows):
        for x, ch in enumerate(row):
            if ch == "#":
                cells.append((x, len(rows) - 1 - i))
            elif ch != ".":
                raise DocumentError(f"grid character {ch!r} is not '#' or '.'")
    try:
        return canonicalize_tile(cells)
    except EmptyTile as exc:
        raise DocumentError("grid has no '#' cells") from exc


def tile_from_document(doc: Any) -> tuple[Tile, str | None]:
    if not isinstance(doc, dict):
        raise DocumentError("tile document must be an object")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("tile name must be a string")
    if ("grid" in doc) == ("cells" in doc):
        raise DocumentError("tile document needs exactly one of 'grid' or 'cells'")
    if "grid" in doc:
        return parse_grid(doc["grid"]), name
    cells = doc["cells"]
    if not isinstance(cells, list) or not cells:
        raise DocumentError("'cells' must be a nonempty list")
    pts = [_pair(c, "cell") for c in cells]
    if len(set(pts)) != len(pts):
        raise DocumentError("'cells' has duplicates")
    return canonicalize_tile(pts), name


def tile_to_document(tile: Tile, name: str | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {}
    if name is not None:
        doc["name"] = name
    doc["cells"] = [[x, y] for x, y in tile.cells]
    return doc


@dataclass(frozen=True)
class Certificate:
    tile: Tile
    verdict: Verdict
    schedule: str = "alternate"
    tool_version: str = __version__
    name: str | None = None


def certificate_to_document(cert: Certificate) -> dict[str, Any]:
    v = cert.verdict
    doc: dict[str, Any] = {
        "tool_version": cert.tool_version,
        "schedule": cert.schedule,
        "tile": tile_to_document(cert.tile, cert.name),
        "verdict": v.kind,
    }
    if isinstance(v, Tiles):
        lat = v.tiling.lattice
        doc["lattice"] = {"p": lat.p, "q": lat.q, "r": lat.r}
        doc["reps"] = [[x, y] for x, y in v.tiling.reps]
    elif isinstance(v, DoesNotTile):
        doc["radius"] = v.obstruction.radius
        doc["policy"] = v.obstruction.search_policy_version
    else:
        doc["budget_spent"] = {"max_index": v.max_index_reached, "max_box": v.max_box_reached}
    return doc


def certificate_from_document(doc: Any) -> Certificate:
    if not isinstance(doc, dict):
        raise DocumentError("certificate must be an object")
    for key in ("tile", "verdict"):
        if key not in doc:
            raise DocumentError(f"certificate is missing {key!r}")
    tile, name = tile_from_document(doc["tile"])
    kind = doc["verdict"]
    if kind not in VERDICTS:
        raise DocumentError(f"unknown verdict {kind!r}")
    verdict: Verdict
    try:
        if kind == "tiles":
            lat_doc = doc["lattice"]
            if not isinstance(lat_doc, dict):
                raise DocumentError("'lattice' must be an object")
            lat = Lattice(*(_int(lat_doc[k], f"lattice.{k}") for k in "pqr"))
            reps = doc["reps"]
            if not isinstance(reps, list):
                raise DocumentError("'reps' must be a list")
            verdict = Tiles(PeriodicTiling(tile, lat, tuple(_pair(s, "rep") for s in reps)))
        elif kind == "does_not_tile":
            policy = doc["policy"]
            if not isinstance(policy, str):
                raise DocumentError("'policy' must be a string")
            verdict = DoesNotTile(
                ObstructionCertificate(tile, _int(doc["radius"], "radius"), policy)
            )
        else:
            spent = doc["budget_spent"]
            verdict = Inconclusive(
                _int(spent["max_index"], "max_index"), _int(spent["max_box"], "max_box")
            )
    except KeyError as exc:
        raise DocumentError(f"certificate is missing {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        raise DocumentError(str(exc)) from exc
    schedule = doc.get("schedule", "alternate")
    version = doc.get("tool_version", __version__)
    if not isinstance(schedule, str) or not isinstance(version, str):
        raise DocumentError("'schedule' and 'tool_version' must be strings")
    return Certificate(tile, verdict, schedule, version, name)


def _format(value: Any, indent: int) -> str:
    pad = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_format(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        items = [pad + _format(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(value, ensure_ascii=False)


def dumps(doc: Any) -> str:
    """JSON with one structure per line; flat lists such as [x, y] stay inline."""
    return _format(doc, 0) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc


def window_table_from_document(doc: Any) -> WindowTable:
    """{"m": 2, "y_range": [lo, hi], "rows": {"0": [0], "1": [1], ...}}"""
    if not isinstance(doc, dict):
        raise DocumentError("window table must be an object")
    try:
        m = _int(doc["m"], "m")
        lo, hi = _pair(doc["y_range"], "y_range")
        rows_doc = doc["rows"]
        if not isinstance(rows_doc, dict):
            raise DocumentError("'rows' must be an object")
        rows = {}
        for key, xs in rows_doc.items():
            if not isinstance(xs, list):
                raise DocumentError(f"row {key} must be a list")
            rows[int(key)] = [_int(x, f"row {key}") for x in xs]
        return WindowTable(m, rows, lo, hi)
    except KeyError as exc:
        raise DocumentError(f"window table is missing {exc.args[0]!r}") from exc
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def window_table_to_document(table: WindowTable) -> dict[str, Any]:
    return {
        "m": table.m,
        "y_range": [table.y_min, table.y_max],
        "rows": {str(y): sorted(table.rows[y]) for y in sorted(table.rows)},
    }
