"""Decide, certify and periodize tilings of the integer plane by translates of one tile.

Exit codes: 0 tiles, 1 does not tile, 2 inconclusive, 3 periodizer input
rejected, 64 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .corpus import corpus, tile_name
from .decider import Budget, DoesNotTile, Inconclusive, Tiles, decide, parse_schedule, verify
from .documents import (
    Certificate,
    certificate_from_document,
    certificate_to_document,
    dumps,
    loads,
    parse_grid,
    tile_from_document,
    window_table_from_document,
)
from .errors import BudgetExceeded, DocumentError, NotVerifiable, OracleError, TilezError
from .lattice import Lattice, Tile, canonicalize_tile
from .line import LineTile, decide_line
from .oracles import OracleReport, brute_box, brute_line, brute_torus
from .periodizer import brick, periodize_general, random_rows
from .render import render
from .torus import PeriodicTiling

EXIT_TILES, EXIT_NO_TILE, EXIT_INCONCLUSIVE, EXIT_PERIODIZE, EXIT_USAGE = 0, 1, 2, 3, 64
EXIT_BY_KIND = {"tiles": EXIT_TILES, "does_not_tile": EXIT_NO_TILE, "inconclusive": EXIT_INCONCLUSIVE}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _bound(text: str) -> int | None:
    if text.lower() in ("inf", "unbounded", "none"):
        return None
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _vector(text: str) -> tuple[int, int]:
    try:
        x, y = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}") from None
    return x, y


def _add_tile_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("tile", nargs="?", help="tile document (JSON)")
    p.add_argument("--grid", help="inline grid, rows separated by '/', top row first")
    p.add_argument("--cells", help="inline cells, e.g. '0,0 1,0 3,0'")


def _read_tile(args) -> tuple[Tile, str | None]:
    given = [v for v in (args.tile, args.grid, args.cells) if v is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of a tile file, --grid or --cells")
    if args.grid is not None:
        return parse_grid(args.grid.split("/")), None
    if args.cells is not None:
        try:
            cells = [tuple(int(v) for v in c.split(",")) for c in args.cells.split()]
        except ValueError:
            raise UsageError(f"bad --cells value {args.cells!r}") from None
        if not cells or any(len(c) != 2 for c in cells) or len(set(cells)) != len(cells):
            raise UsageError(f"bad --cells value {args.cells!r}")
        return canonicalize_tile(cells), None
    return tile_from_document(_load(args.tile))


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _threads(value: int | None) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get("TILEZ_THREADS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        raise UsageError(f"TILEZ_THREADS={env!r} is not an integer") from None


def cmd_decide(args) -> int:
    tile, name = _read_tile(args)
    try:
        parse_schedule(args.schedule)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    budget = Budget(args.max_index, args.max_box, args.schedule)
    verdict = decide(tile, budget, workers=_threads(args.threads))
    cert = Certificate(tile, verdict, args.schedule, __version__, name)
    text = dumps(certificate_to_document(cert))
    if args.emit_cert:
        if not isinstance(verdict, Inconclusive):
            _write(args.emit_cert, text)
        print(_summary(verdict))
    else:
        sys.stdout.write(text)
    return EXIT_BY_KIND[verdict.kind]


def _summary(verdict) -> str:
    if isinstance(verdict, Tiles):
        lat = verdict.tiling.lattice
        return f"tiles: lattice p={lat.p} q={lat.q} r={lat.r} index={lat.index}"
    if isinstance(verdict, DoesNotTile):
        return f"does not tile: box radius {verdict.obstruction.radius}"
    return (
        f"inconclusive: index up to {verdict.max_index_reached}, "
        f"box radius up to {verdict.max_box_reached}"
    )


def cmd_verify(args) -> int:
    cert = certificate_from_document(_load(args.cert))
    try:
        ok = verify(cert.tile, cert.verdict)
    except NotVerifiable as exc:
        raise UsageError(f"NotVerifiable: {exc}") from None
    print("valid" if ok else "INVALID")
    return 0 if ok else 1


def _bar_direction(tile: Tile) -> str | None:
    w = len(tile)
    if tile.cells == tuple((i, 0) for i in range(w)):
        return "rows"
    if tile.cells == tuple((0, i) for i in range(w)):
        return "columns"
    return None


def cmd_periodize(args) -> int:
    tile, name = _read_tile(args)
    spec = args.oracle
    if spec == "brick" or spec.startswith("random-rows"):
        axis = _bar_direction(tile)
        if axis is None:
            raise UsageError("built-in oracles need a straight bar tile; use a window table")
        vertical = axis == "columns"
        if spec == "brick":
            oracle = brick(len(tile), vertical)
        else:
            _, _, seed = spec.partition(":")
            try:
                seed_value = int(seed) if seed else args.seed
            except ValueError:
                raise UsageError(f"bad seed in {spec!r}") from None
            oracle = random_rows(len(tile), seed_value, vertical)
        default_h = (0, len(tile)) if vertical else (len(tile), 0)
    else:
        oracle = window_table_from_document(_load(spec))
        default_h = (oracle.m, 0)
    h = args.h or default_h
    try:
        placed = periodize_general(tile, h, oracle)
    except (OracleError, BudgetExceeded) as exc:
        print(f"tilez periodize: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PERIODIZE
    verdict = Tiles(PeriodicTiling(tile, placed.lattice, placed.reps))
    cert = Certificate(tile, verdict, f"periodize:{spec}", __version__, name)
    text = dumps(certificate_to_document(cert))
    if args.emit_cert:
        _write(args.emit_cert, text)
        print(_summary(verdict))
    else:
        sys.stdout.write(text)
    return 0


def cmd_render(args) -> int:
    cert = certificate_from_document(_load(args.cert))
    if not isinstance(cert.verdict, Tiles):
        raise UsageError("render needs a 'tiles' certificate")
    if args.width < 1 or args.height < 1:
        raise UsageError("width and height must be positive")
    sys.stdout.write(render(cert.verdict.tiling, args.width, args.height))
    return 0


def cmd_decide_line(args) -> int:
    try:
        tile = LineTile.of(args.offsets)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    found = decide_line(tile)
    doc = {"offsets": list(tile.offsets), "diameter": tile.diameter}
    if found is None:
        doc["verdict"] = "does_not_tile"
    else:
        doc.update(verdict="tiles", period=found.period, starts=list(found.starts))
    sys.stdout.write(dumps(doc))
    return EXIT_TILES if found else EXIT_NO_TILE


def cmd_corpus(args) -> int:
    docs = [{"name": tile_name(t), "cells": [[x, y] for x, y in t.cells]} for t in corpus(args.max_size)]
    text = dumps(docs)
    if args.out:
        _write(args.out, text)
        print(f"{len(docs)} tiles written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args) -> int:
    if args.subject == "line":
        offsets = [int(v) for v in args.values]
        d = max(offsets) - min(offsets)
        answer = brute_line(offsets, args.horizon or 2 * 2**d)
        report = OracleReport("brute_line", {"offsets": offsets}, answer)
    else:
        tile, _ = _read_tile(args)
        if args.subject == "box":
            first = next((n for n in range(args.max_n + 1) if not brute_box(tile.cells, n)), None)
            report = OracleReport("brute_box", {"cells": tile.cells, "max_n": args.max_n}, first)
        else:
            lat = Lattice(*args.lattice)
            report = OracleReport("brute_torus", {"cells": tile.cells, "lattice": args.lattice},
                                  brute_torus(tile.cells, lat))
    sys.stdout.write(dumps({"subject": report.subject, "instance": report.instance,
                            "oracle_answer": report.oracle_answer}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tilez", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"tilez {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser,
                                metavar="{decide,verify,periodize,render,decide-line,corpus}")

    p = sub.add_parser("decide", help="decide whether a tile tiles the plane")
    _add_tile_args(p)
    p.add_argument("--max-index", type=_bound, default=120)
    p.add_argument("--max-box", type=_bound, default=8)
    p.add_argument("--schedule", default="alternate",
                   help="alternate | periodic-heavy | box-heavy | A:B")
    p.add_argument("--emit-cert", metavar="PATH")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized oracles (decide is deterministic)")
    p.add_argument("--threads", type=int, help="worker processes (default: $TILEZ_THREADS or 1)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="re-check a certificate")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("periodize", help="periodize a 1-periodic tiling given by an oracle")
    _add_tile_args(p)
    p.add_argument("--oracle", required=True, help="brick | random-rows:SEED | window-table path")
    p.add_argument("--h", type=_vector, help="invariance vector X,Y")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit-cert", metavar="PATH")
    p.set_defaults(func=cmd_periodize)

    p = sub.add_parser("render", help="draw a patch of a periodic tiling")
    p.add_argument("cert")
    p.add_argument("--width", type=int, default=12)
    p.add_argument("--height", type=int, default=6)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("decide-line", help="decide whether a finite set of integers tiles Z")
    p.add_argument("offsets", nargs="+", type=int)
    p.set_defaults(func=cmd_decide_line)

    p = sub.add_parser("corpus", help="list all fixed polyominoes up to a size")
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_corpus)

    # hidden: brute-force oracles that mint the pinned test constants
    p = sub.add_parser("oracle")
    p.add_argument("subject", choices=["box", "torus", "line"])
    p.add_argument("values", nargs="*", help="offsets for 'line'")
    p.add_argument("--tile", dest="tile")
    p.add_argument("--grid")
    p.add_argument("--cells")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--lattice", type=int, nargs=3, metavar=("P", "Q", "R"), default=(1, 0, 1))
    p.add_argument("--horizon", type=int)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DocumentError) as exc:
        print(f"tilez {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TilezError as exc:
        print(f"tilez {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
