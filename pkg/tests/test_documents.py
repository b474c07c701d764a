import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import DOMINO, GAPPY, TROMINO
from tilez.box import ObstructionCertificate
from tilez.decider import DoesNotTile, Inconclusive, Tiles, decide, verify
from tilez.documents import (
    Certificate,
    certificate_from_document,
    certificate_to_document,
    dumps,
    loads,
    parse_grid,
    tile_from_document,
    window_table_from_document,
    window_table_to_document,
)
from tilez.errors import DocumentError
from tilez.lattice import Lattice, canonicalize_tile
from tilez.periodizer import WindowTable
from tilez.render import owners, render
from tilez.torus import PeriodicTiling


def test_grid_examples():
    assert parse_grid(["##"]) == DOMINO
    assert parse_grid(["#.", "##"]) == TROMINO
    assert parse_grid(["##.#"]) == GAPPY
    for bad in ([], ["#", "##"], ["..."], ["#x"]):
        with pytest.raises(DocumentError):
            parse_grid(bad)


@settings(max_examples=100, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=8))
def test_grid_and_cells_agree(cells):
    w = max(x for x, _ in cells) + 1
    h = max(y for _, y in cells) + 1
    grid = ["".join("#" if (x, y) in cells else "." for x in range(w)) for y in reversed(range(h))]
    a, _ = tile_from_document({"grid": grid})
    b, _ = tile_from_document({"cells": [list(c) for c in cells]})
    assert a == b == canonicalize_tile(cells)


def test_grid_and_cells_same_verdict():
    a, _ = tile_from_document({"grid": ["#.", "##"]})
    b, _ = tile_from_document({"cells": [[0, 0], [1, 0], [0, 1]]})
    assert decide(a) == decide(b)


@pytest.mark.parametrize(
    "doc",
    [[], {}, {"grid": ["#"], "cells": [[0, 0]]}, {"cells": []}, {"cells": [[0, 0], [0, 0]]},
     {"cells": [[0, "a"]]}, {"cells": [[0, 0]], "name": 3}, {"cells": [[True, 0]]}],
)
def test_bad_tile_documents(doc):
    with pytest.raises(DocumentError):
        tile_from_document(doc)


tiles = st.sets(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=6).map(
    canonicalize_tile
)
pairs = st.tuples(st.integers(-20, 20), st.integers(-20, 20))
lattices = st.integers(1, 12).flatmap(
    lambda p: st.builds(Lattice, st.just(p), st.integers(0, p - 1), st.integers(1, 12))
)
verdicts = st.one_of(
    st.builds(lambda t, lat, reps: Tiles(PeriodicTiling(t, lat, tuple(reps))),
              tiles, lattices, st.lists(pairs, max_size=4)),
    st.builds(lambda t, n, pol: DoesNotTile(ObstructionCertificate(t, n, pol)),
              tiles, st.integers(0, 9), st.sampled_from(["box-dlx-mrv/1", "other/2"])),
    st.builds(Inconclusive, st.integers(0, 200), st.integers(0, 20)),
)


@settings(max_examples=100, deadline=None)
@given(tiles, verdicts, st.sampled_from(["alternate", "3:1", "periodize:brick"]),
       st.one_of(st.none(), st.text(max_size=8)))
def test_certificate_round_trip(tile, verdict, schedule, name):
    if isinstance(verdict, Tiles):
        verdict = Tiles(PeriodicTiling(tile, verdict.tiling.lattice, verdict.tiling.reps))
    elif isinstance(verdict, DoesNotTile):
        verdict = DoesNotTile(ObstructionCertificate(tile, verdict.obstruction.radius,
                                                     verdict.obstruction.search_policy_version))
    cert = Certificate(tile, verdict, schedule, "0.1.0", name)
    text = dumps(certificate_to_document(cert))
    assert certificate_from_document(loads(text)) == cert
    assert text.endswith("\n")


def test_field_order_and_layout():
    cert = Certificate(TROMINO, decide(TROMINO))
    doc = certificate_to_document(cert)
    assert list(doc) == ["tool_version", "schedule", "tile", "verdict", "lattice", "reps"]
    text = dumps(doc)
    assert json.loads(text) == doc
    assert "[0, 0]" in text


def test_tampered_documents_rejected():
    cert = Certificate(TROMINO, decide(TROMINO))
    doc = certificate_to_document(cert)
    doc["reps"] = [[0, 0], [1, 0]]
    c = certificate_from_document(doc)
    assert not verify(c.tile, c.verdict)
    doc = certificate_to_document(Certificate(GAPPY, decide(GAPPY)))
    doc["radius"] -= 1
    c = certificate_from_document(doc)
    assert not verify(c.tile, c.verdict)
    for broken in ({"verdict": "tiles"}, {"tile": {"cells": [[0, 0]]}, "verdict": "maybe"},
                   {"tile": {"cells": [[0, 0]]}, "verdict": "tiles"},
                   {"tile": {"cells": [[0, 0]]}, "verdict": "tiles",
                    "lattice": {"p": 2, "q": 2, "r": 1}, "reps": []}):
        with pytest.raises(DocumentError):
            certificate_from_document(broken)
    with pytest.raises(DocumentError):
        loads("{not json")


def test_window_table_round_trip():
    table = WindowTable(2, {0: [0], 1: [1], 3: []}, -1, 4)
    doc = window_table_to_document(table)
    back = window_table_from_document(loads(dumps(doc)))
    assert window_table_to_document(back) == doc
    for bad in ({"m": 2, "y_range": [0, 1], "rows": {"5": [0]}},
                {"m": 2, "y_range": [0, 1], "rows": {"0": [2]}},
                {"m": 2, "rows": {}}, {"m": 0, "y_range": [0, 1], "rows": {}}):
        with pytest.raises(DocumentError):
            window_table_from_document(bad)


def _translates_meeting(pt, w, h):
    """Independent count: translates g + F with g in the placed set that hit the patch."""
    placed = pt.as_periodic_set()
    xs = [x for x, _ in pt.tile]
    ys = [y for _, y in pt.tile]
    found = set()
    for gx in range(-max(xs), w):
        for gy in range(-max(ys), h):
            if (gx, gy) in placed and any(0 <= gx + fx < w and 0 <= gy + fy < h for fx, fy in pt.tile):
                found.add((gx, gy))
    return len(found)


@pytest.mark.parametrize("tile, w, h", [(DOMINO, 4, 2), (TROMINO, 6, 6),
                                        (canonicalize_tile([(0, 0)]), 3, 3)])
def test_render_labels_every_cell_once(tile, w, h):
    pt = decide(tile).tiling
    cover = owners(pt, w, h)
    assert len(cover) == w * h
    assert all(len(v) == 1 for v in cover.values())
    picture = render(pt, w, h)
    lines = picture.splitlines()
    assert len(lines) == h and all(len(line) == w for line in lines)
    assert " " not in picture and "?" not in picture
    n_labels = len(set(picture) - {"\n"})
    assert n_labels == _translates_meeting(pt, w, h)
    if tile == DOMINO:
        assert n_labels == 4


def test_render_mono_distinct():
    pt = decide(canonicalize_tile([(0, 0)])).tiling
    text = render(pt, 4, 3).replace("\n", "")
    assert len(set(text)) == 12
