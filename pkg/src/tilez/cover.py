"""Generalized exact cover.

Primary columns must be covered exactly once, secondary columns at most
once. The solver is Knuth's dancing links over flat integer arrays. Column
choice is minimum remaining candidates among primary columns (ties to the
lowest index); rows of a column are tried in ascending row order. Only the
first solution is returned.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInstance


@dataclass(frozen=True)
class CoverInstance:
    n_primary: int
    n_secondary: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, n_primary: int, n_secondary: int, rows: Iterable[Iterable[int]]):
        return cls(n_primary, n_secondary, tuple(tuple(r) for r in rows))

    @property
    def n_columns(self) -> int:
        return self.n_primary + self.n_secondary

    def validate(self) -> None:
        if self.n_primary < 0 or self.n_secondary < 0:
            raise InvalidInstance("column counts must be nonnegative")
        n = self.n_columns
        for i, row in enumerate(self.rows):
            if not row:
                raise InvalidInstance(f"row {i} is empty")
            if len(set(row)) != len(row):
                raise InvalidInstance(f"row {i} repeats a column")
            for c in row:
                if not isinstance(c, int) or not 0 <= c < n:
                    raise InvalidInstance(f"row {i} has column {c!r} out of range")


def check_solution(inst: CoverInstance, rows: Sequence[int]) -> bool:
    """Counting check of a proposed solution, independent of the search."""
    counts = [0] * inst.n_columns
    if len(set(rows)) != len(rows):
        return False
    for i in rows:
        if not 0 <= i < len(inst.rows):
            return False
        for c in inst.rows[i]:
            counts[c] += 1
    return all(k == 1 for k in counts[: inst.n_primary]) and all(
        k <= 1 for k in counts[inst.n_primary :]
    )


class DancingLinks:
    """One solver per instance; holds mutable search state."""

    def __init__(self, inst: CoverInstance):
        inst.validate()
        self.inst = inst
        ncol = inst.n_columns
        root = ncol
        # nodes 0..ncol-1 are column headers, ncol is the root
        self.L = list(range(-1, ncol))
        self.R = list(range(1, ncol + 2))
        self.U = list(range(ncol + 1))
        self.D = list(range(ncol + 1))
        self.C = list(range(ncol + 1))
        self.row_of = [-1] * (ncol + 1)
        self.size = [0] * (ncol + 1)
        self.root = root
        # header ring: root <-> primary columns only
        np_ = inst.n_primary
        if np_:
            self.L[0] = root
            self.R[np_ - 1] = root
            self.L[root] = np_ - 1
            self.R[root] = 0
        else:
            self.L[root] = self.R[root] = root
        for c in range(np_, ncol):
            self.L[c] = self.R[c] = c
        for i, row in enumerate(inst.rows):
            first = -1
            for c in sorted(row):
                node = len(self.C)
                self.C.append(c)
                self.row_of.append(i)
                up = self.U[c]
                self.U.append(up)
                self.D.append(c)
                self.D[up] = node
                self.U[c] = node
                self.size[c] += 1
                if first < 0:
                    self.L.append(node)
                    self.R.append(node)
                    first = node
                else:
                    last = self.L[first]
                    self.L.append(last)
                    self.R.append(first)
                    self.R[last] = node
                    self.L[first] = node

    def _cover(self, c: int) -> None:
        L, R, U, D, C, size = self.L, self.R, self.U, self.D, self.C, self.size
        L[R[c]] = L[c]
        R[L[c]] = R[c]
        i = D[c]
        while i != c:
            j = R[i]
            while j != i:
                U[D[j]] = U[j]
                D[U[j]] = D[j]
                size[C[j]] -= 1
                j = R[j]
            i = D[i]

    def _uncover(self, c: int) -> None:
        L, R, U, D, C, size = self.L, self.R, self.U, self.D, self.C, self.size
        i = U[c]
        while i != c:
            j = L[i]
            while j != i:
                size[C[j]] += 1
                U[D[j]] = j
                D[U[j]] = j
                j = L[j]
            i = U[i]
        L[R[c]] = c
        R[L[c]] = c

    def solve(self) -> list[int] | None:
        partial: list[int] = []
        limit = sys.getrecursionlimit()
        need = self.inst.n_primary + 100
        if need > limit:
            sys.setrecursionlimit(need)
        if self._search(partial):
            return sorted(partial)
        return None

    def _search(self, partial: list[int]) -> bool:
        R, D, C, size, root = self.R, self.D, self.C, self.size, self.root
        c = R[root]
        if c == root:
            return True
        best, best_size = c, size[c]
        c = R[c]
        while c != root and best_size:
            if size[c] < best_size:
                best, best_size = c, size[c]
            c = R[c]
        if best_size == 0:
            return False
        self._cover(best)
        r = D[best]
        while r != best:
            partial.append(self.row_of[r])
            j = R[r]
            while j != r:
                self._cover(C[j])
                j = R[j]
            if self._search(partial):
                return True
            j = self.L[r]
            while j != r:
                self._uncover(C[j])
                j = self.L[j]
            partial.pop()
            r = D[r]
        self._uncover(best)
        return False


def solve_cover(inst: CoverInstance) -> list[int] | None:
    """First solution under the fixed selection policy, or None."""
    return DancingLinks(inst).solve()
