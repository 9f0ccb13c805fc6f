"""Implicit area matrices over staircase pair lists, with window padding and
fast row maxima.

Rows are adjacent-entry pairs of one staircase (top coordinate Y_i strictly
decreasing, right coordinate X_i strictly increasing); columns are pairs of
the opposite staircase (left coordinate strictly increasing, bottom strictly
decreasing). The defined entry (i, j) is the area of the rectangle those two
notches pin down. Each row carries a feasibility window [j1, j2] of columns,
both endpoints non-increasing from row to row. Outside the window the matrix
is padded: zeros on the left, j2 - j on the right, so padded row maxima of
rows with an empty window are never positive and never land in a window.

The defined portion satisfies a strict superadditivity (for i < k, j < l:
M(i,j) + M(k,l) > M(i,l) + M(k,j)), which makes rightmost row argmaxes
non-decreasing down the rows of any fully defined submatrix. row_maxima
exploits this by running SMAWK on maximal row runs that share a window; the
padding itself does not preserve that order (see verify_total_inverse
_monotone and the package notes), so the runs are where SMAWK is sound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import groupby
from typing import Callable, Optional


def smawk(rows: list, cols: list, value: Callable) -> dict:
    """Rightmost argmax per row of an implicit totally monotone matrix.

    Requires: for row indexes r < r' the rightmost argmax of r' is >= the
    rightmost argmax of r (ties broken rightward). Returns {row: col}.
    """
    out: dict = {}
    _smawk(list(rows), list(cols), value, out)
    return out


def _smawk(rows, cols, value, out):
    if not rows:
        return
    # Reduce: drop columns that cannot host any row's rightmost argmax.
    stack: list = []
    for c in cols:
        while stack:
            r = rows[len(stack) - 1]
            if value(r, stack[-1]) <= value(r, c):
                stack.pop()
            else:
                break
        if len(stack) < len(rows):
            stack.append(c)
    _smawk(rows[1::2], stack, value, out)
    # Interpolate even rows between their odd neighbors' answers.
    ci = 0
    for idx in range(0, len(rows), 2):
        r = rows[idx]
        last = out[rows[idx + 1]] if idx + 1 < len(rows) else stack[-1]
        best = None
        best_c = None
        while True:
            c = stack[ci]
            v = value(r, c)
            if best is None or v >= best:
                best, best_c = v, c
            if c == last:
                break
            ci += 1
        out[r] = best_c


@dataclass
class StaircaseMatrix:
    """Window-clipped implicit matrix for one diagonal of the pair search."""

    row_tops: tuple      # Y_i, strictly decreasing
    row_rights: tuple    # X_i, strictly increasing
    col_lefts: tuple     # xL_j, strictly increasing
    col_bottoms: tuple   # yB_j, strictly decreasing
    j1: tuple            # per-row first admissible column, non-increasing
    j2: tuple            # per-row last admissible column, non-increasing
    eval_count: int = field(default=0, compare=False)

    @property
    def rows(self) -> int:
        return len(self.row_tops)

    @property
    def cols(self) -> int:
        return len(self.col_lefts)

    def area(self, i: int, j: int):
        return ((self.row_rights[i] - self.col_lefts[j])
                * (self.row_tops[i] - self.col_bottoms[j]))

    def padded_entry(self, i: int, j: int):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols} matrix")
        self.eval_count += 1
        if j < self.j1[i]:
            return 0
        if j > self.j2[i]:
            return self.j2[i] - j
        return self.area(i, j)

    def row_maxima(self) -> list:
        """(max padded value, rightmost argmax column) for every row.

        Rows with an empty window are answered in closed form. The remaining
        rows are grouped into maximal runs sharing one window; each run is a
        fully defined block where rightmost argmaxes are monotone, so SMAWK
        applies. Within a window all entries are areas >= 0, and a window
        maximum of 0 means every window entry is 0, in which case the
        rightmost padded argmax is the window's last column.
        """
        result: list[Optional[tuple]] = [None] * self.rows
        cache: dict = {}

        def val(i, j):
            key = (i, j)
            if key not in cache:
                cache[key] = self.padded_entry(i, j)
            return cache[key]

        live = []
        for i in range(self.rows):
            if self.j1[i] > self.j2[i]:
                if self.j1[i] >= 1:
                    result[i] = (0, self.j1[i] - 1)
                else:
                    result[i] = (self.j2[i], 0)
            else:
                live.append(i)

        for window, grp in groupby(live, key=lambda i: (self.j1[i], self.j2[i])):
            block_rows = list(grp)
            block_cols = list(range(window[0], window[1] + 1))
            arg = smawk(block_rows, block_cols, val)
            for i in block_rows:
                c = arg[i]
                v = val(i, c)
                if v == 0:
                    c = window[1]
                result[i] = (v, c)
        return result


def verify_total_inverse_monotone(value: Callable, rows: int, cols: int) -> bool:
    """Brute-force check of the order property row_maxima would need to hold
    globally: for all i < k and j < l, value(k,j) <= value(k,l) implies
    value(i,j) <= value(i,l). value is typically a padded_entry."""
    vals = [[value(i, j) for j in range(cols)] for i in range(rows)]
    for k in range(1, rows):
        for i in range(k):
            for j in range(cols - 1):
                vij = vals[i][j]
                row_k = vals[k]
                row_i = vals[i]
                for l in range(j + 1, cols):
                    if row_k[j] <= row_k[l] and vij > row_i[l]:
                        return False
    return True
