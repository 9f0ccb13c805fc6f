"""Brute-force reference implementations, used only by tests.

Deliberately independent of the solver: the red box, the walls, and the
search are re-derived here from the problem statement by exhaustive
enumeration over the coordinate grid. Any maximal rectangle has each side
on a wall or on a blue point's coordinate, so the grid (clipped per side to
the slide interval) is guaranteed to contain every optimum.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import AxisRect, Instance

SIDES = ("left", "right", "bottom", "top")


def count_open_interior(rect: AxisRect, blues) -> int:
    """Blue points strictly inside rect, multiset copies counted."""
    return sum(1 for b in blues
               if rect.xmin < b.x < rect.xmax and rect.ymin < b.y < rect.ymax)


@dataclass(frozen=True)
class OracleResult:
    status: str
    forced_blue: int
    rect: Optional[AxisRect] = None
    area: Optional[object] = None
    unbounded_directions: tuple = ()


def _red_box(reds):
    xs = [r.x for r in reds]
    ys = [r.y for r in reds]
    return AxisRect(min(xs), max(xs), min(ys), max(ys))


def _walls(box: AxisRect, blues):
    """Wall coordinate per side from the closed slide strips; None = open."""
    walls = {}
    top = [b.y for b in blues if b.y >= box.ymax and box.xmin <= b.x <= box.xmax]
    walls["top"] = min(top) if top else None
    bot = [b.y for b in blues if b.y <= box.ymin and box.xmin <= b.x <= box.xmax]
    walls["bottom"] = max(bot) if bot else None
    rgt = [b.x for b in blues if b.x >= box.xmax and box.ymin <= b.y <= box.ymax]
    walls["right"] = min(rgt) if rgt else None
    lft = [b.x for b in blues if b.x <= box.xmin and box.ymin <= b.y <= box.ymax]
    walls["left"] = max(lft) if lft else None
    return walls


def _grids(box, walls, blues):
    xls = {walls["left"]} | {b.x for b in blues if walls["left"] <= b.x <= box.xmin}
    xrs = {walls["right"]} | {b.x for b in blues if box.xmax <= b.x <= walls["right"]}
    ybs = {walls["bottom"]} | {b.y for b in blues if walls["bottom"] <= b.y <= box.ymin}
    yts = {walls["top"]} | {b.y for b in blues if box.ymax <= b.y <= walls["top"]}
    return sorted(xls), sorted(xrs), sorted(ybs), sorted(yts)


def _optimum_table(instance: Instance):
    """(status, forced, grids, counts, areas) with counts/areas as nested
    lookups; None tables when unbounded."""
    box = _red_box(instance.reds)
    walls = _walls(box, instance.blues)
    forced = count_open_interior(box, instance.blues)
    missing = tuple(s for s in SIDES if walls[s] is None)
    if missing:
        return "unbounded", forced, missing, None, None, None
    grids = _grids(box, walls, instance.blues)
    return ("bounded", forced, (), grids) + _count_and_area(grids, instance.blues)


def _count_and_area(grids, blues):
    xls, xrs, ybs, yts = grids
    exact = all(isinstance(v, int) for v in xls + xrs + ybs + yts) and \
        all(isinstance(b.x, int) and isinstance(b.y, int) for b in blues)
    if exact and blues:
        axl = np.array(xls, dtype=np.int64)
        axr = np.array(xrs, dtype=np.int64)
        ayb = np.array(ybs, dtype=np.int64)
        ayt = np.array(yts, dtype=np.int64)
        bx = np.array([b.x for b in blues], dtype=np.int64)
        by = np.array([b.y for b in blues], dtype=np.int64)
        inx = (axl[None, :, None] < bx[:, None, None]) & \
            (bx[:, None, None] < axr[None, None, :])
        iny = (ayb[None, :, None] < by[:, None, None]) & \
            (by[:, None, None] < ayt[None, None, :])
        counts = np.einsum("bij,bkl->ijkl", inx.astype(np.int32),
                           iny.astype(np.int32))
        areas = (axr[None, :] - axl[:, None])[:, :, None, None] * \
            (ayt[None, :] - ayb[:, None])[None, None, :, :]
        return counts, areas
    counts = [[[[sum(1 for b in blues if xl < b.x < xr and yb < b.y < yt)
                 for yt in yts] for yb in ybs] for xr in xrs] for xl in xls]
    areas = [[[[(xr - xl) * (yt - yb) for yt in yts] for yb in ybs]
              for xr in xrs] for xl in xls]
    return counts, areas


def _iter_table(grids, counts, areas):
    xls, xrs, ybs, yts = grids
    for i in range(len(xls)):
        for j in range(len(xrs)):
            for k in range(len(ybs)):
                for l in range(len(yts)):
                    yield (i, j, k, l), counts[i][j][k][l], areas[i][j][k][l]


def oracle_best(instance: Instance) -> OracleResult:
    status, forced, missing, grids, counts, areas = _optimum_table(instance)
    if status == "unbounded":
        return OracleResult("unbounded", forced, unbounded_directions=missing)
    if isinstance(counts, np.ndarray):
        sel = counts == counts.min()
        best = areas[sel].max()
        i, j, k, l = np.argwhere(sel & (areas == best))[0]
        xls, xrs, ybs, yts = grids
        rect = AxisRect(xls[i], xrs[j], ybs[k], yts[l])
        return OracleResult("bounded", forced, rect, int(best))
    best_count = min(c for _, c, _ in _iter_table(grids, counts, areas))
    best_rect, best_area = None, None
    for (i, j, k, l), c, a in _iter_table(grids, counts, areas):
        if c == best_count and (best_area is None or a > best_area):
            xls, xrs, ybs, yts = grids
            best_rect = AxisRect(xls[i], xrs[j], ybs[k], yts[l])
            best_area = a
    return OracleResult("bounded", forced, best_rect, best_area)


def is_feasible(rect: AxisRect, instance: Instance) -> bool:
    return all(rect.xmin <= r.x <= rect.xmax and rect.ymin <= r.y <= rect.ymax
               for r in instance.reds)


def is_maximal(rect: AxisRect, instance: Instance) -> bool:
    """No side can move outward by any positive amount without adding a blue
    interior point or leaving the wall bounds."""
    box = _red_box(instance.reds)
    walls = _walls(box, instance.blues)
    blues = instance.blues

    def blocked_h(y, lo, hi, wall):
        return y == wall or any(b.y == y and lo < b.x < hi for b in blues)

    def blocked_v(x, lo, hi, wall):
        return x == wall or any(b.x == x and lo < b.y < hi for b in blues)

    return (blocked_h(rect.ymax, rect.xmin, rect.xmax, walls["top"])
            and blocked_h(rect.ymin, rect.xmin, rect.xmax, walls["bottom"])
            and blocked_v(rect.xmin, rect.ymin, rect.ymax, walls["left"])
            and blocked_v(rect.xmax, rect.ymin, rect.ymax, walls["right"]))


def check_candidate(rect: AxisRect, instance: Instance) -> dict:
    return {
        "feasible": is_feasible(rect, instance),
        "open_blue": count_open_interior(rect, instance.blues),
        "maximal": is_maximal(rect, instance),
    }


def oracle_all(instance: Instance) -> tuple:
    """All maximal rectangles achieving oracle_best's objective, canonically
    sorted by (xmin, ymin, xmax, ymax). Raises on unbounded instances."""
    status, forced, missing, grids, counts, areas = _optimum_table(instance)
    if status == "unbounded":
        raise ValueError("unbounded toward: " + ", ".join(missing))
    xls, xrs, ybs, yts = grids
    if isinstance(counts, np.ndarray):
        sel = counts == counts.min()
        best = areas[sel].max()
        idx = np.argwhere(sel & (areas == best))
        rects = [AxisRect(xls[i], xrs[j], ybs[k], yts[l]) for i, j, k, l in idx]
    else:
        best_count = min(c for _, c, _ in _iter_table(grids, counts, areas))
        best = max(a for _, c, a in _iter_table(grids, counts, areas)
                   if c == best_count)
        rects = [AxisRect(xls[i], xrs[j], ybs[k], yts[l])
                 for (i, j, k, l), c, a in _iter_table(grids, counts, areas)
                 if c == best_count and a == best]
    out = sorted({r for r in rects if is_maximal(r, instance)},
                 key=lambda r: (r.xmin, r.ymin, r.xmax, r.ymax))
    return tuple(out)
