"""Quadrant staircases with wall sentinels, cap queries, and pointer tables.

Each quadrant's blue points are reduced to their dominance frontier: the
points that actually constrain how far a candidate rectangle can push into
that corner. Entries are stored x-ascending in original coordinates with two
synthetic sentinel entries that encode the quadrant's two far walls, so the
cap queries below never need a special case for "no blue point in range"
except at the extreme degenerate slides.

Sign conventions (sx, sy) map each quadrant onto the NE orientation; a point
is kept iff no other point is at least as close to smin in both canonical
axes. Stored ys are strictly monotone per quadrant (desc for NE/SW, asc for
NW/SE) and xs are strictly increasing, which the binary searches rely on.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Callable, Optional

from .bounding import Frame, Wall
from .geometry import Coord, Point

SIGNS = {"ne": (1, 1), "nw": (-1, 1), "sw": (-1, -1), "se": (1, -1)}

# Wall represented by the first / last stored entry, per quadrant.
LEAD_WALL = {"ne": "top", "nw": "left", "sw": "left", "se": "bottom"}
TRAIL_WALL = {"ne": "right", "nw": "top", "sw": "bottom", "se": "right"}


@dataclass(frozen=True)
class Staircase:
    quadrant: str
    xs: tuple[Coord, ...]
    ys: tuple[Coord, ...]
    lead_present: bool
    trail_present: bool
    n_real: int

    def __len__(self) -> int:
        return len(self.xs)

    def entry(self, i: int) -> Point:
        return Point(self.xs[i], self.ys[i])

    def prev(self, i: int) -> Optional[int]:
        return i - 1 if i > 0 else None

    def next(self, i: int) -> Optional[int]:
        return i + 1 if i + 1 < len(self.xs) else None

    def is_sentinel(self, i: int) -> bool:
        if i == 0 and self.lead_present:
            return True
        return i == len(self.xs) - 1 and self.trail_present

    def sentinel_side(self, i: int) -> Optional[str]:
        if i == 0 and self.lead_present:
            return LEAD_WALL[self.quadrant]
        if i == len(self.xs) - 1 and self.trail_present:
            return TRAIL_WALL[self.quadrant]
        return None


def build_staircase(points, quadrant: str, smin, smax) -> Staircase:
    """Reduce one quadrant's points to its sentinel-capped dominance frontier.

    Points on or beyond the quadrant's two far wall lines are dropped: the
    wall sentinel constrains at least as much. The two sentinels are
    (near corner x, far wall y) and (far wall x, near corner y); under zero
    slides they can collapse into a single entry or absorb each other.
    """
    sx, sy = SIGNS[quadrant]
    xwall = smax.xmax if sx > 0 else smax.xmin
    ywall = smax.ymax if sy > 0 else smax.ymin
    x0 = smin.xmax if sx > 0 else smin.xmin
    y0 = smin.ymax if sy > 0 else smin.ymin
    lead = (x0, ywall)
    trail = (xwall, y0)

    cands = [lead, trail]
    n_real = 0
    for p in points:
        if sx * p.x >= sx * xwall or sy * p.y >= sy * ywall:
            continue
        cands.append((p.x, p.y))
    cands.sort(key=lambda q: (sx * q[0], sy * q[1]))

    kept: list[tuple[Coord, Coord]] = []
    best_cy = None
    for q in cands:
        cy = sy * q[1]
        if best_cy is None or cy < best_cy:
            kept.append(q)
            best_cy = cy
    if sx < 0:
        kept.reverse()

    n_real = sum(1 for q in kept if q != lead and q != trail)
    # In stored (x-ascending) order the canonical lead sentinel sits first for
    # sx > 0 but last for sx < 0; the presence flags follow stored positions.
    first_sentinel = lead if sx > 0 else trail
    last_sentinel = trail if sx > 0 else lead
    return Staircase(
        quadrant,
        tuple(q[0] for q in kept),
        tuple(q[1] for q in kept),
        lead_present=kept[0] == first_sentinel,
        trail_present=kept[-1] == last_sentinel,
        n_real=n_real,
    )


@dataclass(frozen=True)
class StaircaseSet:
    frame: Frame
    ne: Staircase
    nw: Staircase
    sw: Staircase
    se: Staircase

    def get(self, quadrant: str) -> Staircase:
        return getattr(self, quadrant)


def build_staircases(frame: Frame) -> StaircaseSet:
    smin, smax = frame.smin, frame.smax
    return StaircaseSet(
        frame,
        ne=build_staircase(frame.ne, "ne", smin, smax),
        nw=build_staircase(frame.nw, "nw", smin, smax),
        sw=build_staircase(frame.sw, "sw", smin, smax),
        se=build_staircase(frame.se, "se", smin, smax),
    )


@dataclass(frozen=True)
class Support:
    """What pins a candidate side: a blue point, or a wall with its witness."""

    kind: str  # "point" | "wall"
    side: Optional[str]
    point: Optional[Point]

    @staticmethod
    def of_point(p: Point) -> "Support":
        return Support("point", None, p)

    @staticmethod
    def of_wall(wall: Wall) -> "Support":
        return Support("wall", wall.side, wall.witness)


def _first_true(lo: int, hi: int, pred: Callable[[int], bool]) -> int:
    """First index in [lo, hi) where pred holds; hi if none. pred must be
    monotone false...true over the range."""
    while lo < hi:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


class StaircaseQueries:
    """The eight directional cap queries, with wall fallbacks.

    Each query answers: given one fixed side of a candidate, how far can the
    adjacent side extend before a point of that quadrant lands strictly
    inside? Returns (coordinate, Support). Sentinel hits and empty ranges
    both report the capping wall.
    """

    def __init__(self, stairs: StaircaseSet):
        self.stairs = stairs
        self.frame = stairs.frame

    def _support(self, st: Staircase, i: int) -> Support:
        side = st.sentinel_side(i)
        if side is not None:
            return Support.of_wall(self.frame.wall(side))
        return Support.of_point(st.entry(i))

    def _wall(self, side: str):
        w = self.frame.wall(side)
        return w.coord, Support.of_wall(w)

    # --- NE: ys strictly descending ---

    def nex(self, Y):
        """Right cap given top Y: min x among NE entries with y < Y."""
        st = self.stairs.ne
        k = _first_true(0, len(st), lambda i: st.ys[i] < Y)
        if k == len(st):
            return self._wall("right")
        return st.xs[k], self._support(st, k)

    def ney(self, X):
        """Top cap given right X: min y among NE entries with x < X."""
        st = self.stairs.ne
        k = bisect_left(st.xs, X) - 1
        if k < 0:
            return self._wall("top")
        return st.ys[k], self._support(st, k)

    # --- NW: ys strictly ascending ---

    def nwx(self, Y):
        """Left cap given top Y: max x among NW entries with y < Y."""
        st = self.stairs.nw
        k = _first_true(0, len(st), lambda i: st.ys[i] >= Y) - 1
        if k < 0:
            return self._wall("left")
        return st.xs[k], self._support(st, k)

    def nwy(self, xL):
        """Top cap given left xL: min y among NW entries with x > xL."""
        st = self.stairs.nw
        k = bisect_right(st.xs, xL)
        if k == len(st):
            return self._wall("top")
        return st.ys[k], self._support(st, k)

    # --- SW: ys strictly descending ---

    def swx(self, yB):
        """Left cap given bottom yB: max x among SW entries with y > yB."""
        st = self.stairs.sw
        k = _first_true(0, len(st), lambda i: st.ys[i] <= yB) - 1
        if k < 0:
            return self._wall("left")
        return st.xs[k], self._support(st, k)

    def swy(self, xL):
        """Bottom cap given left xL: max y among SW entries with x > xL."""
        st = self.stairs.sw
        k = bisect_right(st.xs, xL)
        if k == len(st):
            return self._wall("bottom")
        return st.ys[k], self._support(st, k)

    # --- SE: ys strictly ascending ---

    def sex(self, yB):
        """Right cap given bottom yB: min x among SE entries with y > yB."""
        st = self.stairs.se
        k = _first_true(0, len(st), lambda i: st.ys[i] > yB)
        if k == len(st):
            return self._wall("right")
        return st.xs[k], self._support(st, k)

    def sey(self, X):
        """Bottom cap given right X: max y among SE entries with x < X."""
        st = self.stairs.se
        k = bisect_left(st.xs, X) - 1
        if k < 0:
            return self._wall("bottom")
        return st.ys[k], self._support(st, k)


@dataclass(frozen=True)
class QuadrantPointers:
    below: tuple[Optional[int], ...]
    above: tuple[Optional[int], ...]
    left: tuple[Optional[int], ...]
    right: tuple[Optional[int], ...]


@dataclass(frozen=True)
class PointerTables:
    tables: dict

    def get(self, src: str, dst: str) -> QuadrantPointers:
        return self.tables[(src, dst)]


def _axis_pointers(src_vals, dst_vals):
    """For each src value, index of dst predecessor (< src, max) and successor
    (> src, min). Both lists ascending; one coordinated pass, no per-entry
    search. Ties between equal dst values cannot occur (staircase coords are
    strictly monotone), so the smallest-index rule is automatic."""
    pred = [None] * len(src_vals)
    succ = [None] * len(src_vals)
    j = 0
    for i, v in enumerate(src_vals):
        while j < len(dst_vals) and dst_vals[j] < v:
            j += 1
        if j > 0:
            pred[i] = j - 1
    j = len(dst_vals) - 1
    for i in range(len(src_vals) - 1, -1, -1):
        v = src_vals[i]
        while j >= 0 and dst_vals[j] > v:
            j -= 1
        if j + 1 < len(dst_vals):
            succ[i] = j + 1
    return pred, succ


def _order_by(vals):
    """Indexes sorted ascending by value, given strictly monotone vals."""
    if len(vals) >= 2 and vals[0] > vals[-1]:
        return list(range(len(vals) - 1, -1, -1))
    return list(range(len(vals)))


def precompute_pointers(stairs: StaircaseSet) -> PointerTables:
    """Nearest-neighbor indexes between every ordered pair of staircases.

    below/above use y order, left/right use x order. Built with merge scans
    over the already-monotone stored arrays.
    """
    quads = ("ne", "nw", "sw", "se")
    tables = {}
    for src_q in quads:
        src = stairs.get(src_q)
        for dst_q in quads:
            dst = stairs.get(dst_q)

            sxo = _order_by(src.xs)
            dxo = _order_by(dst.xs)  # xs always ascending; keep symmetric form
            pred_x, succ_x = _axis_pointers([src.xs[i] for i in sxo],
                                            [dst.xs[j] for j in dxo])
            left = [None] * len(src)
            right = [None] * len(src)
            for pos, i in enumerate(sxo):
                left[i] = dxo[pred_x[pos]] if pred_x[pos] is not None else None
                right[i] = dxo[succ_x[pos]] if succ_x[pos] is not None else None

            syo = _order_by(src.ys)
            dyo = _order_by(dst.ys)
            pred_y, succ_y = _axis_pointers([src.ys[i] for i in syo],
                                            [dst.ys[j] for j in dyo])
            below = [None] * len(src)
            above = [None] * len(src)
            for pos, i in enumerate(syo):
                below[i] = dyo[pred_y[pos]] if pred_y[pos] is not None else None
                above[i] = dyo[succ_y[pos]] if succ_y[pos] is not None else None

            tables[(src_q, dst_q)] = QuadrantPointers(
                tuple(below), tuple(above), tuple(left), tuple(right))
    return PointerTables(tables)
