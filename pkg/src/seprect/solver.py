"""Exact solvers: largest rectangle around the red core, fewest blue points.

Every candidate rectangle contains smin and lies inside smax, so it always
holds exactly the forced blue points in its open interior; the optimization
is purely over area. A maximal candidate has each side pinned: either at a
wall, or by a blue point on the side's line strictly within the side's span.
The enumeration families below cover all support patterns:

  * notch combos: two supports are adjacent entries of one staircase, the
    remaining two sides resolved by cap queries in the three dependency
    orders that can pin them;
  * chains: the top support alone seeds a cycle of cap queries around the
    four quadrants (two rotation orders);
  * pair products: top+right from one staircase's adjacent pairs and
    bottom+left from the opposite staircase's, searched via the windowed
    matrix engine, on both diagonals.

Duplicates across families are harmless: the best candidate is chosen by a
single ordered scan (ties keep the later candidate; case 1 candidates come
first, then case 2, then case 3 per diagonal).

solve_all ignores the case machinery entirely and enumerates every maximal
rectangle by anchored plane sweeps plus an exact feasibility/maximality
filter; it exists both as a user feature and as an independent check of
solve_one.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple, Optional

from .bounding import Frame, Wall, build_frame
from .geometry import (AxisRect, Coord, Instance, Point, rect_area,
                       rect_contains_rect, strictly_inside)
from .matrix import StaircaseMatrix
from .staircase import (PointerTables, Staircase, StaircaseQueries,
                        StaircaseSet, Support, build_staircases,
                        precompute_pointers)


class Supports(NamedTuple):
    top: Support
    right: Support
    bottom: Support
    left: Support


@dataclass(frozen=True)
class Candidate:
    rect: AxisRect
    supports: Supports
    case: int
    diagonal: Optional[str] = None


@dataclass(frozen=True)
class Solution:
    status: str  # "bounded" | "unbounded"
    forced_blue: int
    frame: Frame
    best: Optional[Candidate] = None
    area: Optional[Coord] = None
    unbounded_directions: tuple = ()
    statistics: Optional[dict] = None
    all_best: Optional[tuple] = None
    instance: Optional[Instance] = None


class UnboundedError(ValueError):
    def __init__(self, directions):
        super().__init__("rectangle area unbounded toward: " + ", ".join(directions))
        self.directions = tuple(directions)


def _candidate(xL, X, yB, Y, top, right, bottom, left, case=None, diagonal=None):
    if case is None:
        four_points = all(s.kind == "point" for s in (top, right, bottom, left))
        case = 2 if four_points else 1
    return Candidate(AxisRect(xL, X, yB, Y), Supports(top, right, bottom, left),
                     case, diagonal)


def _pairs(stairs: StaircaseSet, q: StaircaseQueries, quadrant: str):
    """Adjacent entry pairs of one staircase with wall-resolved supports."""
    st = stairs.get(quadrant)
    out = []
    for j in range(len(st) - 1):
        out.append((st.entry(j), st.entry(j + 1),
                    q._support(st, j), q._support(st, j + 1)))
    return out


def enumerate_cases_1_2(stairs: StaircaseSet,
                        pointers: Optional[PointerTables] = None) -> list:
    """All notch-combo and chain candidates, in emission order.

    Every emitted candidate is feasible and maximal; the family checks below
    are exactly the clearance conditions of the quadrant not consulted while
    resolving the remaining sides. pointers is accepted for interface
    compatibility; resolution goes through cap queries, whose or-equal tie
    handling the neighbor tables cannot express.
    """
    q = StaircaseQueries(stairs)
    out = []

    for e0, e1, s0, s1 in _pairs(stairs, q, "ne"):
        Y, X = e0.y, e1.x
        yB, sb = q.sey(X)
        xL, sl = q.nwx(Y)
        if q.swy(xL)[0] <= yB:
            out.append(_candidate(xL, X, yB, Y, s0, s1, sb, sl))
        xL2, sl2 = q.nwx(Y)
        yB2, sb2 = q.swy(xL2)
        if yB2 >= q.sey(X)[0]:
            out.append(_candidate(xL2, X, yB2, Y, s0, s1, sb2, sl2))
        yB3, sb3 = q.sey(X)
        xL3, sl3 = q.swx(yB3)
        if xL3 >= q.nwx(Y)[0]:
            out.append(_candidate(xL3, X, yB3, Y, s0, s1, sb3, sl3))

    for e0, e1, s0, s1 in _pairs(stairs, q, "nw"):
        xL, Y = e0.x, e1.y
        X1, sr1 = q.nex(Y)
        yB1, sb1 = q.sey(X1)
        if q.swy(xL)[0] <= yB1:
            out.append(_candidate(xL, X1, yB1, Y, s1, sr1, sb1, s0))
        X2, sr2 = q.nex(Y)
        yB2, sb2 = q.swy(xL)
        if yB2 >= q.sey(X2)[0]:
            out.append(_candidate(xL, X2, yB2, Y, s1, sr2, sb2, s0))
        yB3, sb3 = q.swy(xL)
        X3, sr3 = q.sex(yB3)
        if X3 <= q.nex(Y)[0]:
            out.append(_candidate(xL, X3, yB3, Y, s1, sr3, sb3, s0))

    for e0, e1, s0, s1 in _pairs(stairs, q, "sw"):
        xL, yB = e0.x, e1.y
        Y1, st1 = q.nwy(xL)
        X1, sr1 = q.nex(Y1)
        if q.sey(X1)[0] <= yB:
            out.append(_candidate(xL, X1, yB, Y1, st1, sr1, s1, s0))
        X2, sr2 = q.sex(yB)
        Y2, st2 = q.ney(X2)
        if q.nwx(Y2)[0] <= xL:
            out.append(_candidate(xL, X2, yB, Y2, st2, sr2, s1, s0))
        Y3, st3 = q.nwy(xL)
        X3, sr3 = q.sex(yB)
        if X3 <= q.nex(Y3)[0]:
            out.append(_candidate(xL, X3, yB, Y3, st3, sr3, s1, s0))

    for e0, e1, s0, s1 in _pairs(stairs, q, "se"):
        yB, X = e0.y, e1.x
        Y1, st1 = q.ney(X)
        xL1, sl1 = q.nwx(Y1)
        if q.swy(xL1)[0] <= yB:
            out.append(_candidate(xL1, X, yB, Y1, st1, s1, s0, sl1))
        Y2, st2 = q.ney(X)
        xL2, sl2 = q.swx(yB)
        if xL2 >= q.nwx(Y2)[0]:
            out.append(_candidate(xL2, X, yB, Y2, st2, s1, s0, sl2))
        xL3, sl3 = q.swx(yB)
        Y3, st3 = q.nwy(xL3)
        if Y3 <= q.ney(X)[0]:
            out.append(_candidate(xL3, X, yB, Y3, st3, s1, s0, sl3))

    # Chains: a top support seeds a cycle of cap queries around the four
    # quadrants, one rotation per chain. Seeds are the real entries of the
    # staircase owning the top support, plus the top wall itself; the
    # unconditional wall seed also covers staircases whose cap entries were
    # absorbed by zero slides.
    top_wall = Support.of_wall(stairs.frame.top)
    top_y = stairs.frame.top.coord

    seeds = [(top_y, None, top_wall)]
    ne = stairs.ne
    for k in range(len(ne)):
        if not ne.is_sentinel(k):
            t = ne.entry(k)
            seeds.append((t.y, t.x, Support.of_point(t)))
    for Y, tx, s_top in seeds:
        xL, sl = q.nwx(Y)
        yB, sb = q.swy(xL)
        X, sr = q.sex(yB)
        if tx is not None and not (xL < tx < X):
            continue  # the seed no longer pins the top side
        if X <= q.nex(Y)[0]:
            out.append(_candidate(xL, X, yB, Y, s_top, sr, sb, sl))

    seeds = [(top_y, None, top_wall)]
    nw = stairs.nw
    for k in range(len(nw)):
        if not nw.is_sentinel(k):
            t = nw.entry(k)
            seeds.append((t.y, t.x, Support.of_point(t)))
    for Y, tx, s_top in seeds:
        X, sr = q.nex(Y)
        yB, sb = q.sey(X)
        xL, sl = q.swx(yB)
        if tx is not None and not (xL < tx < X):
            continue
        if xL >= q.nwx(Y)[0]:
            out.append(_candidate(xL, X, yB, Y, s_top, sr, sb, sl))

    return out


def build_case3_windows(stairs: StaircaseSet, pointers: Optional[PointerTables],
                        diagonal: str):
    """Per-row admissible column windows (F, L) for one diagonal's pair matrix.

    Rows are adjacent pairs of the NE staircase (or its mirror for the other
    diagonal), columns adjacent pairs of the SW one. Column j is admissible
    for row i iff the product rectangle clears the two remaining quadrants,
    which reduces to its left edge lying at or right of the NW cap and its
    bottom edge at or above the SE cap. Both endpoints are non-increasing row
    to row. pointers is accepted for interface compatibility; the bounds are
    found by bisection on the monotone pair lists, which keeps ties exact.
    """
    if diagonal == "nw-se":
        stairs = _mirror_staircase_set(stairs)
    q = StaircaseQueries(stairs)
    ne, sw = stairs.ne, stairs.sw
    n_rows = max(len(ne) - 1, 0)
    n_cols = max(len(sw) - 1, 0)
    F, L = [], []
    col_lefts = sw.xs[:-1] if n_cols else ()
    col_bottoms = sw.ys[1:] if n_cols else ()
    for i in range(n_rows):
        Y, X = ne.ys[i], ne.xs[i + 1]
        nwb = q.nwx(Y)[0]
        seb = q.sey(X)[0]
        lo, hi = 0, n_cols
        while lo < hi:  # first col with left edge >= NW cap
            mid = (lo + hi) // 2
            if col_lefts[mid] >= nwb:
                hi = mid
            else:
                lo = mid + 1
        f = lo
        lo, hi = 0, n_cols
        while lo < hi:  # first col with bottom edge < SE cap
            mid = (lo + hi) // 2
            if col_bottoms[mid] < seb:
                hi = mid
            else:
                lo = mid + 1
        F.append(f)
        L.append(lo - 1)
    return F, L


def _mirror_point(p: Point) -> Point:
    return Point(-p.x, p.y)


def _mirror_wall(w: Wall, side: str) -> Wall:
    coord = w.coord
    if coord is not None and side in ("left", "right"):
        coord = -coord
    return Wall(side, coord, None if w.witness is None else _mirror_point(w.witness))


def _mirror_frame(f: Frame) -> Frame:
    smin = AxisRect(-f.smin.xmax, -f.smin.xmin, f.smin.ymin, f.smin.ymax)
    return Frame(
        smin,
        top=_mirror_wall(f.top, "top"),
        bottom=_mirror_wall(f.bottom, "bottom"),
        left=_mirror_wall(f.right, "left"),
        right=_mirror_wall(f.left, "right"),
        forced_blue=f.forced_blue,
        ne=tuple(sorted(_mirror_point(p) for p in f.nw)),
        nw=tuple(sorted(_mirror_point(p) for p in f.ne)),
        sw=tuple(sorted(_mirror_point(p) for p in f.se)),
        se=tuple(sorted(_mirror_point(p) for p in f.sw)),
        wall_points=tuple(sorted(_mirror_point(p) for p in f.wall_points)),
        outside=f.outside,
    )


_MIRROR_QUAD = {"ne": "nw", "nw": "ne", "sw": "se", "se": "sw"}


def _mirror_staircase(st: Staircase) -> Staircase:
    return Staircase(
        _MIRROR_QUAD[st.quadrant],
        tuple(-x for x in reversed(st.xs)),
        tuple(reversed(st.ys)),
        lead_present=st.trail_present,
        trail_present=st.lead_present,
        n_real=st.n_real,
    )


def _mirror_staircase_set(stairs: StaircaseSet) -> StaircaseSet:
    return StaircaseSet(
        _mirror_frame(stairs.frame),
        ne=_mirror_staircase(stairs.nw),
        nw=_mirror_staircase(stairs.ne),
        sw=_mirror_staircase(stairs.se),
        se=_mirror_staircase(stairs.sw),
    )


_MIRROR_SIDE = {"left": "right", "right": "left", "top": "top", "bottom": "bottom"}


def _mirror_support(s: Support) -> Support:
    return Support(s.kind,
                   None if s.side is None else _MIRROR_SIDE[s.side],
                   None if s.point is None else _mirror_point(s.point))


def _mirror_candidate(c: Candidate, diagonal: str) -> Candidate:
    r = c.rect
    return Candidate(
        AxisRect(-r.xmax, -r.xmin, r.ymin, r.ymax),
        Supports(top=_mirror_support(c.supports.top),
                 right=_mirror_support(c.supports.left),
                 bottom=_mirror_support(c.supports.bottom),
                 left=_mirror_support(c.supports.right)),
        c.case,
        diagonal,
    )


def _case3_diagonal(stairs: StaircaseSet, pointers: Optional[PointerTables]):
    """Pair-product candidates for the ne/sw diagonal of the given set."""
    q = StaircaseQueries(stairs)
    ne, sw = stairs.ne, stairs.sw
    n_rows, n_cols = len(ne) - 1, len(sw) - 1
    if n_rows < 1 or n_cols < 1:
        return [], None
    F, L = build_case3_windows(stairs, pointers, "ne-sw")
    m = StaircaseMatrix(
        row_tops=ne.ys[:-1],
        row_rights=ne.xs[1:],
        col_lefts=sw.xs[:-1],
        col_bottoms=sw.ys[1:],
        j1=tuple(F),
        j2=tuple(L),
    )
    out = []
    maxima = m.row_maxima()
    for i in range(n_rows):
        if F[i] > L[i]:
            continue
        _, j = maxima[i]
        out.append(_candidate(
            sw.xs[j], ne.xs[i + 1], sw.ys[j + 1], ne.ys[i],
            top=q._support(ne, i), right=q._support(ne, i + 1),
            bottom=q._support(sw, j + 1), left=q._support(sw, j),
            case=3, diagonal="ne-sw"))
    return out, m


def _enumerate_candidates(stairs: StaircaseSet):
    """Full ordered candidate list plus bookkeeping for statistics."""
    pointers = precompute_pointers(stairs)
    mixed = enumerate_cases_1_2(stairs, pointers)
    case1 = [c for c in mixed if c.case == 1]
    case2 = [c for c in mixed if c.case == 2]
    c3a, ma = _case3_diagonal(stairs, pointers)
    mirrored = _mirror_staircase_set(stairs)
    c3b_m, mb = _case3_diagonal(mirrored, precompute_pointers(mirrored))
    c3b = [_mirror_candidate(c, "nw-se") for c in c3b_m]
    ordered = case1 + case2 + c3a + c3b
    stats = {
        "case1_candidates": len(case1),
        "case2_candidates": len(case2),
        "case3_candidates": len(c3a) + len(c3b),
        "staircase_sizes": {qd: len(stairs.get(qd)) for qd in ("ne", "nw", "sw", "se")},
        "matrix_evals": {
            "ne-sw": ma.eval_count if ma else 0,
            "nw-se": mb.eval_count if mb else 0,
        },
    }
    return ordered, stats


def solve_from_frame(frame: Frame) -> Solution:
    """Case machinery on a prebuilt frame; shared by the exact and array paths."""
    if not frame.bounded:
        return Solution("unbounded", frame.forced_blue, frame,
                        unbounded_directions=frame.unbounded_directions())
    stairs = build_staircases(frame)
    candidates, stats = _enumerate_candidates(stairs)
    best = None
    best_area = None
    for c in candidates:
        a = rect_area(c.rect)
        if best is None or a >= best_area:
            best, best_area = c, a
    stats["candidates"] = len(candidates)
    return Solution("bounded", frame.forced_blue, frame, best=best,
                    area=best_area, statistics=stats)


def solve_one(instance: Instance, presorted: bool = False,
              require_bounded: bool = False) -> Solution:
    """Best rectangle: fewest blue points in the open interior, then largest
    area. Ties between equal-area candidates keep the last one in case order.
    """
    if not presorted:
        instance = Instance(instance.reds, tuple(sorted(instance.blues)))
    frame = build_frame(instance)
    sol = solve_from_frame(frame)
    if sol.status == "unbounded" and require_bounded:
        raise UnboundedError(sol.unbounded_directions)
    return replace(sol, instance=instance)


# --- independent enumeration of every maximal rectangle ---


def _sweep_rects(smin: AxisRect, smax: AxisRect, annulus: list) -> set:
    """Left-anchored sweeps: all maximal rects whose left side is pinned at a
    wall or at one annulus point's x. See module docstring of solve_all."""
    rects = set()
    by_x = sorted(annulus, key=lambda p: (p.x, p.y))
    anchors: list = [None]
    for p in annulus:
        if smax.ymin < p.y < smax.ymax:
            anchors.append(p)
    for anchor in anchors:
        xL = smax.xmin if anchor is None else anchor.x
        lo, hi = smax.ymin, smax.ymax
        stopped = False
        i = 0
        while i < len(by_x) and not stopped:
            gx = by_x[i].x
            group = []
            while i < len(by_x) and by_x[i].x == gx:
                group.append(by_x[i])
                i += 1
            if gx <= xL:
                continue
            inside = [p for p in group if lo < p.y < hi]
            if not inside:
                continue
            rects.add((xL, gx, lo, hi))
            for p in inside:
                if p.y >= smin.ymax and (anchor is None or p.y > anchor.y):
                    hi = min(hi, p.y)
                elif p.y <= smin.ymin and (anchor is None or p.y < anchor.y):
                    lo = max(lo, p.y)
                else:
                    stopped = True
        if not stopped:
            rects.add((xL, smax.xmax, lo, hi))
    return rects


def _all_maximal_rects(frame: Frame, blues) -> list:
    smin, smax = frame.smin, frame.smax
    annulus = list(frame.ne + frame.nw + frame.sw + frame.se + frame.wall_points)

    raw = set(_sweep_rects(smin, smax, annulus))
    msmin = AxisRect(-smin.xmax, -smin.xmin, smin.ymin, smin.ymax)
    msmax = AxisRect(-smax.xmax, -smax.xmin, smax.ymin, smax.ymax)
    for xL, X, yB, Y in _sweep_rects(msmin, msmax, [_mirror_point(p) for p in annulus]):
        raw.add((-X, -xL, yB, Y))

    ys = sorted({p.y for p in annulus} | {smax.ymin, smax.ymax})
    for a, b in zip(ys, ys[1:]):
        if a <= smin.ymin and b >= smin.ymax:
            raw.add((smax.xmin, smax.xmax, a, b))
    xs = sorted({p.x for p in annulus} | {smax.xmin, smax.xmax})
    for a, b in zip(xs, xs[1:]):
        if a <= smin.xmin and b >= smin.xmax:
            raw.add((a, b, smax.ymin, smax.ymax))
    raw.add((smax.xmin, smax.xmax, smax.ymin, smax.ymax))

    out = []
    for xL, X, yB, Y in raw:
        if xL > X or yB > Y:
            continue
        r = AxisRect(xL, X, yB, Y)
        if not (rect_contains_rect(r, smin) and rect_contains_rect(smax, r)):
            continue
        if any(strictly_inside(r, b) and not strictly_inside(smin, b) for b in blues):
            continue
        if not _is_maximal(r, smax, blues):
            continue
        out.append(r)
    out.sort(key=lambda r: (r.xmin, r.ymin, r.xmax, r.ymax))
    return out


def _is_maximal(r: AxisRect, smax: AxisRect, blues) -> bool:
    top = r.ymax == smax.ymax or any(
        b.y == r.ymax and r.xmin < b.x < r.xmax for b in blues)
    if not top:
        return False
    bottom = r.ymin == smax.ymin or any(
        b.y == r.ymin and r.xmin < b.x < r.xmax for b in blues)
    if not bottom:
        return False
    left = r.xmin == smax.xmin or any(
        b.x == r.xmin and r.ymin < b.y < r.ymax for b in blues)
    if not left:
        return False
    return r.xmax == smax.xmax or any(
        b.x == r.xmax and r.ymin < b.y < r.ymax for b in blues)


def solve_all(instance: Instance, all_maximal: bool = False) -> tuple:
    """Every optimal rectangle (or, with all_maximal, every maximal one),
    canonically sorted. Enumerated independently of the case machinery.
    Raises UnboundedError when the area is unbounded."""
    frame = build_frame(instance)
    if not frame.bounded:
        raise UnboundedError(frame.unbounded_directions())
    rects = _all_maximal_rects(frame, instance.blues)
    if all_maximal:
        return tuple(rects)
    best_area = max(rect_area(r) for r in rects)
    return tuple(r for r in rects if rect_area(r) == best_area)
