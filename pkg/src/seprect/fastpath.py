"""Vectorized front end for large integer instances.

The case machinery only ever looks at blue points in the annulus between
the red box and the outer wall box, and for random instances that annulus
is a vanishing fraction of the input. This module does the O(n + m) region
classification with numpy (comparisons and min/max only, so plain int64 is
safe at any magnitude), converts the few surviving annulus points to Python
ints, and hands a regular frame to the shared solver. The scan walks the
input in cache-sized blocks so each point is pulled from memory once per
pass instead of once per elementwise operation.

Raw (m, 2) int64 arrays are accepted directly so benchmarks do not pay for
building point objects. Instances with rational coordinates fall back to
the exact path.
"""

from __future__ import annotations

from dataclasses import replace

import numpy as np

from .bounding import Frame, Wall, build_frame
from .geometry import AxisRect, Instance, Point, make_instance
from .solver import Solution, UnboundedError, solve_from_frame, solve_one

_STRIPS = ("top", "bottom", "left", "right")


def _witness(side, bx, by, mask, coord):
    if side in ("top", "bottom"):
        at = mask & (by == coord)
        return Point(int(bx[at].min()), int(coord))
    at = mask & (bx == coord)
    return Point(int(coord), int(by[at].min()))


# rows per block; sized so a block's columns and mask temps stay cache
# resident, which keeps the per-point cost flat as m grows
_BLOCK = 1 << 17


def _solve_arrays(reds: np.ndarray, blues: np.ndarray, presorted: bool) -> Solution:
    rx, ry = reds[:, 0], reds[:, 1]
    total = int(blues.shape[0])
    if total and not presorted:
        order = np.lexsort((blues[:, 1], blues[:, 0]))
        blues = blues[order]
    xmin, xmax = int(rx.min()), int(rx.max())
    ymin, ymax = int(ry.min()), int(ry.max())
    smin = AxisRect(xmin, xmax, ymin, ymax)

    # pass 1: wall coordinates and the forced count, one block at a time
    top = bottom = left = right = None
    forced = 0
    for start in range(0, total, _BLOCK):
        chunk = blues[start:start + _BLOCK]
        cx = np.ascontiguousarray(chunk[:, 0])
        cy = np.ascontiguousarray(chunk[:, 1])
        in_v = (cx >= xmin) & (cx <= xmax)
        in_h = (cy >= ymin) & (cy <= ymax)
        m = in_v & (cy >= ymax)
        if m.any():
            v = int(cy[m].min())
            top = v if top is None else min(top, v)
        m = in_v & (cy <= ymin)
        if m.any():
            v = int(cy[m].max())
            bottom = v if bottom is None else max(bottom, v)
        m = in_h & (cx >= xmax)
        if m.any():
            v = int(cx[m].min())
            right = v if right is None else min(right, v)
        m = in_h & (cx <= xmin)
        if m.any():
            v = int(cx[m].max())
            left = v if left is None else max(left, v)
        forced += int(((cx > xmin) & (cx < xmax)
                       & (cy > ymin) & (cy < ymax)).sum())

    if top is None or bottom is None or left is None or right is None:
        # rare path, not worth blocking: rebuild the strip masks whole
        bx, by = blues[:, 0], blues[:, 1]
        in_v = (bx >= xmin) & (bx <= xmax)
        in_h = (by >= ymin) & (by <= ymax)
        strips = {
            "top": in_v & (by >= ymax),
            "bottom": in_v & (by <= ymin),
            "left": in_h & (bx <= xmin),
            "right": in_h & (bx >= xmax),
        }
        walls = {}
        for s in _STRIPS:
            m = strips[s]
            if not m.any():
                walls[s] = Wall(s, None, None)
                continue
            arr = by[m] if s in ("top", "bottom") else bx[m]
            coord = int(arr.min() if s in ("top", "right") else arr.max())
            walls[s] = Wall(s, coord, _witness(s, bx, by, m, coord))
        frame = Frame(smin, walls["top"], walls["bottom"], walls["left"],
                      walls["right"], forced, (), (), (), (), (), 0)
        return Solution("unbounded", forced, frame,
                        unbounded_directions=frame.unbounded_directions())

    # pass 2: gather the annulus points (wall box minus open red box)
    keep_x: list = []
    keep_y: list = []
    kept = 0
    for start in range(0, total, _BLOCK):
        chunk = blues[start:start + _BLOCK]
        cx = np.ascontiguousarray(chunk[:, 0])
        cy = np.ascontiguousarray(chunk[:, 1])
        ann = ((cx >= left) & (cx <= right) & (cy >= bottom) & (cy <= top)
               & ~((cx > xmin) & (cx < xmax) & (cy > ymin) & (cy < ymax)))
        hits = int(ann.sum())
        if hits:
            kept += hits
            keep_x.extend(cx[ann].tolist())
            keep_y.extend(cy[ann].tolist())
    outside = total - forced - kept

    # Two synthetic reds pin the same red box; the annulus points rebuild the
    # same walls, witnesses and quadrants, since every discarded blue point is
    # strictly outside the wall box and cannot influence any of them.
    reduced = make_instance([(xmin, ymin), (xmax, ymax)],
                            list(zip(keep_x, keep_y)))
    frame = replace(build_frame(reduced), forced_blue=forced, outside=outside)
    return solve_from_frame(frame)


def solve_fast(instance, blues=None, presorted: bool = False) -> Solution:
    """Instance form: solve_fast(instance). Array form: solve_fast(reds, blues)
    with int64 arrays of shape (n, 2) / (m, 2)."""
    if isinstance(instance, Instance):
        # dtype probe first: np.array(..., dtype=int64) would silently
        # truncate Fractions through __int__ instead of raising
        try:
            reds = np.array(instance.reds)
            blue_arr = (np.array(instance.blues) if instance.blues
                        else np.empty((0, 2), dtype=np.int64))
        except OverflowError:
            return solve_one(instance, presorted=presorted)
        if reds.dtype.kind != "i" or blue_arr.dtype.kind != "i":
            return solve_one(instance, presorted=presorted)
        sol = _solve_arrays(reds.astype(np.int64), blue_arr.astype(np.int64),
                            presorted)
        return replace(sol, instance=instance)
    reds = np.asarray(instance, dtype=np.int64)
    blue_arr = (np.empty((0, 2), dtype=np.int64) if blues is None
                else np.asarray(blues, dtype=np.int64))
    return _solve_arrays(reds, blue_arr, presorted)


def solve(instance: Instance, engine: str = "auto", presorted: bool = False,
          require_bounded: bool = False) -> Solution:
    """Engine dispatch. "fast" needs integer coordinates (falls back to the
    exact path otherwise); "auto" picks the fast path for large inputs."""
    if engine not in ("auto", "exact", "fast"):
        raise ValueError("unknown engine %r" % (engine,))
    if engine == "fast" or (engine == "auto" and len(instance.blues) >= 4096):
        sol = solve_fast(instance, presorted=presorted)
    else:
        sol = solve_one(instance, presorted=presorted)
    if require_bounded and sol.status == "unbounded":
        raise UnboundedError(sol.unbounded_directions)
    return sol
