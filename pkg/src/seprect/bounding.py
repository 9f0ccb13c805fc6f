"""Bounding frame: the red core rectangle, the four blocking walls, and the
partition of blue points into the regions the search needs.

Terminology used throughout the package:

  smin  -- bounding box of the red points. Every candidate rectangle must
           contain it (red points are allowed on candidate boundaries).
  walls -- for each side, the nearest blue coordinate that caps how far that
           side can slide away from smin. The top wall, for example, is the
           least y among blue points whose x lies in [smin.xmin, smin.xmax]
           and whose y is >= smin.ymax: such a point would end up inside any
           rectangle whose top passes it. A blue point exactly on smin's edge
           gives a zero slide. An empty strip leaves the side unbounded.
  smax  -- the rectangle of the four walls, when all exist. Every maximal
           candidate lies between smin and smax.

Blue points are classified by region:

  forced    -- strictly inside smin; counted into every candidate's interior.
  outside   -- outside closed smax; can never block a maximal candidate.
  quadrants -- inside a closed corner region of the annulus (NE / NW / SW /
               SE); these drive the staircases. A point on a shared corner
               boundary goes to the first of NE, NW, SW, SE that contains it.
  walls     -- the rest: annulus points inside a side strip. Each lies on its
               side's wall line (anything nearer would have moved the wall),
               so it can support a candidate side but never truncates a
               staircase.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .geometry import AxisRect, Coord, Instance, Point, strictly_inside

SIDES = ("top", "bottom", "left", "right")


@dataclass(frozen=True)
class Wall:
    """One side's blue cap: the wall coordinate and a witness point, or None
    for an unbounded side."""

    side: str
    coord: Optional[Coord]
    witness: Optional[Point]

    @property
    def unbounded(self) -> bool:
        return self.coord is None


@dataclass(frozen=True)
class Frame:
    smin: AxisRect
    top: Wall
    bottom: Wall
    left: Wall
    right: Wall
    forced_blue: int
    ne: tuple[Point, ...]
    nw: tuple[Point, ...]
    sw: tuple[Point, ...]
    se: tuple[Point, ...]
    wall_points: tuple[Point, ...]
    outside: int

    @property
    def bounded(self) -> bool:
        return not any(w.unbounded for w in (self.top, self.bottom, self.left, self.right))

    @property
    def smax(self) -> AxisRect:
        if not self.bounded:
            raise ValueError("smax undefined: " + ", ".join(self.unbounded_directions()))
        return AxisRect(self.left.coord, self.right.coord, self.bottom.coord, self.top.coord)

    def unbounded_directions(self) -> tuple[str, ...]:
        return tuple(s for s in SIDES if getattr(self, s).unbounded)

    def wall(self, side: str) -> Wall:
        return getattr(self, side)


def compute_smin(instance: Instance) -> AxisRect:
    xs = [p.x for p in instance.reds]
    ys = [p.y for p in instance.reds]
    return AxisRect(min(xs), max(xs), min(ys), max(ys))


def compute_walls(instance: Instance, smin: AxisRect) -> dict[str, Wall]:
    """Scan the four closed strips around smin for the nearest blue point.

    Witness ties break deterministically: among equally near points, the one
    with the smaller other-coordinate wins.
    """
    top = bottom = left = right = None
    for p in instance.blues:
        if smin.xmin <= p.x <= smin.xmax:
            if p.y >= smin.ymax and (top is None or (p.y, p.x) < (top.y, top.x)):
                top = p
            if p.y <= smin.ymin and (bottom is None or (-p.y, p.x) < (-bottom.y, bottom.x)):
                bottom = p
        if smin.ymin <= p.y <= smin.ymax:
            if p.x >= smin.xmax and (right is None or (p.x, p.y) < (right.x, right.y)):
                right = p
            if p.x <= smin.xmin and (left is None or (-p.x, p.y) < (-left.x, left.y)):
                left = p
    return {
        "top": Wall("top", None if top is None else top.y, top),
        "bottom": Wall("bottom", None if bottom is None else bottom.y, bottom),
        "left": Wall("left", None if left is None else left.x, left),
        "right": Wall("right", None if right is None else right.x, right),
    }


def prune(instance: Instance, smin: AxisRect, walls: dict[str, Wall]):
    """Partition blue points by region. Requires all four walls bounded.

    Returns (forced, quadrants, wall_points, outside) where quadrants maps
    "ne"/"nw"/"sw"/"se" to point lists. forced + outside + len(wall_points)
    + sum of quadrant sizes == number of blue points (multiset, so duplicate
    coordinates each count).
    """
    xlo, xhi = walls["left"].coord, walls["right"].coord
    ylo, yhi = walls["bottom"].coord, walls["top"].coord
    forced = 0
    outside = 0
    quadrants = {"ne": [], "nw": [], "sw": [], "se": []}
    wall_points = []
    for p in instance.blues:
        if strictly_inside(smin, p):
            forced += 1
            continue
        if not (xlo <= p.x <= xhi and ylo <= p.y <= yhi):
            outside += 1
            continue
        east = p.x >= smin.xmax
        west = p.x <= smin.xmin
        north = p.y >= smin.ymax
        south = p.y <= smin.ymin
        if north and east:
            quadrants["ne"].append(p)
        elif north and west:
            quadrants["nw"].append(p)
        elif south and west:
            quadrants["sw"].append(p)
        elif south and east:
            quadrants["se"].append(p)
        else:
            # Inside exactly one side strip; must sit on that side's wall line.
            wall_points.append(p)
    for q in quadrants:
        quadrants[q].sort()
    return forced, quadrants, tuple(wall_points), outside


def build_frame(instance: Instance) -> Frame:
    """Assemble the full frame. Unbounded sides leave quadrant data empty."""
    smin = compute_smin(instance)
    walls = compute_walls(instance, smin)
    if any(w.unbounded for w in walls.values()):
        forced = sum(1 for p in instance.blues if strictly_inside(smin, p))
        return Frame(smin, walls["top"], walls["bottom"], walls["left"], walls["right"],
                     forced, (), (), (), (), (), 0)
    forced, quadrants, wall_points, outside = prune(instance, smin, walls)
    return Frame(
        smin,
        walls["top"], walls["bottom"], walls["left"], walls["right"],
        forced,
        tuple(quadrants["ne"]), tuple(quadrants["nw"]),
        tuple(quadrants["sw"]), tuple(quadrants["se"]),
        wall_points,
        outside,
    )
