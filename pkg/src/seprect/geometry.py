"""Exact planar primitives: points, closed axis-aligned rectangles, instances.

Coordinates are ints or fractions.Fraction, never floats. The solvers rely on
exact ties (adversarial inputs place blue points exactly on rectangle edges),
so every predicate here is tolerance-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Union

Coord = Union[int, Fraction]


def as_exact(value) -> Coord:
    """Coerce a number to an exact coordinate.

    Accepts ints, Fractions, and strings Fraction() understands ("3", "-2/7",
    "0.25"). Floats are rejected: they would silently break exact ties.
    """
    if isinstance(value, bool):
        raise TypeError("coordinate must be a number, got bool")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        return as_exact(Fraction(value))
    if isinstance(value, float):
        raise TypeError(f"float coordinate {value!r} rejected; use int, Fraction, or string")
    raise TypeError(f"coordinate must be int or Fraction, got {type(value).__name__}")


class Point(NamedTuple):
    x: Coord
    y: Coord


class AxisRect(NamedTuple):
    """Closed rectangle [xmin, xmax] x [ymin, ymax]; degenerate sides allowed."""

    xmin: Coord
    xmax: Coord
    ymin: Coord
    ymax: Coord

    def valid(self) -> bool:
        return self.xmin <= self.xmax and self.ymin <= self.ymax


def make_point(x, y) -> Point:
    return Point(as_exact(x), as_exact(y))


def make_rect(xmin, xmax, ymin, ymax) -> AxisRect:
    r = AxisRect(as_exact(xmin), as_exact(xmax), as_exact(ymin), as_exact(ymax))
    if not r.valid():
        raise ValueError(f"invalid rectangle {r!r}")
    return r


def rect_area(r: AxisRect) -> Coord:
    return (r.xmax - r.xmin) * (r.ymax - r.ymin)


def contains_closed(r: AxisRect, p: Point) -> bool:
    return r.xmin <= p.x <= r.xmax and r.ymin <= p.y <= r.ymax


def strictly_inside(r: AxisRect, p: Point) -> bool:
    return r.xmin < p.x < r.xmax and r.ymin < p.y < r.ymax


def rect_contains_rect(outer: AxisRect, inner: AxisRect) -> bool:
    return (outer.xmin <= inner.xmin and inner.xmax <= outer.xmax
            and outer.ymin <= inner.ymin and inner.ymax <= outer.ymax)


@dataclass(frozen=True)
class Instance:
    """A red/blue point configuration. Red points must be nonempty."""

    reds: tuple[Point, ...]
    blues: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "reds", tuple(self.reds))
        object.__setattr__(self, "blues", tuple(self.blues))
        if not self.reds:
            raise ValueError("no red points")


def make_instance(reds: Iterable, blues: Iterable) -> Instance:
    """Build an Instance from (x, y) iterables, coercing coordinates."""
    return Instance(
        tuple(make_point(x, y) for x, y in reds),
        tuple(make_point(x, y) for x, y in blues),
    )
