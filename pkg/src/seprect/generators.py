"""Instance generators: seeded random, the linear-optima family, and the
furthest-adjacent-pair reduction.

The two structured families place four red points so that the core's sides
sit strictly between the blue constructions they must separate; placing the
reds exactly on blue coordinates (the tempting "tight" choice) merges
staircase entries into walls and changes the optimum count.
"""

import random
from fractions import Fraction

from .geometry import Instance, as_exact, make_instance


def gen_random(n: int, m: int, seed, coordinate_range=(-6, 6)) -> Instance:
    """Uniform integer points; small ranges force ties and collinearity."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 red points and m >= 0 blue points")
    lo, hi = coordinate_range
    if lo > hi:
        raise ValueError("empty coordinate range")
    rng = random.Random(seed)
    reds = [(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(n)]
    blues = [(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(m)]
    return make_instance(reds, blues)


def gen_omega_m(m: int, x0, y0) -> Instance:
    """Family with exactly m-4 optimal rectangles, all of area x0*y0.

    Blues: p on the core's top edge and q on its right edge (zero slides),
    plus r_1..r_{m-2} descending along a hyperbola-like run to the lower
    left. Every rectangle pinned by an adjacent run pair (with the top and
    right sides on the walls) has area exactly x0*y0. r_1 sits at y=0 and
    serves as the left wall; the run from r_2 on dives below the core.
    """
    if m < 6:
        raise ValueError("m must be at least 6")
    x0 = Fraction(as_exact(x0))
    y0 = Fraction(as_exact(y0))
    if x0 <= 0 or y0 <= 0:
        raise ValueError("x0 and y0 must be positive")

    def x_at(i):  # virtual i=0 gives -3*x0/2
        return -3 * x0 / 2 + 3 * x0 * i / (2 * (m - 1))

    xs = [x_at(i) for i in range(m - 1)]  # xs[0] is virtual, xs[1..m-2] real
    ys = {1: Fraction(0)}
    for i in range(2, m - 1):
        ys[i] = y0 / 2 - x0 * y0 / (x0 / 2 - xs[i - 1])
    blues = [(x0 / 4, y0 / 2), (x0 / 2, y0 / 4)]
    blues += [(xs[i], ys[i]) for i in range(1, m - 1)]
    reds = [
        (x0 / 2, Fraction(0)),   # east
        (Fraction(0), y0 / 2),   # north
        (xs[m - 3], Fraction(0)),  # west
        (Fraction(0), ys[2] / 2),  # south: strictly above r_2, keeping it
    ]                              # in the corner rather than on the wall
    return make_instance(reds, blues)


def gen_fap(values) -> Instance:
    """Reduction instance for a set of rationals in [0, 1].

    Blues p_i = (a_i, 1/(1+a_i)) and the origin-mirrored q_i; reds pin the
    core so that every adjacent pair (a_i, a_{i+1}) admits the symmetric
    rectangle [-a_{i+1}, a_{i+1}] x [-1/(1+a_i), 1/(1+a_i)] of area
    4*a_{i+1}/(1+a_i).
    """
    a = sorted(Fraction(as_exact(v)) for v in values)
    if len(a) < 3:
        raise ValueError("need at least 3 values")
    if any(u == v for u, v in zip(a, a[1:])):
        raise ValueError("values must be distinct")
    if a[0] < 0 or a[-1] > 1:
        raise ValueError("values must lie in [0, 1]")
    blues = []
    for v in a:
        h = 1 / (1 + v)
        blues.append((v, h))
        blues.append((-v, -h))
    ex = (a[0] + a[1]) / 2
    ny = (1 / (1 + a[-2]) + 1 / (1 + a[-1])) / 2
    reds = [(Fraction(0), Fraction(0)), (ex, Fraction(0)), (-ex, Fraction(0)),
            (Fraction(0), ny), (Fraction(0), -ny)]
    return make_instance(reds, blues)


def fap_by_sorting(values):
    """The adjacent pair of maximum gap in sorted order; leftmost on ties."""
    a = sorted(Fraction(as_exact(v)) for v in values)
    if len(a) < 2:
        raise ValueError("need at least 2 values")
    best = (a[0], a[1])
    for u, v in zip(a, a[1:]):
        if v - u > best[1] - best[0]:
            best = (u, v)
    return best


def extract_fap_from_solution(solution):
    """Recover the adjacent pair that an optimal reduction rectangle spans:
    the top edge 1/(1+a_i) names a_i, the right edge names a_{i+1}."""
    rect = solution.best.rect
    a_low = 1 / Fraction(rect.ymax) - 1
    a_high = Fraction(rect.xmax)
    return (a_low, a_high)
