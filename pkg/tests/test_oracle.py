"""Brute-force reference: interior counting, best rect, full enumeration."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from seprect.geometry import AxisRect, make_instance, make_point, rect_area
from seprect.oracle import (
    check_candidate,
    count_open_interior,
    is_feasible,
    is_maximal,
    oracle_all,
    oracle_best,
)
from seprect.generators import gen_random


W_BLUES = [(1, 3), (1, -3), (4, 0), (-2, 0), (3, 2)]
W = make_instance([(0, 0), (2, 0), (1, 1), (1, -1)], W_BLUES)


def test_count_open_interior_examples():
    blues = [make_point(x, y) for x, y in W_BLUES]
    assert count_open_interior(AxisRect(-2, 4, -3, 3), blues) == 1
    assert count_open_interior(AxisRect(-2, 3, -3, 3), blues) == 0
    assert count_open_interior(AxisRect(-2, 4, -3, 3), []) == 0


def test_count_open_interior_boundary_excluded():
    blues = [make_point(0, 0), make_point(1, 1), make_point(1, 0)]
    assert count_open_interior(AxisRect(0, 1, 0, 1), blues) == 0
    assert count_open_interior(AxisRect(-1, 2, -1, 2), blues) == 3


def test_oracle_best_w():
    res = oracle_best(W)
    assert res.status == "bounded"
    assert res.area == 30
    assert res.forced_blue == 0
    assert rect_area(res.rect) == 30


def test_oracle_all_w():
    assert set(oracle_all(W)) == {AxisRect(-2, 3, -3, 3), AxisRect(-2, 4, -3, 2)}


def test_oracle_four_point_square():
    inst = make_instance([(0, 0)], [(1, 0), (-1, 0), (0, 1), (0, -1)])
    res = oracle_best(inst)
    assert res.rect == AxisRect(-1, 1, -1, 1)
    assert res.area == 4


def test_oracle_unbounded():
    inst = make_instance([(0, 0), (1, 1)], [(5, 5)])
    res = oracle_best(inst)
    assert res.status == "unbounded"
    assert set(res.unbounded_directions) == {"top", "bottom", "left", "right"}
    with pytest.raises(ValueError):
        oracle_all(inst)


def test_oracle_forced_blue():
    inst = make_instance(
        [(0, 0), (4, 4)],
        [(2, 2), (2, 2), (1, 3), (6, 2), (-2, 2), (2, 6), (2, -2)],
    )
    res = oracle_best(inst)
    assert res.forced_blue == 3
    assert res.rect == AxisRect(-2, 6, -2, 6)


def test_feasibility_and_maximality_on_w():
    opt = AxisRect(-2, 3, -3, 3)
    assert is_feasible(opt, W)
    assert is_maximal(opt, W)
    # red (2, 0) falls outside
    assert not is_feasible(AxisRect(-2, 1, -3, 3), W)
    # the right side can still slide from 2 to 3
    shrunk = AxisRect(-2, 2, -3, 3)
    assert is_feasible(shrunk, W)
    assert not is_maximal(shrunk, W)


def test_check_candidate_report():
    report = check_candidate(AxisRect(-2, 4, -3, 2), W)
    assert report == {"feasible": True, "open_blue": 0, "maximal": True}
    # growing the top to the wall swallows the blue at (3, 2)
    report = check_candidate(AxisRect(-2, 4, -3, 3), W)
    assert report["feasible"] is True
    assert report["open_blue"] == 1
    assert report["maximal"] is True


def test_fraction_coordinates_match_scaled_integers():
    """The exact path and the integer fast path agree after clearing denominators."""
    reds = [(Fraction(1, 2), Fraction(1, 3)), (Fraction(-1, 2), Fraction(-2, 3))]
    blues = [
        (Fraction(3, 2), Fraction(1, 3)),
        (Fraction(-3, 2), 0),
        (0, Fraction(4, 3)),
        (Fraction(1, 2), -1),
        (Fraction(5, 6), Fraction(2, 3)),
    ]
    frac = make_instance(reds, blues)
    scaled = make_instance(
        [(x * 6, y * 6) for x, y in reds], [(x * 6, y * 6) for x, y in blues]
    )
    a, b = oracle_best(frac), oracle_best(scaled)
    assert a.status == b.status == "bounded"
    assert b.area == a.area * 36
    assert len(oracle_all(frac)) == len(oracle_all(scaled))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_oracle_all_members_feasible_maximal(data):
    n = data.draw(st.integers(1, 5))
    m = data.draw(st.integers(4, 12))
    inst = gen_random(n, m, seed=data.draw(st.integers(0, 2**30)))
    res = oracle_best(inst)
    if res.status != "bounded":
        return
    rects = oracle_all(inst)
    assert res.rect in rects
    for r in rects:
        assert is_feasible(r, inst)
        assert is_maximal(r, inst)
        assert rect_area(r) == res.area
        assert count_open_interior(r, inst.blues) == res.forced_blue
