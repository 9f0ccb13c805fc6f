"""Parsing, serialization, and rendering round trips."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from seprect.geometry import AxisRect, make_instance
from seprect.io import (
    ParseError,
    emit_solution,
    instance_to_csv,
    parse_points,
    solution_to_dict,
    solution_to_json,
    solution_to_tsv,
)
from seprect.solver import solve_all, solve_one
from seprect.generators import gen_random


W = make_instance(
    [(0, 0), (2, 0), (1, 1), (1, -1)],
    [(1, 3), (1, -3), (4, 0), (-2, 0), (3, 2)],
)

W_CSV = """color,x,y
R,0,0
R,2,0
R,1,1
R,1,-1
B,1,3
B,1,-3
B,4,0
B,-2,0
B,3,2
"""


def test_parse_csv_with_header():
    assert parse_points(W_CSV) == W


def test_parse_csv_without_header():
    body = "\n".join(W_CSV.splitlines()[1:]) + "\n"
    assert parse_points(body) == W


def test_parse_csv_crlf_and_bom():
    text = "﻿" + W_CSV.replace("\n", "\r\n")
    assert parse_points(text) == W


def test_parse_csv_unicode_minus():
    assert parse_points("R,−2,3\nB,1,−1\n") == make_instance(
        [(-2, 3)], [(1, -1)]
    )


def test_parse_csv_rationals_and_decimals():
    inst = parse_points("R,1/3,0.25\nB,-7/2,1e2\n")
    assert inst.reds[0].x == Fraction(1, 3)
    assert inst.reds[0].y == Fraction(1, 4)
    assert inst.blues[0].x == Fraction(-7, 2)
    assert inst.blues[0].y == 100


def test_parse_csv_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_points("color,x,y\nR,0,0\nG,1,1\n")
    assert err.value.line == 3
    with pytest.raises(ParseError) as err:
        parse_points("R,0,0\nB,1\n")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        parse_points("R,zebra,0\n")
    assert err.value.line == 1


def test_parse_requires_reds():
    with pytest.raises(ParseError):
        parse_points("B,1,1\nB,2,2\n")


def test_parse_json_form():
    text = json.dumps(
        {"reds": [[0, 0], ["1/2", 1]], "blues": [[2, "0.5"], [-1, -1]]}
    )
    inst = parse_points(text)
    assert inst.reds[1].x == Fraction(1, 2)
    assert inst.blues[0].y == Fraction(1, 2)
    assert len(inst.blues) == 2


def test_parse_json_float_literals_stay_exact():
    inst = parse_points('{"reds": [[0.1, 0]], "blues": []}')
    assert inst.reds[0].x == Fraction(1, 10)


def test_csv_round_trip():
    text = instance_to_csv(W)
    assert text.startswith("color,x,y\n")
    assert parse_points(text) == W


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(0, 12), st.integers(0, 2**30))
def test_csv_round_trip_random(n, m, seed):
    inst = gen_random(n, m, seed=seed)
    assert parse_points(instance_to_csv(inst)) == inst


def test_json_payload_bounded():
    payload = solution_to_dict(solve_one(W))
    assert payload["status"] == "bounded"
    assert payload["area"] == "30"
    assert payload["area_float"] == 30.0
    assert payload["forced_blue"] == 0
    rect = payload["rect"]
    assert set(rect) == {"xmin", "xmax", "ymin", "ymax"}
    assert all(isinstance(v, str) for v in rect.values())
    assert payload["case"] in (1, 2, 3)
    assert {s["kind"] for s in payload["supports"].values()} <= {"point", "wall"}
    parsed = json.loads(solution_to_json(solve_one(W)))
    assert parsed["area"] == "30"


def test_json_payload_all_rects():
    sol = solve_one(W)
    payload = solution_to_dict(sol, all_rects=solve_all(W))
    assert payload["optima_count"] == 2
    assert len(payload["optima"]) == 2


def test_json_payload_unbounded():
    sol = solve_one(make_instance([(0, 0)], []))
    payload = solution_to_dict(sol)
    assert payload["status"] == "unbounded"
    assert set(payload["directions"]) == {"top", "bottom", "left", "right"}
    assert "rect" not in payload


def test_tsv_bounded_single():
    line = solution_to_tsv(solve_one(W)).strip()
    fields = line.split("\t")
    assert fields[0] == "bounded"
    assert fields[5] == "30"


def test_tsv_all_rects():
    sol = solve_one(W)
    lines = solution_to_tsv(sol, all_rects=solve_all(W)).strip().splitlines()
    assert len(lines) == 2
    assert all(l.split("\t")[5] == "30" for l in lines)


def test_tsv_unbounded():
    sol = solve_one(make_instance([(0, 0), (1, 1)], [(5, 5)]))
    fields = solution_to_tsv(sol).strip().split("\t")
    assert fields[0] == "unbounded"


def test_svg_counts():
    svg = emit_solution(solve_one(W), format="svg")
    assert svg.startswith("<svg")
    assert svg.count("<circle") == 9
    assert svg.count("<rect") <= 3
    assert 'class="red-point"' in svg
    assert 'class="blue-point"' in svg


def test_svg_all_rects_draws_every_optimum():
    sol = solve_one(W)
    svg = emit_solution(sol, format="svg", all_rects=solve_all(W))
    assert svg.count('class="solution"') == 2


def test_svg_unbounded_has_note():
    sol = solve_one(make_instance([(0, 0), (1, 1)], [(5, 5)]))
    svg = emit_solution(sol, format="svg")
    assert "unbounded" in svg
    assert svg.count("<circle") == 3


def test_emit_rejects_unknown_format():
    with pytest.raises(ValueError):
        emit_solution(solve_one(W), format="yaml")
