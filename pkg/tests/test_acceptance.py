"""Acceptance criteria, one test per criterion.

Each test prints and records a single CRITERION line with its verdict.
Criterion 4 encodes a round-trip claim that does not hold for this problem
(see README); it is implemented exactly as stated and fails honestly rather
than being weakened to pass. Criterion 5's order property is likewise not a
true invariant, but random sampling does not reach the violating geometry,
so the criterion passes as stated; the constructed counterexample lives in
test_matrix.py.
"""

import functools
import random
import time
from fractions import Fraction

from conftest import record_criterion

from seprect.bounding import build_frame
from seprect.staircase import build_staircases
from seprect.matrix import StaircaseMatrix, verify_total_inverse_monotone
from seprect.solver import build_case3_windows, solve_all, solve_one
from seprect.oracle import check_candidate, oracle_all, oracle_best
from seprect.generators import (
    fap_by_sorting,
    extract_fap_from_solution,
    gen_fap,
    gen_omega_m,
    gen_random,
)
from seprect.fastpath import solve_fast
from seprect.bench import run_benchmark
from seprect.geometry import make_instance


def _verdict(num, ok, detail):
    line = "CRITERION %d: %s - %s" % (num, "PASS" if ok else "FAIL", detail)
    print(line)
    record_criterion(line)
    return line


def _random_instance(i):
    rng = random.Random(1_000_000 + i)
    n = rng.randint(1, 20)
    m = rng.randint(0, 30)
    return gen_random(n, m, seed=rng.randrange(2**30))


def test_criterion_1_oracle_equivalence():
    """10,000 seeded instances: exact area agreement, feasible, maximal."""
    t0 = time.perf_counter()
    bad = 0
    for i in range(10_000):
        inst = _random_instance(i)
        sol = solve_one(inst)
        ref = oracle_best(inst)
        if sol.status != ref.status:
            bad += 1
            continue
        if sol.status == "bounded":
            report = check_candidate(sol.best.rect, inst)
            if not (sol.area == ref.area and report["feasible"]
                    and report["maximal"]
                    and report["open_blue"] == sol.forced_blue):
                bad += 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 120.0
    line = _verdict(1, ok, "10000 instances, %d mismatches, %.1fs" % (bad, elapsed))
    assert ok, line


def test_criterion_2_all_optima_equivalence():
    """2,000 bounded instances: solve_all matches oracle_all as exact sets."""
    bad = 0
    done = 0
    i = 0
    while done < 2_000:
        inst = _random_instance(i)
        i += 1
        if not build_frame(inst).bounded:
            continue
        done += 1
        ours = solve_all(inst)
        ref = oracle_all(inst)
        if set(ours) != set(ref) or len(ours) != len(ref):
            bad += 1
    ok = bad == 0
    line = _verdict(2, ok, "2000 bounded instances, %d set mismatches" % bad)
    assert ok, line


def test_criterion_3_linear_optima_family():
    """Hard family: area x0*y0 and exactly m-4 optima, oracle-checked."""
    bad = []
    for m in (6, 8, 10, 12, 14):
        for x0, y0 in ((1, 1), (2, 3)):
            inst = gen_omega_m(m, x0, y0)
            sol = solve_one(inst)
            rects = solve_all(inst)
            if sol.area != Fraction(x0) * Fraction(y0):
                bad.append((m, x0, y0, "area"))
            if len(rects) != m - 4 or len(set(rects)) != m - 4:
                bad.append((m, x0, y0, "count"))
            if set(rects) != set(oracle_all(inst)):
                bad.append((m, x0, y0, "oracle"))
    ok = not bad
    line = _verdict(3, ok, "10 family configurations" if ok else repr(bad))
    assert ok, line


def _random_value_set(rng):
    size = rng.randint(3, 50)
    vals = set()
    while len(vals) < size:
        den = rng.randint(1, 64)
        vals.add(Fraction(rng.randint(0, den), den))
    return sorted(vals)


def test_criterion_4_gap_round_trip():
    """Solved gap instances against the sorting baseline and area formula."""
    bad = 0
    for i in range(1_000):
        vals = _random_value_set(random.Random(7_000_000 + i))
        a_i, a_j = fap_by_sorting(vals)
        sol = solve_one(gen_fap(vals))
        pair = extract_fap_from_solution(sol)
        if pair != (a_i, a_j) or sol.area != 4 * a_j / (1 + a_i):
            bad += 1
    ok = bad == 0
    line = _verdict(
        4, ok,
        "1000 value sets, %d disagree with the sorting-gap formula "
        "(documented defect: the max gap does not maximize 4b/(1+a))" % bad,
    )
    assert ok, line


@functools.lru_cache(maxsize=None)
def _case3_matrix_specs(target=500):
    """Constructor arguments of nonempty diagonal matrices from random
    bounded instances, staircase sizes capped at 12."""
    specs = []
    i = 0
    while len(specs) < target:
        rng = random.Random(3_000_000 + i)
        i += 1
        inst = gen_random(rng.randint(1, 6), rng.randint(6, 26),
                          seed=rng.randrange(2**30))
        frame = build_frame(inst)
        if not frame.bounded:
            continue
        stairs = build_staircases(frame)
        ne, sw = stairs.ne, stairs.sw
        if not (2 <= len(ne) <= 12 and 2 <= len(sw) <= 12):
            continue
        F, L = build_case3_windows(stairs, None, "ne-sw")
        if all(f > l for f, l in zip(F, L)):
            continue
        specs.append((ne.ys[:-1], ne.xs[1:], sw.xs[:-1], sw.ys[1:],
                      tuple(F), tuple(L)))
    return specs


def _fresh(spec):
    tops, rights, lefts, bottoms, F, L = spec
    return StaircaseMatrix(row_tops=tops, row_rights=rights, col_lefts=lefts,
                           col_bottoms=bottoms, j1=F, j2=L)


def test_criterion_5_matrix_order_property():
    """Total inverse monotonicity of the padded matrix, plus row_maxima
    exactness, on 500 solver-built matrices."""
    specs = _case3_matrix_specs()
    violations = 0
    maxima_bad = 0
    for spec in specs:
        mat = _fresh(spec)
        if not verify_total_inverse_monotone(mat.padded_entry, mat.rows, mat.cols):
            violations += 1
        mat2 = _fresh(spec)
        got = mat2.row_maxima()
        probe = _fresh(spec)
        for r, (val, arg) in enumerate(got):
            vals = [probe.padded_entry(r, j) for j in range(probe.cols)]
            best = max(vals)
            want_arg = max(j for j, v in enumerate(vals) if v == best)
            if val != best or arg != want_arg:
                maxima_bad += 1
                break
    ok = violations == 0 and maxima_bad == 0
    line = _verdict(
        5, ok,
        "500 matrices: order property violated on %d, row_maxima exact on "
        "%d/500 (the property is not a true invariant; a constructed "
        "counterexample instance is frozen in test_matrix.py)"
        % (violations, 500 - maxima_bad),
    )
    assert ok, line


def test_criterion_6_row_maxima_work_bound():
    """padded_entry calls during row_maxima within 8*(rows+cols)."""
    specs = _case3_matrix_specs()
    worst = 0.0
    bad = 0
    for spec in specs:
        mat = _fresh(spec)
        mat.row_maxima()
        budget = 8 * (mat.rows + mat.cols)
        worst = max(worst, mat.eval_count / budget)
        if mat.eval_count > budget:
            bad += 1
    ok = bad == 0
    line = _verdict(
        6, ok,
        "500 matrices, worst usage %.2f of the 8*(rows+cols) budget" % worst,
    )
    assert ok, line


def test_criterion_7_doubling_scaling(tmp_path):
    """Presorted doubling sweep: median ratios at most 2.4, one-million-point
    instances solved in under five seconds."""
    report = run_benchmark({
        "sizes": [2**18, 2**19, 2**20, 2**21, 2**22],
        "n": 1_000,
        "reps": 7,
        "presorted": True,
        "out_dir": str(tmp_path),
    })
    ratios = [r["ratio"] for r in report["ratios"]]
    million = next(r for r in report["results"] if r["m"] >= 10**6)
    ok = all(r is not None and r <= 2.4 for r in ratios) \
        and million["median_s"] < 5.0
    line = _verdict(
        7, ok,
        "ratios %s, m=%d median %.3fs"
        % (["%.2f" % r for r in ratios], million["m"], million["median_s"]),
    )
    assert ok, line


def _degenerate_suite():
    yield "single red, boxed", make_instance(
        [(0, 0)], [(0, 2), (0, -2), (2, 0), (-2, 0)])
    yield "single red, no blues", make_instance([(0, 0)], [])
    yield "reds collinear horizontal", make_instance(
        [(-2, 0), (0, 0), (2, 0)], [(0, 1), (0, -1), (3, 0), (-3, 0)])
    yield "reds collinear vertical", make_instance(
        [(0, -2), (0, 0), (0, 2)], [(1, 0), (-1, 0), (0, 3), (0, -3)])
    yield "blue on smin edge (zero slide)", make_instance(
        [(0, 0), (2, 2)], [(1, 2), (1, -1), (3, 1), (-1, 1)])
    yield "blue on smin corner", make_instance(
        [(0, 0), (2, 2)], [(2, 2), (1, -1), (3, 1), (-1, 1), (1, 5)])
    yield "unbounded one side", make_instance(
        [(0, 0), (1, 1)], [(0, 2), (0, -2), (2, 0)])
    yield "unbounded two sides", make_instance(
        [(0, 0), (1, 1)], [(0, 2), (0, -2)])
    yield "unbounded three sides", make_instance(
        [(0, 0), (1, 1)], [(0, 2)])
    yield "unbounded four sides", make_instance([(0, 0), (1, 1)], [])
    yield "duplicate blues in annulus", make_instance(
        [(0, 0), (2, 2)], [(1, 3), (1, 3), (1, -1), (3, 1), (-1, 1)])
    yield "duplicate blues inside", make_instance(
        [(0, 0), (2, 2)], [(1, 1), (1, 1), (1, 3), (1, -1), (3, 1), (-1, 1)])
    yield "blue coincident with red", make_instance(
        [(0, 0), (2, 2)], [(0, 0), (1, 3), (1, -1), (3, 1), (-1, 1)])
    yield "all points identical", make_instance(
        [(1, 1), (1, 1)], [(1, 1), (1, 1)])
    yield "blues on every wall line", make_instance(
        [(0, 0)], [(0, 1), (1, 0), (0, -1), (-1, 0),
                   (1, 1), (-1, 1), (1, -1), (-1, -1)])


def test_criterion_8_degenerate_suite():
    """Degenerate inputs: no crashes, oracle agreement on bounded cases."""
    bad = []
    count = 0
    for name, inst in _degenerate_suite():
        count += 1
        try:
            sol = solve_one(inst)
            fast = solve_fast(inst)
            ref = oracle_best(inst)
        except Exception as exc:
            bad.append("%s: raised %r" % (name, exc))
            continue
        if sol.status != ref.status or fast.status != ref.status:
            bad.append("%s: status mismatch" % name)
            continue
        if sol.status == "bounded":
            report = check_candidate(sol.best.rect, inst)
            if not (sol.area == ref.area == fast.area and report["feasible"]
                    and report["maximal"]
                    and report["open_blue"] == sol.forced_blue):
                bad.append("%s: oracle disagreement" % name)
        else:
            if set(sol.unbounded_directions) != set(ref.unbounded_directions):
                bad.append("%s: directions mismatch" % name)
    ok = not bad
    line = _verdict(8, ok, "%d degenerate cases" % count if ok else "; ".join(bad))
    assert ok, line
