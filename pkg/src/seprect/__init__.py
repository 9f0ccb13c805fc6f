"""seprect: largest axis-aligned rectangle containing all red points and as
few blue points as possible, exactly, with enumeration of all optima."""

from .geometry import (
    AxisRect,
    Instance,
    Point,
    as_exact,
    contains_closed,
    make_instance,
    make_point,
    make_rect,
    rect_area,
    rect_contains_rect,
    strictly_inside,
)
from .bounding import Frame, Wall, build_frame, compute_smin, compute_walls, prune
from .staircase import (
    Staircase,
    StaircaseQueries,
    StaircaseSet,
    Support,
    build_staircase,
    build_staircases,
    precompute_pointers,
)
from .matrix import StaircaseMatrix, smawk, verify_total_inverse_monotone
from .solver import (
    Candidate,
    Solution,
    Supports,
    UnboundedError,
    build_case3_windows,
    enumerate_cases_1_2,
    solve_all,
    solve_from_frame,
    solve_one,
)
from .oracle import (
    OracleResult,
    check_candidate,
    count_open_interior,
    is_feasible,
    is_maximal,
    oracle_all,
    oracle_best,
)
from .generators import (
    extract_fap_from_solution,
    fap_by_sorting,
    gen_fap,
    gen_omega_m,
    gen_random,
)
from .io import ParseError, emit_solution, instance_to_csv, parse_points
from .fastpath import solve, solve_fast
from .bench import run_benchmark

__version__ = "0.1.0"

__all__ = [
    "AxisRect", "Instance", "Point", "as_exact", "contains_closed",
    "make_instance", "make_point", "make_rect", "rect_area",
    "rect_contains_rect", "strictly_inside",
    "Frame", "Wall", "build_frame", "compute_smin", "compute_walls", "prune",
    "Staircase", "StaircaseQueries", "StaircaseSet", "Support",
    "build_staircase", "build_staircases", "precompute_pointers",
    "StaircaseMatrix", "smawk", "verify_total_inverse_monotone",
    "Candidate", "Solution", "Supports", "UnboundedError",
    "build_case3_windows", "enumerate_cases_1_2", "solve_all",
    "solve_from_frame", "solve_one",
    "OracleResult", "check_candidate", "count_open_interior", "is_feasible",
    "is_maximal", "oracle_all", "oracle_best",
    "extract_fap_from_solution", "fap_by_sorting", "gen_fap", "gen_omega_m",
    "gen_random",
    "ParseError", "emit_solution", "instance_to_csv", "parse_points",
    "solve", "solve_fast",
    "run_benchmark",
    "__version__",
]
