"""Exact parsing and emission: CSV/JSON instances, JSON/TSV solutions.

All coordinates stay exact end to end. Rational literals use "p/q", decimal
literals are converted exactly (0.25 -> 1/4), and emitted coordinates are
rational strings with a convenience float alongside where a human might
want one.
"""

import json
from fractions import Fraction

from .geometry import Instance, make_instance, rect_area


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else "line %d: %s" % (line, message))


def _coord(token, line=None):
    t = str(token).strip().replace("−", "-")
    if not t:
        raise ParseError("empty coordinate", line)
    try:
        f = Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise ParseError("bad coordinate %r" % (token,), line) from None
    return int(f) if f.denominator == 1 else f


def _parse_json(text: str) -> Instance:
    try:
        obj = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as e:
        raise ParseError("invalid JSON: %s" % e.msg, e.lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("JSON input must be an object with 'reds' and 'blues'")

    def points(name):
        seq = obj.get(name, [])
        if not isinstance(seq, list):
            raise ParseError("'%s' must be an array of [x, y] pairs" % name)
        out = []
        for item in seq:
            if not isinstance(item, list) or len(item) != 2:
                raise ParseError("'%s' entries must be [x, y] pairs" % name)
            out.append(tuple(_coord(v) if isinstance(v, str) else v
                             for v in item))
        return out

    reds = points("reds")
    if not reds:
        raise ParseError("no red points")
    return make_instance(reds, points("blues"))


def parse_points(text: str) -> Instance:
    """CSV lines "color,x,y" with color R|B (header optional), or a JSON
    object {"reds": [[x,y],...], "blues": [...]}. Exact throughout."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    reds, blues = [], []
    first_data = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.lstrip("﻿").strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if first_data:
            first_data = False
            if parts[0].lower() in ("color", "colour"):
                continue
        if len(parts) != 3:
            raise ParseError("expected 3 comma-separated fields", lineno)
        color = parts[0].upper()
        if color not in ("R", "B"):
            raise ParseError("unknown color %r" % (parts[0],), lineno)
        pt = (_coord(parts[1], lineno), _coord(parts[2], lineno))
        (reds if color == "R" else blues).append(pt)
    if not reds:
        raise ParseError("no red points")
    return make_instance(reds, blues)


def instance_to_csv(instance: Instance) -> str:
    """Canonical dump; parse_points round-trips it exactly."""
    lines = ["color,x,y"]
    lines += ["R,%s,%s" % (p.x, p.y) for p in instance.reds]
    lines += ["B,%s,%s" % (p.x, p.y) for p in instance.blues]
    return "\n".join(lines) + "\n"


def _rect_payload(rect):
    return {
        "rect": {"xmin": str(rect.xmin), "xmax": str(rect.xmax),
                 "ymin": str(rect.ymin), "ymax": str(rect.ymax)},
        "rect_float": {"xmin": float(rect.xmin), "xmax": float(rect.xmax),
                       "ymin": float(rect.ymin), "ymax": float(rect.ymax)},
        "area": str(rect_area(rect)),
        "area_float": float(rect_area(rect)),
    }


def _support_payload(s):
    return {
        "kind": s.kind,
        "side": s.side,
        "point": None if s.point is None else [str(s.point.x), str(s.point.y)],
    }


def solution_to_dict(sol, all_rects=None) -> dict:
    if sol.status == "unbounded":
        payload = {
            "status": "unbounded",
            "directions": list(sol.unbounded_directions),
            "forced_blue": sol.forced_blue,
        }
        return payload
    payload = {"status": "bounded"}
    payload.update(_rect_payload(sol.best.rect))
    payload["forced_blue"] = sol.forced_blue
    payload["case"] = sol.best.case
    if sol.best.diagonal is not None:
        payload["diagonal"] = sol.best.diagonal
    payload["supports"] = {side: _support_payload(getattr(sol.best.supports, side))
                           for side in ("top", "right", "bottom", "left")}
    if sol.statistics is not None:
        payload["statistics"] = sol.statistics
    if all_rects is not None:
        payload["optima_count"] = len(all_rects)
        payload["optima"] = [_rect_payload(r) for r in all_rects]
    return payload


def solution_to_json(sol, all_rects=None) -> str:
    return json.dumps(solution_to_dict(sol, all_rects), indent=2) + "\n"


def solution_to_tsv(sol, all_rects=None) -> str:
    if sol.status == "unbounded":
        return "unbounded\t%s\t%d\n" % (";".join(sol.unbounded_directions),
                                        sol.forced_blue)
    if all_rects is not None:
        lines = ["bounded\t%s\t%s\t%s\t%s\t%s\t%d" %
                 (r.xmin, r.xmax, r.ymin, r.ymax, rect_area(r), sol.forced_blue)
                 for r in all_rects]
        return "\n".join(lines) + "\n"
    r = sol.best.rect
    return "bounded\t%s\t%s\t%s\t%s\t%s\t%d\t%d\n" % (
        r.xmin, r.xmax, r.ymin, r.ymax, sol.area, sol.forced_blue, sol.best.case)


def emit_solution(sol, format: str = "json", all_rects=None) -> str:
    if format == "json":
        return solution_to_json(sol, all_rects)
    if format == "tsv":
        return solution_to_tsv(sol, all_rects)
    if format == "svg":
        from .render import solution_to_svg
        return solution_to_svg(sol, all_rects)
    raise ValueError("unknown format %r" % (format,))
