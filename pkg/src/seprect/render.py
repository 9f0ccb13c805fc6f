"""SVG rendering of a solved instance.

Hand-rolled markup, no drawing library. One circle per input point (red
filled, blue hollow) and at most three rectangles: the red bounding box,
the outer feasible box, and the winning rectangle. Unbounded solutions
draw the points and the red box only.
"""

from .geometry import rect_area

_W, _H, _PAD = 640.0, 480.0, 36.0


def _fmt(v: float) -> str:
    s = "%.2f" % v
    return s.rstrip("0").rstrip(".") if "." in s else s


class _Transform:
    def __init__(self, xs, ys):
        minx, maxx = min(xs), max(xs)
        miny, maxy = min(ys), max(ys)
        if minx == maxx:
            minx, maxx = minx - 1.0, maxx + 1.0
        if miny == maxy:
            miny, maxy = miny - 1.0, maxy + 1.0
        s = min((_W - 2 * _PAD) / (maxx - minx), (_H - 2 * _PAD) / (maxy - miny))
        self.minx, self.maxy, self.s = minx, maxy, s
        self.ox = _PAD + ((_W - 2 * _PAD) - s * (maxx - minx)) / 2
        self.oy = _PAD + ((_H - 2 * _PAD) - s * (maxy - miny)) / 2

    def x(self, v) -> float:
        return self.ox + (float(v) - self.minx) * self.s

    def y(self, v) -> float:
        # svg y axis points down
        return self.oy + (self.maxy - float(v)) * self.s


def _rect_el(t, r, style, role):
    return ('<rect class="%s" x="%s" y="%s" width="%s" height="%s" %s/>' %
            (role, _fmt(t.x(r.xmin)), _fmt(t.y(r.ymax)),
             _fmt(t.s * float(r.xmax - r.xmin)),
             _fmt(t.s * float(r.ymax - r.ymin)), style))


def solution_to_svg(sol, all_rects=None) -> str:
    """One circle per point; red box, outer box and winner as rectangles.
    With all_rects, every optimal rectangle is drawn instead of the winner.
    """
    if sol.instance is None:
        raise ValueError("solution carries no input points to draw")
    inst = sol.instance
    rects = [sol.frame.smin]
    if sol.status == "bounded":
        rects.append(sol.frame.smax)
        rects += list(all_rects) if all_rects is not None else [sol.best.rect]
    pts = list(inst.reds) + list(inst.blues)
    xs = [float(p.x) for p in pts] + [float(v) for r in rects for v in (r.xmin, r.xmax)]
    ys = [float(p.y) for p in pts] + [float(v) for r in rects for v in (r.ymin, r.ymax)]
    t = _Transform(xs, ys)

    el = ['<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 %d %d" '
          'width="%d" height="%d" style="background:white">' % (_W, _H, _W, _H)]
    # boxes under the points so hollow markers stay visible
    el.append(_rect_el(t, sol.frame.smin, 'fill="#c0392b" fill-opacity="0.06" '
              'stroke="#c0392b" stroke-width="1" stroke-dasharray="3 3"',
              "red-box"))
    if sol.status == "bounded":
        el.append(_rect_el(t, sol.frame.smax, 'fill="none" stroke="#7f8c8d" '
                  'stroke-width="1" stroke-dasharray="6 3"', "outer-box"))
        for r in rects[2:]:
            el.append(_rect_el(t, r, 'fill="#1e8449" fill-opacity="0.10" '
                      'stroke="#1e8449" stroke-width="2"', "solution"))
    for p in inst.reds:
        el.append('<circle class="red-point" cx="%s" cy="%s" r="4" '
                  'fill="#c0392b"/>' % (_fmt(t.x(p.x)), _fmt(t.y(p.y))))
    for p in inst.blues:
        el.append('<circle class="blue-point" cx="%s" cy="%s" r="4" '
                  'fill="none" stroke="#2471a3" stroke-width="1.5"/>'
                  % (_fmt(t.x(p.x)), _fmt(t.y(p.y))))
    if sol.status == "bounded":
        el.append('<text x="%d" y="%d" font-family="sans-serif" font-size="12" '
                  'fill="#333">area %s, interior blue %d</text>'
                  % (int(_PAD), int(_H - 10),
                     float(rect_area(sol.best.rect)), sol.forced_blue))
    else:
        el.append('<text x="%d" y="%d" font-family="sans-serif" font-size="12" '
                  'fill="#333">unbounded: %s</text>'
                  % (int(_PAD), int(_H - 10), ", ".join(sol.unbounded_directions)))
    el.append('</svg>')
    return "\n".join(el) + "\n"
