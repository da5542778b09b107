"""Deterministic SVG drawings of planar configurations.

Two figure kinds:

``theorem``
    unit circle, the polygon (one ``<path>``), n sub-polygon circles of
    radius |lambda| about the sub-points, the circle of radius |lambda| about
    P_lambda, the Euler line, the n lines A_i -> P_{lambda,i}, and labeled
    markers for the vertices, O, T and P.
``eulerpoint``
    unit circle, the quadrilateral, the four nine-point circles of the
    sub-triangles and the labeled Euler point.

Circles are the only ``<circle>`` elements (markers are ``<rect>``), so the
element counts are fixed: n + 2 circles for ``theorem`` and 5 for
``eulerpoint``. Coordinates are written with six decimals and elements are
emitted in a fixed order, making output byte-for-byte reproducible.
"""

import enum
import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape, quoteattr

from .errors import GeometryError
from .plambda import (
    DegenerateLine,
    euler_line,
    euler_point_quadrilateral,
    p_lambda,
    sub_plambda_family,
    sub_triangle_nine_point_circles,
)


class FigureKind(enum.Enum):
    THEOREM = "theorem"
    EULER_POINT = "eulerpoint"


DEFAULT_PALETTE = {
    "background": "#ffffff",
    "stroke": "#000000",
    "unit_circle": "#000000",
    "polygon": "#000000",
    "euler_line": "#1f4e9c",
    "concurrence": "#555555",
    "sub_circle": ("#2e8b57", "#d62728", "#ff7f0e", "#1f2a44", "#e6c619"),
    "main_circle": "#000000",
    "point": "#000000",
    "center": "#8a2be2",
    "homothety_center": "#0000ff",
}


@dataclass(frozen=True)
class FigureSpec:
    kind: FigureKind
    config: object
    lam: object = None
    width: int = 480
    height: int = 480
    scale: object = None  # pixels per unit; None fits the drawing to the canvas
    palette: dict = field(default_factory=lambda: dict(DEFAULT_PALETTE))

    def __post_init__(self):
        kind = FigureKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if self.config.d != 2:
            raise GeometryError(f"figures need a planar configuration, got d = {self.config.d}")
        if kind is FigureKind.EULER_POINT:
            if self.config.n != 4:
                raise GeometryError("the Euler-point figure needs exactly four points")
            if self.lam is not None and float(self.lam) != 0.5:
                raise GeometryError("the Euler-point figure is drawn at lambda = 1/2 only")
        elif self.lam is None:
            raise GeometryError("the theorem figure needs a lambda")
        elif self.config.n < 2:
            raise GeometryError("the theorem figure needs at least two points")
        if self.width <= 0 or self.height <= 0:
            raise GeometryError("canvas dimensions must be positive")


def fmt(x):
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Canvas:
    def __init__(self, spec, extent):
        self.w, self.h = spec.width, spec.height
        self.cx, self.cy = spec.width / 2, spec.height / 2
        if spec.scale is None:
            self.s = 0.45 * min(self.w, self.h) / extent
        else:
            self.s = float(spec.scale)
        self.parts = []

    def xy(self, p):
        return self.cx + self.s * float(p[0]), self.cy - self.s * float(p[1])

    def circle(self, center, radius, cls, stroke, fill="none", opacity=None):
        x, y = self.xy(center)
        extra = f' fill-opacity="{opacity}"' if opacity is not None else ""
        self.parts.append(
            f'<circle class="{cls}" cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(self.s * radius)}" '
            f'stroke="{stroke}" fill="{fill}"{extra} stroke-width="1"/>')

    def line(self, p, q, cls, stroke, dashed=False):
        (x1, y1), (x2, y2) = self.xy(p), self.xy(q)
        dash = ' stroke-dasharray="4 3"' if dashed else ""
        self.parts.append(
            f'<line class="{cls}" x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
            f'stroke="{stroke}" stroke-width="1"{dash}/>')

    def polygon(self, points, cls, stroke):
        coords = [self.xy(p) for p in points]
        d = " ".join(f"{'M' if i == 0 else 'L'} {fmt(x)} {fmt(y)}" for i, (x, y) in enumerate(coords))
        self.parts.append(f'<path class="{cls}" d="{d} Z" stroke="{stroke}" fill="none" stroke-width="1"/>')

    def marker(self, p, label, color, dx=6, dy=-6):
        x, y = self.xy(p)
        self.parts.append(
            f'<rect class="marker" x="{fmt(x - 2)}" y="{fmt(y - 2)}" width="4.000000" '
            f'height="4.000000" fill="{color}"/>')
        self.parts.append(
            f'<text x="{fmt(x + dx)}" y="{fmt(y + dy)}" font-family="sans-serif" '
            f'font-size="12" fill="{color}">{escape(label)}</text>')

    def document(self, title, background):
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{self.w}" '
            f'height="{self.h}" viewBox="0 0 {self.w} {self.h}">\n'
            f'<title>{escape(title)}</title>\n'
            f'<rect class="background" x="0" y="0" width="{self.w}" height="{self.h}" '
            f'fill={quoteattr(background)}/>\n'
        )
        return head + "\n".join(self.parts) + "\n</svg>\n"


def _norm(p):
    return math.hypot(*(float(c) for c in p))


def _render_theorem(spec):
    cfg, pal = spec.config, spec.palette
    lam = float(spec.lam)
    fcfg = cfg.to_float() if cfg.exact else cfg
    p = p_lambda(fcfg, lam)
    family = sub_plambda_family(fcfg, lam)
    r = abs(lam)
    t = None if lam == -1 else fcfg.vertex_sum() * (lam / (lam + 1))

    extent = max([1.0, _norm(p) + r] + [_norm(q) + r for q in family]
                 + ([_norm(t)] if t is not None else []))
    cv = _Canvas(spec, extent * 1.05)
    origin = fcfg.origin()

    cv.circle(origin, 1.0, "unit-circle", pal["unit_circle"])
    ell = euler_line(fcfg)
    if not isinstance(ell, DegenerateLine):
        u = ell.direction * (1.0 / _norm(ell.direction))
        reach = extent * 1.05
        cv.line(u * -reach, u * reach, "euler-line", pal["euler_line"])
    cv.polygon(fcfg.points, "polygon", pal["polygon"])
    colors = pal["sub_circle"]
    for i, q in enumerate(family):
        cv.circle(q, r, "sub-circle", pal["stroke"], fill=colors[i % len(colors)], opacity="0.35")
    cv.circle(p, r, "main-circle", pal["main_circle"])
    for a, q in zip(fcfg.points, family):
        cv.line(a, q, "concurrence", pal["concurrence"], dashed=True)

    for i, a in enumerate(fcfg.points, 1):
        cv.marker(a, f"A{i}", pal["point"])
    for i, q in enumerate(family, 1):
        cv.marker(q, f"P{i}", pal["center"], dy=12)
    cv.marker(origin, "O", pal["point"], dx=-12)
    if t is not None:
        cv.marker(t, "T", pal["homothety_center"], dy=14)
    cv.marker(p, "P", pal["center"])
    return cv.document(f"P_lambda figure, n = {cfg.n}, lambda = {spec.lam}", pal["background"])


def _render_euler_point(spec):
    cfg, pal = spec.config, spec.palette
    fcfg = cfg.to_float() if cfg.exact else cfg
    e = euler_point_quadrilateral(fcfg)
    circles = sub_triangle_nine_point_circles(fcfg)
    extent = max([1.0] + [_norm(c.center) + 0.5 for c in circles])
    cv = _Canvas(spec, extent * 1.05)
    origin = fcfg.origin()

    cv.circle(origin, 1.0, "unit-circle", pal["unit_circle"])
    cv.polygon(fcfg.points, "polygon", pal["polygon"])
    colors = pal["sub_circle"]
    for i, c in enumerate(circles):
        cv.circle(c.center, 0.5, "nine-point-circle", pal["stroke"],
                  fill=colors[i % len(colors)], opacity="0.35")
    for i, a in enumerate(fcfg.points, 1):
        cv.marker(a, f"A{i}", pal["point"])
    cv.marker(origin, "O", pal["point"], dx=-12)
    cv.marker(e, "E", pal["center"])
    return cv.document("Euler point of a cyclic quadrilateral", pal["background"])


def render(spec):
    """SVG 1.1 document text for ``spec``."""
    if spec.kind is FigureKind.THEOREM:
        return _render_theorem(spec)
    return _render_euler_point(spec)
