"""P_lambda points and Euler lines of point sets on the unit hypersphere.

For points a_1..a_n on the unit sphere centred at the origin, the P_lambda
point is ``lambda * sum(a_j)``. lambda = 0 gives the circumcenter, 1/n the
centroid, 1 the (quasi-)orthocenter and 1/2 the generalized nine-point
center. Dropping vertex i gives the sub-polygon point
``lambda * (sum(a_j) - a_i)``; the homothety with center
``lambda / (lambda + 1) * sum(a_j)`` and ratio ``-lambda`` carries every
vertex to its sub-polygon point.
"""

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import (
    DegenerateError,
    DimensionMismatchError,
    GeometryError,
    HypothesisError,
    NormalizationError,
    NotOnSphereError,
    TranslationCase,
)
from .kernel import (
    Homothety,
    Line,
    Point,
    Similarity,
    Sphere,
    distance_sq,
    exact_sqrt,
    get_tolerance,
    homothety_apply,
    is_zero_vector,
    line_check,
    line_contains,
    points_equal,
    scalar_eq,
    sphere_contains,
    to_scalar,
    vector_sum,
)


@dataclass(frozen=True)
class InscribedConfig:
    """Ordered points A_1..A_n on the unit sphere of R^d (d >= 2, n >= 1).

    Coincident points are allowed. Pass ``validate=False`` to skip the
    unit-norm check (used to build deliberately broken inputs).
    """

    points: tuple
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        pts = tuple(p if isinstance(p, Point) else Point(p) for p in self.points)
        if not pts:
            raise GeometryError("a configuration needs at least one point")
        d = pts[0].dim
        if d < 2:
            raise DimensionMismatchError(f"dimension must be at least 2, got {d}")
        exact = pts[0].exact
        if any(p.dim != d for p in pts):
            raise DimensionMismatchError("all points must share one dimension")
        if any(p.exact != exact for p in pts):
            # promote everything to floats rather than mixing regimes
            pts = tuple(p.to_float() for p in pts)
        if self.validate:
            one = Fraction(1) if pts[0].exact else 1.0
            for i, p in enumerate(pts, 1):
                if not scalar_eq(p.norm_sq(), one):
                    raise NotOnSphereError(
                        f"point A{i} = {p!r} has squared norm {p.norm_sq()}, expected 1")
        object.__setattr__(self, "points", pts)

    @property
    def d(self):
        return self.points[0].dim

    @property
    def n(self):
        return len(self.points)

    @property
    def exact(self):
        return self.points[0].exact

    def vertex_sum(self):
        return vector_sum(self.points)

    def scalar(self, x):
        """``x`` coerced to this configuration's regime."""
        return to_scalar(x, self.exact)

    def origin(self):
        return Point.origin(self.d, self.exact)

    def to_float(self):
        return InscribedConfig(tuple(p.to_float() for p in self.points), validate=False)


def _lam(cfg, lam):
    if isinstance(lam, float) and not math.isfinite(lam):
        raise GeometryError("lambda must be finite; P_infinity is a direction, not a point")
    return cfg.scalar(lam)


def p_lambda(cfg, lam):
    """The P_lambda point ``lam * sum(a_j)``."""
    return cfg.vertex_sum() * _lam(cfg, lam)


def centroid(cfg):
    return p_lambda(cfg, Fraction(1, cfg.n) if cfg.exact else 1.0 / cfg.n)


@dataclass(frozen=True)
class DegenerateLine:
    """The Euler 'line' of a configuration with zero vertex sum: just {point}."""

    point: Point


def euler_line(cfg):
    """Line through the origin along the vertex sum, or DegenerateLine at O."""
    s = cfg.vertex_sum()
    if is_zero_vector(s):
        return DegenerateLine(cfg.origin())
    return Line(cfg.origin(), s)


def sub_plambda_family(cfg, lam):
    """P_lambda points of the n sub-polygons obtained by dropping one vertex."""
    if cfg.n < 2:
        raise GeometryError("sub-polygon family needs n >= 2")
    lam = _lam(cfg, lam)
    total = cfg.vertex_sum() * lam
    return [total - a * lam for a in cfg.points]


def homothety_center(cfg, lam):
    """Center ``lam / (lam + 1) * sum(a_j)`` of the vertex-to-sub-point homothety.

    Raises TranslationCase for lam = -1, where the map is x -> x - sum(a_j).
    """
    lam = _lam(cfg, lam)
    if lam == -1:
        raise TranslationCase(-cfg.vertex_sum())
    return cfg.vertex_sum() * (lam / (lam + 1))


def vertex_homothety(cfg, lam):
    """The homothety with ratio -lam that maps A_i onto the i-th sub-polygon point."""
    lam = _lam(cfg, lam)
    return Homothety(homothety_center(cfg, lam), -lam, degenerate=(lam == 0))


class Degeneracy(enum.Enum):
    LAMBDA_MINUS_ONE = "LambdaMinusOne"
    LAMBDA_ZERO = "LambdaZero"
    ZERO_VERTEX_SUM = "ZeroVertexSum"
    COINCIDENT_LINE_POINTS = "CoincidentLinePoints"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TheoremReport:
    part1_ok: bool
    part2_ok: bool
    part3_ok: bool
    part4_ok: bool
    concurrence_point: object = None
    max_residual: object = 0
    degeneracy_flags: frozenset = frozenset()
    skipped_lines: tuple = ()

    @property
    def all_ok(self):
        return self.part1_ok and self.part2_ok and self.part3_ok and self.part4_ok

    @property
    def parts(self):
        return (self.part1_ok, self.part2_ok, self.part3_ok, self.part4_ok)


def verify_theorem(cfg, lam):
    """Check the four sub-polygon statements for ``cfg`` at ``lam``.

    1. every sub-polygon point is at squared distance lam^2 from P_lambda;
    2. P_lambda lies on each sphere of squared radius lam^2 about a sub-point;
    3. the homothety about T with ratio -lam maps A_i to the i-th sub-point;
    4. the lines A_i P_{lam,i} pass through T, and T is on the Euler line.

    At lam = -1 part 3 checks the translation ``A_i -> A_i - sum(a_j)``
    instead, and part 4 checks that every line A_i P_{-1,i} is parallel to
    the Euler line (they meet at its point at infinity). Lines whose two
    defining points coincide are skipped and flagged.
    """
    if cfg.n <= 2:
        raise HypothesisError(f"need more than two points, got n = {cfg.n}")
    lam = _lam(cfg, lam)
    flags = set()
    residuals = [abs(lam * 0)]

    total = cfg.vertex_sum()
    p = total * lam
    family = [p - a * lam for a in cfg.points]
    lam_sq = lam * lam

    if is_zero_vector(total):
        flags.add(Degeneracy.ZERO_VERTEX_SUM)
    if lam == 0:
        flags.add(Degeneracy.LAMBDA_ZERO)

    part1 = True
    part2 = True
    for q in family:
        dist = distance_sq(p, q)
        residuals.append(abs(dist - lam_sq))
        part1 = part1 and scalar_eq(dist, lam_sq)
        part2 = part2 and sphere_contains(Sphere(q, lam_sq), p)

    if lam == -1:
        flags.add(Degeneracy.LAMBDA_MINUS_ONE)
        shift = -total
        part3 = True
        for a, q in zip(cfg.points, family):
            residuals.extend(abs(c) for c in (q - a) - shift)
            part3 = part3 and points_equal(q - a, shift)
        t = None
        axis = None if is_zero_vector(total) else Line(cfg.origin(), total)
    else:
        t = total * (lam / (lam + 1))
        h = Homothety(t, -lam, degenerate=(lam == 0))
        part3 = True
        for a, q in zip(cfg.points, family):
            image = homothety_apply(h, a)
            residuals.extend(abs(c) for c in image - q)
            part3 = part3 and points_equal(image, q)

    skipped = []
    part4 = True
    for i, (a, q) in enumerate(zip(cfg.points, family)):
        if points_equal(a, q):
            flags.add(Degeneracy.COINCIDENT_LINE_POINTS)
            skipped.append(i)
            continue
        line = Line.through(a, q)
        if t is None:
            # translation case: parallel to the Euler line, or no common point
            if axis is None:
                part4 = False
                continue
            ok, res = line_check(Line(cfg.origin(), line.direction), axis.direction)
        else:
            ok, res = line_check(line, t)
        residuals.append(res)
        part4 = part4 and ok

    if t is not None:
        ell = euler_line(cfg)
        if isinstance(ell, DegenerateLine):
            part4 = part4 and points_equal(t, ell.point)
        else:
            ok, res = line_check(ell, t)
            residuals.append(res)
            part4 = part4 and ok

    return TheoremReport(
        part1_ok=part1,
        part2_ok=part2,
        part3_ok=part3,
        part4_ok=part4,
        concurrence_point=t,
        max_residual=max(residuals),
        degeneracy_flags=frozenset(flags),
        skipped_lines=tuple(skipped),
    )


# ------------------------------------------------ cyclic quadrilaterals

def _require_quad(cfg):
    if cfg.d != 2 or cfg.n != 4:
        raise GeometryError(f"expected a planar quadrilateral, got d = {cfg.d}, n = {cfg.n}")


def nine_point_circle(a, b, c):
    """Nine-point circle of a triangle inscribed in the unit circle."""
    half = Fraction(1, 2) if a.exact else 0.5
    return Sphere((a + b + c) * half, half * half)


def euler_point_quadrilateral(cfg):
    """Euler (Poncelet) point of a cyclic quadrilateral: P_{1/2} of the four vertices."""
    _require_quad(cfg)
    return p_lambda(cfg, Fraction(1, 2))


def sub_triangle_nine_point_circles(cfg):
    """Nine-point circles of the triangles left after dropping each vertex in turn."""
    _require_quad(cfg)
    return [nine_point_circle(*(p for j, p in enumerate(cfg.points) if j != i))
            for i in range(4)]


def _intersect_2d(l1, l2):
    """Intersection of two planar lines, or None when parallel."""
    (x1, y1), (dx1, dy1) = l1.base, l1.direction
    (x2, y2), (dx2, dy2) = l2.base, l2.direction
    if scalar_eq(dx1 * dy2, dx2 * dy1):
        return None
    det = dx2 * dy1 - dx1 * dy2
    rx, ry = x2 - x1, y2 - y1
    s = (dx2 * ry - rx * dy2) / det
    return l1.at(s)


def orthocenter_concurrence_quad(cfg):
    """Common point of the lines A_i H_i, H_i the orthocenter of the other three.

    Intersects the best-conditioned pair of non-parallel lines. When all
    usable lines are parallel (a doubled-up chord) the intersection is not
    determined by them; the homothety center P_{1/2} is returned instead,
    after checking that it lies on every line.
    """
    _require_quad(cfg)
    total = cfg.vertex_sum()
    lines = []
    for a in cfg.points:
        h = total - a
        if not points_equal(a, h):
            lines.append(Line.through(a, h))
    if not lines:
        raise DegenerateError("every line A_i H_i has coincident endpoints")

    best = None
    for l1, l2 in combinations(lines, 2):
        (dx1, dy1), (dx2, dy2) = l1.direction, l2.direction
        det = abs(dx1 * dy2 - dx2 * dy1)
        if best is None or det > best[0]:
            best = (det, l1, l2)
    point = _intersect_2d(best[1], best[2]) if best is not None else None
    if point is None:
        point = homothety_center(cfg, 1)
    for line in lines:
        if not line_contains(line, point):
            raise DegenerateError("lines A_i H_i do not concur (configuration off the circle?)")
    return point


# ------------------------------------------------ embeddings and generators

def shadow_embed(cfg):
    """Lift a configuration in R^d onto the equator of the unit sphere in R^(d+1)."""
    return InscribedConfig(tuple(p.embed() for p in cfg.points), validate=cfg.validate)


def rational_sphere_point(u):
    """Inverse stereographic projection of rational u in R^(d-1) onto the unit sphere.

    Returns ``(2u, |u|^2 - 1) / (|u|^2 + 1)``, whose squared norm is exactly 1.
    """
    u = [to_scalar(x, True) for x in u]
    s = sum((x * x for x in u), Fraction(0))
    denom = s + 1
    return Point._raw(tuple(2 * x / denom for x in u) + ((s - 1) / denom,))


def random_config(d, n, seed, exact=False, bound=9):
    """Seeded random configuration of ``n`` points on the unit sphere in R^d.

    Approximate: normalized standard-normal vectors. Exact: random rationals
    p/q with |p| <= bound, 1 <= q <= bound pushed through
    :func:`rational_sphere_point`. ``seed`` may be an int or a tuple of ints.
    """
    if d < 2 or n < 1:
        raise GeometryError(f"need d >= 2 and n >= 1, got d = {d}, n = {n}")
    rng = np.random.default_rng(seed)
    if exact:
        nums = rng.integers(-bound, bound + 1, size=(n, d - 1))
        dens = rng.integers(1, bound + 1, size=(n, d - 1))
        pts = tuple(rational_sphere_point([Fraction(int(p), int(q)) for p, q in zip(row_n, row_d)])
                    for row_n, row_d in zip(nums, dens))
        return InscribedConfig(pts)
    pts = []
    for _ in range(n):
        v = rng.standard_normal(d)
        norm = float(np.linalg.norm(v))
        while norm < 1e-12:
            v = rng.standard_normal(d)
            norm = float(np.linalg.norm(v))
        pts.append(Point._raw(float(x) for x in v / norm))
    return InscribedConfig(tuple(pts))


def normalize_to_unit_sphere(points, center, radius):
    """Map points on the sphere (center, radius) onto the unit sphere at O.

    Returns the configuration and the :class:`Similarity` used, so results can
    be carried back with ``similarity.inverse``.
    """
    points = [p if isinstance(p, Point) else Point(p) for p in points]
    center = center if isinstance(center, Point) else Point(center)
    exact = all(p.exact for p in points) and center.exact
    radius = to_scalar(radius, exact)
    if not radius > 0:
        raise GeometryError(f"sphere radius must be positive, got {radius}")
    if not exact:
        points = [p.to_float() for p in points]
        center = center.to_float()
    sim = Similarity(center, radius)
    return InscribedConfig(tuple(sim.forward(p) for p in points)), sim


def circumcenter_2d(a, b, c):
    """Circumcenter of a planar triangle (rational in the exact regime)."""
    ax, ay = a
    bx, by = b
    cx, cy = c
    terms = (ax * (by - cy), bx * (cy - ay), cx * (ay - by))
    d = 2 * sum(terms)
    if d == 0 or (not a.exact and abs(d) <= get_tolerance() * max(abs(t) for t in terms)):
        raise DegenerateError("collinear vertices have no circumcircle")
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return Point._raw((ux, uy))


def circumsphere_radius(center, point):
    """Radius |point - center|; exact when rational, otherwise NormalizationError in exact mode."""
    r_sq = distance_sq(point, center)
    if center.exact:
        r = exact_sqrt(r_sq)
        if r is None:
            raise NormalizationError(
                f"circumradius sqrt({r_sq}) is irrational; use the approximate regime")
        return r
    return math.sqrt(r_sq)
