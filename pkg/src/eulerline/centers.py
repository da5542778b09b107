"""Triangle centers with constant Shinagawa coefficients.

A center on the Euler line with constant coefficients (u, v) has
barycentrics ``u*S^2 + v*S_B*S_C`` (cyclically), where S is twice the area
and S_A = (b^2 + c^2 - a^2) / 2. For a triangle inscribed in the unit circle
about the origin such a center is the P_lambda point with
``lambda = (u + v) / (3u + v)``; 3u + v = 0 is the Euler infinity point.

Everything here consumes squared side lengths and the shoelace twice-area,
so rational vertices give rational results throughout.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateError,
    GeometryError,
    InvalidPairError,
    NormalizationError,
    PointAtInfinityError,
)
from .kernel import (
    Point,
    Similarity,
    distance_sq,
    format_scalar,
    get_tolerance,
    is_zero_vector,
    points_equal,
    scalar_eq,
    scalar_is_zero,
    to_scalar,
    vector_sum,
)
from .plambda import (
    InscribedConfig,
    circumcenter_2d,
    circumsphere_radius,
    p_lambda,
)


@dataclass(frozen=True)
class Triangle:
    A: Point
    B: Point
    C: Point

    def __post_init__(self):
        pts = [p if isinstance(p, Point) else Point(p) for p in (self.A, self.B, self.C)]
        if any(p.dim != 2 for p in pts):
            raise GeometryError("triangles are planar: every vertex needs two coordinates")
        if len({p.exact for p in pts}) > 1:
            pts = [p.to_float() for p in pts]
        for name, p in zip("ABC", pts):
            object.__setattr__(self, name, p)

    @property
    def exact(self):
        return self.A.exact

    @property
    def vertices(self):
        return (self.A, self.B, self.C)

    def side_sq(self):
        """Squared side lengths (a^2, b^2, c^2) opposite A, B, C."""
        return (distance_sq(self.B, self.C),
                distance_sq(self.C, self.A),
                distance_sq(self.A, self.B))

    def twice_area(self):
        """Unsigned shoelace twice-area."""
        (ax, ay), (bx, by), (cx, cy) = self.vertices
        return abs((bx - ax) * (cy - ay) - (cx - ax) * (by - ay))

    def centroid(self):
        return vector_sum(self.vertices) * (Fraction(1, 3) if self.exact else 1.0 / 3.0)


@dataclass(frozen=True)
class ConwaySymbols:
    S: object
    S_A: object
    S_B: object
    S_C: object
    degenerate: bool = False

    @property
    def S_sq(self):
        return self.S * self.S

    @property
    def exact(self):
        return isinstance(self.S, Fraction)


def conway_symbols(t):
    a2, b2, c2 = t.side_sq()
    S = t.twice_area()
    degenerate = S == 0 if t.exact else S <= get_tolerance() * max(1.0, a2, b2, c2)
    return ConwaySymbols(S=S, S_A=(b2 + c2 - a2) / 2, S_B=(c2 + a2 - b2) / 2,
                         S_C=(a2 + b2 - c2) / 2, degenerate=degenerate)


@dataclass(frozen=True)
class ShinagawaPair:
    """Constant Shinagawa coefficients (u, v), not both zero.

    Integers and fractions are kept exact; floats stay floats.
    """

    u: object
    v: object

    def __post_init__(self):
        exact = not (isinstance(self.u, float) or isinstance(self.v, float))
        u, v = to_scalar(self.u, exact), to_scalar(self.v, exact)
        if u == 0 and v == 0:
            raise InvalidPairError("Shinagawa pair (0, 0) is not allowed")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def __iter__(self):
        return iter((self.u, self.v))


def _pair(p):
    return p if isinstance(p, ShinagawaPair) else ShinagawaPair(*p)


@dataclass(frozen=True)
class ExtendedLambda:
    """A real lambda, or ``value=None`` for the Euler infinity point."""

    value: object = None

    @classmethod
    def infinity(cls):
        return cls(None)

    @property
    def is_infinite(self):
        return self.value is None

    def __str__(self):
        return "infinity" if self.value is None else format_scalar(self.value)


def tau(pair):
    """Lambda of the center with Shinagawa pair (u, v): (u + v) / (3u + v)."""
    u, v = _pair(pair)
    den = 3 * u + v
    if scalar_is_zero(den):
        return ExtendedLambda.infinity()
    return ExtendedLambda((u + v) / den)


def shinagawa_barycentrics(cs, pair):
    """Barycentric weights (w_A, w_B, w_C) of the center with pair (u, v)."""
    if cs.degenerate:
        raise DegenerateError("triangle is degenerate (S = 0)")
    u, v = (to_scalar(x, cs.exact) for x in _pair(pair))
    s2 = cs.S_sq
    return (u * s2 + v * cs.S_B * cs.S_C,
            u * s2 + v * cs.S_C * cs.S_A,
            u * s2 + v * cs.S_A * cs.S_B)


def barycentric_to_cartesian(t, w):
    wa, wb, wc = (to_scalar(x, t.exact) for x in w)
    total = wa + wb + wc
    if total == 0 or (not t.exact and abs(total) <= get_tolerance() * max(abs(wa), abs(wb), abs(wc))):
        raise PointAtInfinityError(f"barycentric weights {w} sum to zero")
    return (t.A * wa + t.B * wb + t.C * wc) * (1 / total)


def barycentrics_equal(w1, w2):
    """Projective equality: the triples agree up to a common nonzero factor."""
    for i in range(3):
        for j in range(i + 1, 3):
            if not scalar_eq(w1[i] * w2[j], w1[j] * w2[i]):
                return False
    return not all(scalar_is_zero(x) for x in w1) and not all(scalar_is_zero(x) for x in w2)


def _require_unit_circumcircle(t):
    one = Fraction(1) if t.exact else 1.0
    if not all(scalar_eq(p.norm_sq(), one) for p in t.vertices):
        raise NormalizationError("triangle must be inscribed in the unit circle about the origin")


def verify_lemma_gx(t, pair):
    """Check X - G = (2v / (3u + v)) * (G - O) for a unit-circle triangle."""
    _require_unit_circumcircle(t)
    u, v = (to_scalar(x, t.exact) for x in _pair(pair))
    den = 3 * u + v
    if scalar_is_zero(den):
        raise PointAtInfinityError("3u + v = 0: the center is the Euler infinity point")
    x = barycentric_to_cartesian(t, shinagawa_barycentrics(conway_symbols(t), pair))
    g = t.centroid()
    return points_equal(x - g, g * (2 * v / den))


@dataclass(frozen=True)
class Direction:
    """A point at infinity, given by a direction vector."""

    vector: Point


def center_position_via_tau(t, pair):
    """Position of the center on a unit-circle triangle, as ``tau(pair) * (A + B + C)``.

    Returns a :class:`Direction` (the Euler line's) for the infinity point.
    """
    _require_unit_circumcircle(t)
    lam = tau(pair)
    cfg = InscribedConfig(t.vertices, validate=False)
    if lam.is_infinite:
        s = cfg.vertex_sum()
        if is_zero_vector(s):
            raise DegenerateError("equilateral triangle: the Euler line has no direction")
        return Direction(s)
    return p_lambda(cfg, lam.value)


def center_position_via_barycentrics(t, pair):
    return barycentric_to_cartesian(t, shinagawa_barycentrics(conway_symbols(t), pair))


def normalize_triangle(t):
    """Move the circumcenter to the origin and scale the circumradius to 1.

    Returns the normalized triangle and the :class:`Similarity` applied. In
    the exact regime the circumradius must be rational.
    """
    center = circumcenter_2d(*t.vertices)
    radius = circumsphere_radius(center, t.A)
    sim = Similarity(center, radius)
    return Triangle(*(sim.forward(p) for p in t.vertices)), sim


@dataclass(frozen=True)
class CenterRecord:
    etc_index: int
    pair: ShinagawaPair
    lam: ExtendedLambda
    label: str = ""

    def __post_init__(self):
        if not isinstance(self.etc_index, int) or self.etc_index < 1:
            raise GeometryError(f"center index must be a positive integer, got {self.etc_index!r}")
        if tau(self.pair) != self.lam:
            raise GeometryError(f"X{self.etc_index}: lambda {self.lam} != tau{tuple(self.pair)}")

    @classmethod
    def from_pair(cls, etc_index, u, v, label=""):
        pair = ShinagawaPair(u, v)
        return cls(etc_index, pair, tau(pair), label)


_KNOWN = (
    (2, 1, 0, "centroid"),
    (3, 1, -1, "circumcenter"),
    (4, 0, 1, "orthocenter"),
    (5, 1, 1, "nine-point center"),
    (20, 1, -2, "de Longchamps point"),
    (30, 1, -3, "Euler infinity point"),
    (140, 3, -1, "midpoint of X3 and X5"),
)


def known_centers():
    """Built-in table of notable Euler-line centers with constant coefficients."""
    return [CenterRecord.from_pair(k, u, v, label) for k, u, v, label in _KNOWN]


def lookup_center(etc_index):
    for rec in known_centers():
        if rec.etc_index == etc_index:
            return rec
    raise KeyError(f"X{etc_index} is not in the built-in table")
