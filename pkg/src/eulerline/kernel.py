"""Scalars, points and the handful of primitives the rest of the package needs.

Two scalar regimes coexist:

* exact: :class:`fractions.Fraction` (ints are promoted), compared with ``==``;
* approximate: ``float``, compared with a relative tolerance
  ``|x - y| <= eps * max(1, |x|, |y|)``.

A :class:`Point` holds coordinates from a single regime. Any float among the
inputs makes the whole point approximate.
"""

import contextlib
import contextvars
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational, Real

from .errors import DimensionMismatchError, GeometryError, InvalidLineError

DEFAULT_TOLERANCE = 1e-9

_tolerance = contextvars.ContextVar("eulerline_tolerance", default=DEFAULT_TOLERANCE)


def get_tolerance():
    return _tolerance.get()


def set_tolerance(eps):
    """Set the relative tolerance for the current context; returns a reset token."""
    if not eps > 0:
        raise ValueError(f"tolerance must be positive, got {eps!r}")
    return _tolerance.set(float(eps))


@contextlib.contextmanager
def tolerance(eps):
    token = set_tolerance(eps)
    try:
        yield
    finally:
        _tolerance.reset(token)


# ---------------------------------------------------------------- scalars

def is_exact(x):
    return isinstance(x, Fraction)


def to_scalar(x, exact):
    """Coerce ``x`` into the requested regime.

    Floats enter the exact regime through their exact binary value, so no
    information is invented or lost.
    """
    t = type(x)
    if exact:
        if t is Fraction:
            return x
        if t is int:
            return Fraction(x)
        if isinstance(x, Rational):
            return Fraction(int(x.numerator), int(x.denominator))
        if isinstance(x, Real):
            x = float(x)
            if not math.isfinite(x):
                raise ValueError(f"non-finite scalar {x!r}")
            return Fraction(x)
        raise TypeError(f"not a real scalar: {x!r}")
    if t is float:
        return x
    if isinstance(x, Real):
        return float(x)
    raise TypeError(f"not a real scalar: {x!r}")


def scalar_eq(x, y):
    if type(x) is float and type(y) is float:
        return abs(x - y) <= _tolerance.get() * max(1.0, abs(x), abs(y))
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x == y
    x, y = float(x), float(y)
    return abs(x - y) <= _tolerance.get() * max(1.0, abs(x), abs(y))


def scalar_is_zero(x):
    if isinstance(x, Fraction):
        return x == 0
    return abs(x) <= _tolerance.get()


def exact_sqrt(x):
    """Square root of a non-negative Fraction if it is rational, else None."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------- points

class Point(tuple):
    """Immutable coordinate vector in R^d.

    ``+``, ``-`` and scalar ``*`` are vector operations (not tuple
    concatenation or repetition). ``==`` is structural; use
    :func:`points_equal` for regime-aware comparison.
    """

    __slots__ = ()

    def __new__(cls, coords):
        coords = tuple(coords)
        if not coords:
            raise DimensionMismatchError("a point needs at least one coordinate")
        exact = not any(isinstance(c, float) or not isinstance(c, Rational) for c in coords)
        return tuple.__new__(cls, (to_scalar(c, exact) for c in coords))

    @classmethod
    def _raw(cls, coords):
        # internal fast path; caller guarantees a single regime
        return tuple.__new__(cls, coords)

    @classmethod
    def origin(cls, d, exact=True):
        zero = Fraction(0) if exact else 0.0
        return cls._raw((zero,) * d)

    @property
    def dim(self):
        return len(self)

    @property
    def exact(self):
        return isinstance(self[0], Fraction)

    def _check(self, other):
        if len(self) != len(other):
            raise DimensionMismatchError(f"dimension mismatch: {len(self)} vs {len(other)}")
        if (type(self[0]) is Fraction) != (type(other[0]) is Fraction):
            raise GeometryError("cannot mix exact and approximate points")

    def __add__(self, other):
        self._check(other)
        return Point._raw(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        return Point._raw(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Point._raw(-a for a in self)

    def __mul__(self, k):
        k = to_scalar(k, self.exact)
        return Point._raw(k * a for a in self)

    __rmul__ = __mul__

    def dot(self, other):
        self._check(other)
        return sum((a * b for a, b in zip(self, other)), self[0] * 0)

    def norm_sq(self):
        return self.dot(self)

    def embed(self, extra=1):
        """Append ``extra`` zero coordinates."""
        zero = self[0] * 0
        return Point._raw(tuple(self) + (zero,) * extra)

    def to_float(self):
        return Point._raw(float(a) for a in self)

    def __repr__(self):
        return f"Point({', '.join(format_scalar(c) for c in self)})"


def format_scalar(x):
    if isinstance(x, Fraction):
        return str(x)
    return repr(float(x))


def vector_sum(points, d=None, exact=True):
    points = list(points)
    if not points:
        return Point.origin(d, exact)
    total = points[0]
    for p in points[1:]:
        total = total + p
    return total


def points_equal(p, q):
    p._check(q)
    return all(scalar_eq(a, b) for a, b in zip(p, q))


def is_zero_vector(p):
    return all(scalar_is_zero(a) for a in p)


def distance_sq(p, q):
    """Squared Euclidean distance; exact for exact points."""
    return (p - q).norm_sq()


# ---------------------------------------------------------------- shapes

@dataclass(frozen=True)
class Sphere:
    center: Point
    radius_sq: object

    def __post_init__(self):
        r = to_scalar(self.radius_sq, self.center.exact)
        if r < 0:
            raise GeometryError(f"negative squared radius {r}")
        object.__setattr__(self, "radius_sq", r)

    @property
    def dim(self):
        return self.center.dim


def sphere_contains(s, p):
    return scalar_eq(distance_sq(p, s.center), s.radius_sq)


@dataclass(frozen=True)
class Line:
    base: Point
    direction: Point

    def __post_init__(self):
        self.base._check(self.direction)
        if is_zero_vector(self.direction):
            raise InvalidLineError("line direction must be nonzero")

    @classmethod
    def through(cls, p, q):
        return cls(p, q - p)

    def at(self, t):
        return self.base + self.direction * t


def line_contains(line, p):
    """True iff ``p - base`` is parallel to the direction.

    Tested through the vanishing of every 2x2 minor of the pair; each minor
    is compared as ``w_i d_j == w_j d_i`` under the regime's equality.
    """
    return line_check(line, p)[0]


def line_residual(line, p):
    """Largest absolute 2x2 minor; 0 when ``p`` is on the line."""
    return line_check(line, p)[1]


def line_check(line, p):
    """``(line_contains(line, p), line_residual(line, p))`` in one pass."""
    w = p - line.base
    d = line.direction
    n = len(w)
    ok = True
    worst = abs(w[0] * 0)
    for i in range(n):
        for j in range(i + 1, n):
            x, y = w[i] * d[j], w[j] * d[i]
            ok = ok and scalar_eq(x, y)
            worst = max(worst, abs(x - y))
    return ok, worst


@dataclass(frozen=True)
class Homothety:
    """The map x -> ratio * (x - center) + center.

    A zero ratio collapses everything onto the center and must be requested
    with ``degenerate=True``.
    """

    center: Point
    ratio: object
    degenerate: bool = False

    def __post_init__(self):
        r = to_scalar(self.ratio, self.center.exact)
        object.__setattr__(self, "ratio", r)
        if r == 0 and not self.degenerate:
            raise GeometryError("zero-ratio homothety must be flagged degenerate")

    def __call__(self, x):
        return homothety_apply(self, x)


def homothety_apply(h, x):
    return (x - h.center) * h.ratio + h.center


@dataclass(frozen=True)
class Similarity:
    """Translation followed by uniform scaling: x -> (x - center) / scale.

    Records how an input frame was normalized onto the unit sphere so that
    results can be mapped back.
    """

    center: Point
    scale: object

    def forward(self, x):
        return (x - self.center) * (1 / self.scale)

    def inverse(self, x):
        return x * self.scale + self.center
