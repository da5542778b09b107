import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerline.centers import (
    CenterRecord,
    Direction,
    ExtendedLambda,
    ShinagawaPair,
    Triangle,
    barycentric_to_cartesian,
    barycentrics_equal,
    center_position_via_barycentrics,
    center_position_via_tau,
    conway_symbols,
    known_centers,
    lookup_center,
    normalize_triangle,
    shinagawa_barycentrics,
    tau,
    verify_lemma_gx,
)
from eulerline.errors import (
    DegenerateError,
    InvalidPairError,
    NormalizationError,
    PointAtInfinityError,
)
from eulerline.kernel import Point, points_equal
from eulerline.plambda import InscribedConfig, p_lambda, random_config, rational_sphere_point

from strategies import small_rationals

TRI = Triangle((1, 0), (0, 1), (-1, 0))


def unit_triangle(seed, exact=False):
    return Triangle(*random_config(2, 3, seed, exact=exact).points)


# ---- independent constructions (numpy, no library code) ----

def _solve_lines(p1, d1, p2, d2):
    a = np.array([[d1[0], -d2[0]], [d1[1], -d2[1]]], dtype=float)
    s, _ = np.linalg.solve(a, np.asarray(p2, float) - np.asarray(p1, float))
    return np.asarray(p1, float) + s * np.asarray(d1, float)


def oracle_orthocenter(a, b, c):
    a, b, c = (np.asarray(p, float) for p in (a, b, c))
    perp = lambda v: np.array([-v[1], v[0]])
    return _solve_lines(a, perp(c - b), b, perp(a - c))


def oracle_circumcenter(a, b, c):
    a, b, c = (np.asarray(p, float) for p in (a, b, c))
    perp = lambda v: np.array([-v[1], v[0]])
    return _solve_lines((a + b) / 2, perp(b - a), (b + c) / 2, perp(c - b))


def oracle_nine_point_center(a, b, c):
    a, b, c = (np.asarray(p, float) for p in (a, b, c))
    return oracle_circumcenter((b + c) / 2, (c + a) / 2, (a + b) / 2)


# ---- Conway symbols ----

def test_conway_equilateral():
    cs = conway_symbols(Triangle((0.0, 0.0), (2.0, 0.0), (1.0, math.sqrt(3))))
    for s in (cs.S_A, cs.S_B, cs.S_C):
        assert s == pytest.approx(2)
    assert cs.S == pytest.approx(2 * math.sqrt(3))
    assert cs.S_sq == pytest.approx(12)


def test_conway_right_triangle():
    # a = |BC| = 5, b = |CA| = 4, c = |AB| = 3, right angle at A
    cs = conway_symbols(Triangle((0, 0), (3, 0), (0, 4)))
    assert (cs.S_A, cs.S_B, cs.S_C, cs.S) == (0, 9, 16, 12)
    assert not cs.degenerate


def test_conway_degenerate():
    cs = conway_symbols(Triangle((0, 0), (1, 1), (3, 3)))
    assert cs.S == 0 and cs.degenerate
    with pytest.raises(DegenerateError):
        shinagawa_barycentrics(cs, (1, 0))


@given(st.lists(small_rationals, min_size=6, max_size=6))
def test_conway_identity_exact(c):
    t = Triangle((c[0], c[1]), (c[2], c[3]), (c[4], c[5]))
    cs = conway_symbols(t)
    assert cs.S_sq == cs.S_A * cs.S_B + cs.S_B * cs.S_C + cs.S_C * cs.S_A


# ---- barycentrics ----

def test_barycentric_to_cartesian():
    t = Triangle((0, 0), (6, 0), (0, 3))
    assert barycentric_to_cartesian(t, (1, 1, 1)) == (2, 1)
    assert barycentric_to_cartesian(t, (1, 0, 0)) == (0, 0)
    with pytest.raises(PointAtInfinityError):
        barycentric_to_cartesian(t, (1, 1, -2))


def test_shinagawa_weights():
    cs = conway_symbols(unit_triangle(1, exact=True))
    s2 = cs.S_sq
    assert shinagawa_barycentrics(cs, (1, 0)) == (s2, s2, s2)
    assert shinagawa_barycentrics(cs, (0, 1)) == (cs.S_B * cs.S_C, cs.S_C * cs.S_A, cs.S_A * cs.S_B)
    # circumcenter weights equal (a^2 S_A, b^2 S_B, c^2 S_C)
    t = unit_triangle(1, exact=True)
    a2, b2, c2 = t.side_sq()
    assert barycentrics_equal(shinagawa_barycentrics(cs, (1, -1)),
                              (a2 * cs.S_A, b2 * cs.S_B, c2 * cs.S_C))
    with pytest.raises(InvalidPairError):
        shinagawa_barycentrics(cs, (0, 0))


@pytest.mark.parametrize("seed", range(10))
def test_classical_centers_against_constructions(seed):
    t = unit_triangle(seed)
    g = center_position_via_barycentrics(t, (1, 0))
    h = center_position_via_barycentrics(t, (0, 1))
    o = center_position_via_barycentrics(t, (1, -1))
    n = center_position_via_barycentrics(t, (1, 1))
    verts = t.vertices
    assert np.allclose(g, np.mean(np.asarray(verts, float), axis=0), atol=1e-9)
    assert np.allclose(h, oracle_orthocenter(*verts), atol=1e-8)
    assert np.allclose(o, oracle_circumcenter(*verts), atol=1e-8)
    assert np.allclose(n, oracle_nine_point_center(*verts), atol=1e-8)
    cfg = InscribedConfig(verts)
    assert points_equal(g, p_lambda(cfg, 1 / 3))
    assert points_equal(h, p_lambda(cfg, 1.0))
    assert points_equal(o, cfg.origin())
    assert points_equal(n, p_lambda(cfg, 0.5))


# ---- tau ----

@pytest.mark.parametrize("pair, expected", [
    ((1, -1), F(0)),
    ((0, 1), F(1)),
    ((1, 1), F(1, 2)),
    ((1, 0), F(1, 3)),
    ((3, -1), F(1, 4)),
    ((1, -2), F(-1)),
])
def test_tau_values(pair, expected):
    assert tau(pair) == ExtendedLambda(expected)


def test_tau_infinity_and_domain():
    assert tau((1, -3)).is_infinite
    assert str(tau((1, -3))) == "infinity"
    assert tau((-2, 6)).is_infinite
    with pytest.raises(InvalidPairError):
        tau((0, 0))
    with pytest.raises(InvalidPairError):
        ShinagawaPair(0.0, 0)


@given(st.integers(-20, 20), st.integers(-20, 20), small_rationals.filter(bool))
def test_tau_scale_invariant(u, v, k):
    if (u, v) == (0, 0):
        return
    assert tau((k * u, k * v)) == tau((u, v))


# ---- lemma and position ----

def test_lemma_examples():
    assert verify_lemma_gx(TRI, (1, 0))
    # X - G = 2 (G - O) means X = 3G = sum of vertices = (0, 1)
    assert center_position_via_barycentrics(TRI, (0, 1)) == (0, 1)
    assert verify_lemma_gx(TRI, (0, 1))
    with pytest.raises(PointAtInfinityError):
        verify_lemma_gx(TRI, (1, -3))
    with pytest.raises(NormalizationError):
        verify_lemma_gx(Triangle((0, 0), (3, 0), (0, 4)), (1, 0))


def test_position_via_tau_examples():
    assert center_position_via_tau(TRI, (0, 1)) == (0, 1)
    assert center_position_via_tau(TRI, (1, 0)) == (0, F(1, 3))
    assert center_position_via_tau(TRI, (1, -3)) == Direction(Point([0, 1]))
    # stereographic images of 0, 1, -1: (0,-1), (1,0), (-1,0)
    lower = Triangle(*(rational_sphere_point([u]) for u in (F(0), F(1), F(-1))))
    assert center_position_via_tau(lower, (1, -3)).vector == (0, -1)
    equilateral = Triangle((1.0, 0.0), (-0.5, math.sqrt(3) / 2), (-0.5, -math.sqrt(3) / 2))
    with pytest.raises(DegenerateError):
        center_position_via_tau(equilateral, (1, -3))


@given(st.lists(small_rationals, min_size=3, max_size=3, unique=True),
       st.integers(-5, 5), st.integers(-5, 5))
def test_position_routes_agree_exactly(us, u, v):
    if (u, v) == (0, 0) or 3 * u + v == 0:
        return
    t = Triangle(*(rational_sphere_point([x]) for x in us))
    assert center_position_via_tau(t, (u, v)) == center_position_via_barycentrics(t, (u, v))
    assert verify_lemma_gx(t, (u, v))


# ---- table of known centers ----

def test_known_centers():
    table = {rec.etc_index: rec for rec in known_centers()}
    expected = {2: F(1, 3), 3: F(0), 4: F(1), 5: F(1, 2), 20: F(-1), 140: F(1, 4)}
    for k, lam in expected.items():
        assert table[k].lam == ExtendedLambda(lam)
    assert tuple(table[30].pair) == (1, -3) and table[30].lam.is_infinite
    assert lookup_center(4).lam.value == 1
    with pytest.raises(KeyError):
        lookup_center(1)


@pytest.mark.parametrize("seed", range(5))
def test_known_pairs_match_positions(seed):
    # each derived pair must place its center where the classical definition does
    t = unit_triangle(seed, exact=True)
    cfg = InscribedConfig(t.vertices)
    o, h = cfg.origin(), p_lambda(cfg, 1)
    g = t.centroid()
    n = (o + h) * F(1, 2)
    table = {rec.etc_index: rec for rec in known_centers()}
    classical = {2: g, 3: o, 4: h, 5: n, 20: o * 2 - h, 140: (o + n) * F(1, 2)}
    for k, point in classical.items():
        assert center_position_via_barycentrics(t, table[k].pair) == point
        assert center_position_via_tau(t, table[k].pair) == point


def test_center_record_checks_lambda():
    with pytest.raises(Exception):
        CenterRecord(4, ShinagawaPair(0, 1), ExtendedLambda(F(1, 2)))
    with pytest.raises(Exception):
        CenterRecord.from_pair(0, 1, 0)


def test_normalize_triangle():
    nt, sim = normalize_triangle(Triangle((0, 0), (4, 0), (0, 3)))
    assert sim.center == (2, F(3, 2)) and sim.scale == F(5, 2)
    assert all(p.norm_sq() == 1 for p in nt.vertices)
    with pytest.raises(NormalizationError):
        normalize_triangle(Triangle((0, 0), (1, 0), (0, 1)))
    nt, _ = normalize_triangle(Triangle((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)))
    assert all(abs(p.norm_sq() - 1) < 1e-12 for p in nt.vertices)
