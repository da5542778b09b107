import math
import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest

from eulerline.errors import GeometryError
from eulerline.figures import FigureKind, FigureSpec, render
from eulerline.plambda import (
    InscribedConfig,
    p_lambda,
    random_config,
    sub_plambda_family,
    sub_triangle_nine_point_circles,
)

SVG = "{http://www.w3.org/2000/svg}"
SQUARE = InscribedConfig([(1, 0), (0, 1), (-1, 0), (0, -1)])


def parse(doc):
    return ET.fromstring(doc.encode("utf-8"))


def elements(root, tag, cls=None):
    found = root.iter(SVG + tag)
    return [e for e in found if cls is None or e.get("class") == cls]


def test_theorem_figure_structure():
    cfg = random_config(2, 5, 2024)
    root = parse(render(FigureSpec(FigureKind.THEOREM, cfg, F(1, 3))))
    assert len(elements(root, "circle")) == 1 + 1 + 5
    assert len(elements(root, "circle", "sub-circle")) == 5
    assert len(elements(root, "line", "concurrence")) == 5
    assert len(elements(root, "line", "euler-line")) == 1
    (polygon,) = elements(root, "path", "polygon")
    d = polygon.get("d")
    assert d.count("M") + d.count("L") == 5 and d.endswith("Z")
    labels = {t.text for t in elements(root, "text")}
    assert {"O", "T", "P", "A1", "A5"} <= labels


def test_theorem_figure_matches_geometry():
    cfg = random_config(2, 4, 9)
    lam = 0.75
    spec = FigureSpec(FigureKind.THEOREM, cfg, lam, width=400, height=400, scale=100)
    root = parse(render(spec))
    to_px = lambda p: (200 + 100 * p[0], 200 - 100 * p[1])
    for circle, q in zip(elements(root, "circle", "sub-circle"), sub_plambda_family(cfg, lam)):
        x, y = to_px(q)
        assert float(circle.get("cx")) == pytest.approx(x, abs=1e-6)
        assert float(circle.get("cy")) == pytest.approx(y, abs=1e-6)
        assert float(circle.get("r")) == pytest.approx(75, abs=1e-6)
    (main,) = elements(root, "circle", "main-circle")
    x, y = to_px(p_lambda(cfg, lam))
    assert float(main.get("cx")) == pytest.approx(x, abs=1e-6)
    assert float(main.get("cy")) == pytest.approx(y, abs=1e-6)


def test_euler_point_figure_square():
    spec = FigureSpec(FigureKind.EULER_POINT, SQUARE, width=300, height=300, scale=100)
    root = parse(render(spec))
    assert len(elements(root, "circle")) == 5
    circles = elements(root, "circle", "nine-point-circle")
    assert len(circles) == 4
    for c in circles:
        r = float(c.get("r"))
        assert r == pytest.approx(50)
        assert math.hypot(float(c.get("cx")) - 150, float(c.get("cy")) - 150) == pytest.approx(r)


def test_euler_point_figure_general():
    cfg = random_config(2, 4, 77)
    root = parse(render(FigureSpec("eulerpoint", cfg, scale=120)))
    for c, circle in zip(elements(root, "circle", "nine-point-circle"), sub_triangle_nine_point_circles(cfg)):
        assert float(c.get("cx")) == pytest.approx(240 + 120 * circle.center[0], abs=1e-6)


@pytest.mark.parametrize("kind, lam", [("theorem", 0.5), ("eulerpoint", None)])
def test_render_is_deterministic(kind, lam):
    cfg = random_config(2, 4, 5)
    assert render(FigureSpec(kind, cfg, lam)) == render(FigureSpec(kind, cfg, lam))


@pytest.mark.parametrize("lam", [-1, 0, 3])
def test_theorem_figure_degenerate_lambdas(lam):
    root = parse(render(FigureSpec("theorem", random_config(2, 5, 1), lam)))
    assert len(elements(root, "circle")) == 7
    labels = {t.text for t in elements(root, "text")}
    assert ("T" in labels) == (lam != -1)
    for e in root.iter():
        for key in ("cx", "cy", "r", "x1", "y1", "x2", "y2"):
            if e.get(key) is not None:
                assert math.isfinite(float(e.get(key)))


def test_invalid_specs():
    with pytest.raises(GeometryError):
        FigureSpec("theorem", random_config(3, 4, 1), 1)
    with pytest.raises(GeometryError):
        FigureSpec("eulerpoint", random_config(2, 5, 1))
    with pytest.raises(GeometryError):
        FigureSpec("eulerpoint", SQUARE, 1)
    with pytest.raises(GeometryError):
        FigureSpec("theorem", SQUARE)
    with pytest.raises(ValueError):
        FigureSpec("spiral", SQUARE, 1)
