"""P_lambda points and Euler lines of point sets inscribed in unit hyperspheres."""

__version__ = "0.1.0"

from .centers import (
    CenterRecord,
    ConwaySymbols,
    Direction,
    ExtendedLambda,
    ShinagawaPair,
    Triangle,
    barycentric_to_cartesian,
    center_position_via_tau,
    conway_symbols,
    known_centers,
    normalize_triangle,
    shinagawa_barycentrics,
    tau,
    verify_lemma_gx,
)
from .errors import GeometryError
from .figures import FigureKind, FigureSpec, render
from .kernel import (
    Homothety,
    Line,
    Point,
    Sphere,
    distance_sq,
    homothety_apply,
    line_contains,
    sphere_contains,
    tolerance,
)
from .plambda import (
    Degeneracy,
    DegenerateLine,
    InscribedConfig,
    TheoremReport,
    euler_line,
    euler_point_quadrilateral,
    homothety_center,
    orthocenter_concurrence_quad,
    p_lambda,
    random_config,
    rational_sphere_point,
    shadow_embed,
    sub_plambda_family,
    verify_theorem,
)
from .tables import CenterTable, parse_center_table, serialize_center_table, table_report
