"""Exact illumination and covering numbers of convex polygons."""

from .arcs import Arc, Dir, circle_covered, min_piercing, step_arc_family
from .covering import (
    CountResult,
    EpsSpec,
    construct_H,
    condition_iii_iv_check,
    disc_quantified,
    finite_at_circumradius,
    number_c,
    number_i,
    number_t_bounds,
    quantified_count,
    verify_count,
)
from .field import NumberField, ParseError
from .geometry import ConvexPolygon, Mode, circumball, contact_set, cover_residual, make_polygon
from .shapes import Disc, parse_shape, regular_ngon, serialize_shape

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ConvexPolygon",
    "CountResult",
    "Dir",
    "Disc",
    "EpsSpec",
    "Mode",
    "NumberField",
    "ParseError",
    "circle_covered",
    "circumball",
    "condition_iii_iv_check",
    "construct_H",
    "contact_set",
    "cover_residual",
    "disc_quantified",
    "finite_at_circumradius",
    "make_polygon",
    "min_piercing",
    "number_c",
    "number_i",
    "number_t_bounds",
    "parse_shape",
    "quantified_count",
    "regular_ngon",
    "serialize_shape",
    "step_arc_family",
    "verify_count",
]
