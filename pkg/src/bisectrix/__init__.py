"""Exact-arithmetic bisector geometry of quadrilaterals over Q and GF(p)."""

from .bisectors import (
    AllLinesThrough,
    Bisector,
    FieldCheckReport,
    LocusConic,
    bisector_field_check,
    bisector_locus,
    bisector_through,
    crosses,
    is_bisector,
    is_q_pair,
    mid_cross,
    nine_points,
    q_antipodal,
    q_partner,
)
from .field import GF, PrimeField, QQ, Rationals, Scalar
from .form import (
    Involution,
    QuadraticData,
    chart_point,
    desargues_involution,
    inner,
    involution_from_pairs,
    lambda_q,
    phi,
    q_orthogonal,
    quadratic_data,
)
from .oracle import (
    Lcg64,
    TheoremReport,
    brute_bisectors,
    closed_form_bisectors,
    enumerate_lines,
    enumerate_points,
    lines_through,
    random_quadrilateral,
    verify_all,
)
from .pencil import (
    Conic,
    ConicClass,
    Degeneration,
    DegenerationReport,
    ParallelFamily,
    Pencil,
    center,
    classify,
    degenerations,
    is_degeneration_of,
    pencil_of,
)
from .plane import (
    AffineMap,
    InfPoint,
    Line,
    LinePair,
    PlanePoint,
    Point,
    intersect,
    line_from_points,
    midpoint,
)
from .quad import Quadrangle, Quadrilateral, requadrilate, standard_form

__all__ = [name for name in dir() if not name.startswith("_")]
