"""Bisector predicates, the bisector locus, Q-pairs and bisector fields.

A line crosses a pair of lines when it is distinct from both and not
parallel to both; its midpoint across the pair is the midpoint of the two
intersection points (the line's own infinite point if exactly one of them
is at infinity).  A line bisects a quadrilateral when its midpoints across
the two opposite-side pairs it crosses agree; that common point is the
midpoint of the bisector and is always affine.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DoesNotCross, NotABisector, NotBisectors
from .field import Scalar
from .form import QuadraticData, phi, q_orthogonal, quadratic_data
from .pencil import Conic
from .plane import (
    InfPoint,
    Line,
    LinePair,
    PlanePoint,
    Point,
    intersect,
    line_from_points,
    midpoint,
)
from .quad import Quadrangle, Quadrilateral, standard_form


@dataclass(frozen=True)
class Bisector:
    line: Line
    midpoint: Point


@dataclass(frozen=True)
class AllLinesThrough:
    """Marker result: every line through center bisects (parallelogram case)."""

    center: Point


def crosses(l: Line, pair: LinePair) -> bool:
    if l == pair.a or l == pair.b:
        return False
    return not (l.is_parallel(pair.a) and l.is_parallel(pair.b))


def mid_cross(l: Line, pair: LinePair) -> PlanePoint:
    """Midpoint of the two points where l meets the pair."""
    if not crosses(l, pair):
        raise DoesNotCross(f"{l} does not cross {pair}")
    p1 = intersect(l, pair.a)
    p2 = intersect(l, pair.b)
    if isinstance(p1, InfPoint):
        return l.infinite_point()
    if isinstance(p2, InfPoint):
        return l.infinite_point()
    return midpoint(p1, p2)


def is_bisector(q: Quadrilateral, l: Line) -> Point | None:
    """The midpoint of l as a bisector of q, or None if l does not bisect.

    Only the two opposite-side pairs are consulted (sides and diagonals
    come out as bisectors of themselves); agreement with the third pair of
    the quadrangle is a theorem, not part of the predicate.
    """
    mids = [mid_cross(l, pair) for pair in q.opposite_pairs() if crosses(l, pair)]
    assert mids, "a line always crosses at least one opposite-side pair"
    if len(mids) == 2 and mids[0] != mids[1]:
        return None
    m = mids[0]
    if isinstance(m, InfPoint):
        return None
    return m


def bisector_through(q: Quadrilateral, m: Point) -> list[Bisector] | AllLinesThrough:
    """The bisector(s) of q with midpoint m, by standard-form reduction.

    Empty when m is not on the bisector locus; AllLinesThrough(m) when m is
    the center of a parallelogram's vertex set.
    """
    f, std, mu = standard_form(q)
    center = f.apply(q.centroid)
    h, k = center.x, center.y
    image = f.apply(m)
    p, qq = image.x, image.y
    finv = f.inverse()
    if not (p.is_zero() and qq.is_zero()):
        if not (qq * (qq - 2 * k) - mu * p * (p - 2 * h)).is_zero():
            return []
        std_line = Line(qq, -p, -2 * p * qq)
        return [Bisector(finv.apply(std_line), m)]
    if not (h.is_zero() and k.is_zero()):
        std_line = Line(mu * h, -k, h.field.zero)
        return [Bisector(finv.apply(std_line), m)]
    return AllLinesThrough(m)


@dataclass(frozen=True)
class LocusConic:
    """The bisector locus: a conic centered at the centroid.

    components is None for a nondegenerate locus; otherwise it is the pair
    (midline of the parallel sides or diagonals, line through their
    midpoints).  The centered representation
    phi(X - h, Y - k) = constant is kept for rendering.
    """

    conic: Conic
    center: Point
    components: tuple[Line, Line] | None
    data: QuadraticData
    constant: Scalar

    def contains(self, p: PlanePoint) -> bool:
        return self.conic.contains(p)


def _side_midpoint_pairs(q: Quadrilateral):
    """(pair of lines, their midpoints) for {A, A'}, {B, B'} and the diagonals."""
    v0, v1, v2, v3 = q.vertices
    d1, d2 = q.diagonal_lines
    return (
        (q.a, q.a2, midpoint(v0, v3), midpoint(v1, v2)),
        (q.b, q.b2, midpoint(v0, v1), midpoint(v2, v3)),
        (d1, d2, midpoint(v0, v2), midpoint(v1, v3)),
    )


def bisector_locus(q: Quadrilateral) -> LocusConic:
    """The locus of midpoints of bisectors: phi(X-h, Y-k) = phi(a-h, b-k)
    for the first affine diagonal point (a, b)."""
    d = quadratic_data(q)
    c = q.centroid
    h, k = c.x, c.y
    anchor = next(p for p in q.diagonal_points() if isinstance(p, Point))
    constant = phi(d, anchor.x - h, anchor.y - k)
    alpha, beta, gamma = d.alpha, d.beta, d.gamma
    conic = Conic(
        gamma,
        -2 * beta,
        alpha,
        -2 * gamma * h + 2 * beta * k,
        2 * beta * h - 2 * alpha * k,
        phi(d, h, k) - constant,
    )
    components = None
    for l1, l2, m1, m2 in _side_midpoint_pairs(q):
        if l1.is_parallel(l2):
            mid_line = Line(l1.t, l1.u, (l1.v + l2.v) / 2)
            components = (mid_line, line_from_points(m1, m2))
            break
    assert (components is not None) == constant.is_zero()
    if components is not None:
        assert Conic.from_lines(*components) == conic
    return LocusConic(conic, c, components, d, constant)


def nine_points(qr: Quadrangle) -> list[PlanePoint]:
    """Six vertex-pair midpoints followed by the three diagonal points."""
    p0, p1, p2, p3 = qr.points
    points: list[PlanePoint] = [
        midpoint(p0, p1),
        midpoint(p0, p2),
        midpoint(p0, p3),
        midpoint(p1, p2),
        midpoint(p1, p3),
        midpoint(p2, p3),
    ]
    for pair in qr.opposite_side_pairs():
        points.append(intersect(pair.a, pair.b))
    return points


def q_antipodal(q: Quadrilateral, b1: Bisector, b2: Bisector) -> bool:
    return midpoint(b1.midpoint, b2.midpoint) == q.centroid


def is_q_pair(q: Quadrilateral, pair: LinePair) -> bool:
    """Q-antipodal and Q-orthogonal; the two lines may coincide."""
    m1 = is_bisector(q, pair.a)
    m2 = is_bisector(q, pair.b)
    if m1 is None or m2 is None:
        raise NotBisectors(f"{pair} does not consist of bisectors")
    d = quadratic_data(q)
    return midpoint(m1, m2) == q.centroid and q_orthogonal(d, pair.a, pair.b)


def q_partner(q: Quadrilateral, l: Line) -> Line:
    """The unique line making a Q-pair with the bisector l."""
    m = is_bisector(q, l)
    if m is None:
        raise NotABisector(f"{l} does not bisect the quadrilateral")
    c = q.centroid
    antipode = Point(2 * c.x - m.x, 2 * c.y - m.y)
    if antipode != m:
        found = bisector_through(q, antipode)
        assert isinstance(found, list) and len(found) == 1
        return found[0].line
    # Midpoint at the centroid: the partner is the unique line through the
    # centroid Q-orthogonal to l (possibly l itself).
    d = quadratic_data(q)
    r = d.gamma * l.u - d.beta * l.t
    s = -d.beta * l.u + d.alpha * l.t
    u_dir, t_dir = -s, r
    return Line(t_dir, u_dir, u_dir * c.y - t_dir * c.x)


@dataclass
class FieldCheckReport:
    """Outcome of checking the simultaneous-bisection property."""

    lines_checked: int = 0
    violations: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def bisector_field_check(q: Quadrilateral, pairs: list[LinePair]) -> FieldCheckReport:
    """Check that every line of every pair bisects every pair it crosses,
    always with its own midpoint as a bisector of q."""
    report = FieldCheckReport()
    seen: set[Line] = set()
    for pair in pairs:
        for l in pair.lines:
            if l in seen:
                continue
            seen.add(l)
            report.lines_checked += 1
            m = is_bisector(q, l)
            if m is None:
                report.violations.append(f"{l} is not a bisector")
                continue
            for other in pairs:
                if not crosses(l, other):
                    continue
                got = mid_cross(l, other)
                if got != m:
                    report.violations.append(
                        f"{l} crosses {other} at midpoint {got}, expected {m}"
                    )
    return report
