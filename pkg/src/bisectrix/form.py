"""The inner product and quadratic form induced by a quadrilateral.

From the canonical side coefficients a quadrilateral yields a triple
(alpha, beta, gamma); these define the quadratic form
Phi(X, Y) = gamma*X^2 - 2*beta*X*Y + alpha*Y^2 and the symmetric bilinear
form with matrix [[gamma, -beta], [-beta, alpha]].  Two lines are
Q-orthogonal when their (u, t) coefficient vectors pair to zero; this is
equivalent to their infinite points being conjugate under the involution
with matrix [[beta, -alpha], [gamma, -beta]] on the line at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegenerateForm,
    DegenerateInput,
    LineThroughVertex,
    UnderdeterminedPairs,
)
from .field import Scalar
from .plane import InfPoint, Line, PlanePoint, Point, intersect
from .quad import Quadrangle, Quadrilateral

Vec = tuple[Scalar, Scalar]


@dataclass(frozen=True)
class QuadraticData:
    alpha: Scalar
    beta: Scalar
    gamma: Scalar

    @property
    def field(self):
        return self.alpha.field

    def discriminant(self) -> Scalar:
        return self.beta * self.beta - self.alpha * self.gamma


def quadratic_data(q: Quadrilateral) -> QuadraticData:
    """The (alpha, beta, gamma) triple from the raw canonical coefficients.

    No rescaling is applied; proportionality of the triples across
    re-pairings of a quadrangle is a theorem, not a normalization.
    """
    ta, ua = q.a.t, q.a.u
    tb, ub = q.b.t, q.b.u
    tc, uc = q.a2.t, q.a2.u
    td, ud = q.b2.t, q.b2.u
    alpha = ta * ub * uc * ud - ua * tb * uc * ud + ua * ub * tc * ud - ua * ub * uc * td
    beta = ta * ub * tc * ud - ua * tb * uc * td
    gamma = ta * tb * tc * ud - ta * tb * uc * td + ta * ub * tc * td - ua * tb * tc * td
    return QuadraticData(alpha, beta, gamma)


def phi(d: QuadraticData, vx: Scalar, vy: Scalar) -> Scalar:
    return d.gamma * vx * vx - 2 * d.beta * vx * vy + d.alpha * vy * vy


def inner(d: QuadraticData, v: Vec, w: Vec) -> Scalar:
    v0, v1 = v
    w0, w1 = w
    return d.gamma * v0 * w0 - d.beta * (v0 * w1 + v1 * w0) + d.alpha * v1 * w1


def q_orthogonal(d: QuadraticData, l1: Line, l2: Line) -> bool:
    return inner(d, (l1.u, l1.t), (l2.u, l2.t)).is_zero()


class Involution:
    """An involutive homography of P1, stored as a matrix up to scale.

    The matrix acts by [x : y] |-> [m00*x + m01*y : m10*x + m11*y]; equality
    of involutions is proportionality of matrices.
    """

    __slots__ = ("m00", "m01", "m10", "m11")

    def __init__(self, m00: Scalar, m01: Scalar, m10: Scalar, m11: Scalar):
        sq_diag = m00 * m00 + m01 * m10
        if (
            not (m01 * (m00 + m11)).is_zero()
            or not (m10 * (m00 + m11)).is_zero()
            or sq_diag != m11 * m11 + m01 * m10
            or sq_diag.is_zero()
        ):
            raise DegenerateInput("matrix does not square to a nonzero scalar")
        if m01.is_zero() and m10.is_zero() and m00 == m11:
            raise DegenerateInput("scalar matrix is not an involution")
        for name, value in zip(self.__slots__, (m00, m01, m10, m11)):
            object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError("Involution is immutable")

    def apply(self, p: InfPoint) -> InfPoint:
        return InfPoint(self.m00 * p.x + self.m01 * p.y, self.m10 * p.x + self.m11 * p.y)

    def conjugate(self, p: InfPoint, q: InfPoint) -> bool:
        return self.apply(p) == q

    def fixes(self, p: InfPoint) -> bool:
        return self.apply(p) == p

    def is_reflection(self) -> bool:
        """Fixes the point [1 : 0], i.e. the infinite point of a chart."""
        field = self.m00.field
        return self.fixes(InfPoint(field.one, field.zero))

    def __eq__(self, other):
        if not isinstance(other, Involution):
            return NotImplemented
        mine = (self.m00, self.m01, self.m10, self.m11)
        theirs = (other.m00, other.m01, other.m10, other.m11)
        for i in range(4):
            for j in range(i + 1, 4):
                if mine[i] * theirs[j] != mine[j] * theirs[i]:
                    return False
        return True

    def __hash__(self):
        raise TypeError("involutions compare up to scale and are unhashable")

    def __repr__(self):
        return f"Involution([[{self.m00}, {self.m01}], [{self.m10}, {self.m11}]])"


def lambda_q(d: QuadraticData) -> Involution:
    """The involution on the line at infinity whose conjugate pairs are the
    infinite points of Q-orthogonal lines."""
    if d.discriminant().is_zero():
        raise DegenerateForm("beta^2 - alpha*gamma = 0")
    return Involution(d.beta, -d.alpha, d.gamma, -d.beta)


def _exchange_row(p: InfPoint, q: InfPoint) -> tuple[Scalar, Scalar, Scalar]:
    # Linear constraint on (m0, m1, m2) with M = [[m0, m1], [m2, -m0]]
    # expressing M(p) proportional to q.
    return (p.x * q.y + p.y * q.x, p.y * q.y, -(p.x * q.x))


def involution_from_pairs(
    pair1: tuple[InfPoint, InfPoint], pair2: tuple[InfPoint, InfPoint]
) -> Involution:
    """The unique involution exchanging both point pairs.

    A trace-free matrix that carries p to q automatically carries q back
    to p, so each pair contributes one linear constraint; the solution is
    the cross product of the two constraint rows.
    """
    r1 = _exchange_row(*pair1)
    r2 = _exchange_row(*pair2)
    m0 = r1[1] * r2[2] - r1[2] * r2[1]
    m1 = r1[2] * r2[0] - r1[0] * r2[2]
    m2 = r1[0] * r2[1] - r1[1] * r2[0]
    if m0.is_zero() and m1.is_zero() and m2.is_zero():
        raise UnderdeterminedPairs("constraints are linearly dependent")
    try:
        return Involution(m0, m1, m2, -m0)
    except DegenerateInput as err:
        raise UnderdeterminedPairs(str(err)) from err


def chart_point(line: Line, p: PlanePoint) -> InfPoint:
    """Projective parameter of a point of line's closure.

    Affine points are parameterized by their X coordinate (Y for vertical
    lines) as [x : 1]; the line's own infinite point is [1 : 0].
    """
    field = line.field
    if isinstance(p, InfPoint):
        if p != line.infinite_point():
            raise DegenerateInput("infinite point does not lie on the line")
        return InfPoint(field.one, field.zero)
    if not line.contains(p):
        raise DegenerateInput("point does not lie on the line")
    param = p.y if line.is_vertical else p.x
    return InfPoint(param, field.one)


def desargues_involution(qr: Quadrangle, line: Line) -> Involution:
    """The involution induced on a line by the conics through a quadrangle.

    Built from where two pairs of opposite sides of the quadrangle meet the
    line; the third pair is conjugate under the same involution, which is
    checked.  The involution acts on chart parameters (see chart_point).
    """
    for v in qr.points:
        if line.contains(v):
            raise LineThroughVertex(f"line passes through vertex {v}")
    params = []
    for pair in qr.opposite_side_pairs():
        params.append(
            tuple(chart_point(line, intersect(line, member)) for member in pair.lines)
        )
    inv = involution_from_pairs(params[0], params[1])
    assert inv.conjugate(*params[2])
    return inv
