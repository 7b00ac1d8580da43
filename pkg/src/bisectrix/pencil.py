"""Conics, the pencil of a quadrilateral, classification and degenerations.

A conic is a quadratic polynomial a*X^2 + b*X*Y + c*Y^2 + d*X + e*Y + f
with (a, b, c) not all zero, stored with the first nonzero coefficient
normalized to 1.  Classification counts points at infinity over the ground
field, so it is deliberately field-dependent: Y^2 - 2X^2 + 1 is an ellipse
over Q and a hyperbola over GF(7).

Degenerations of a conic are the line pairs whose union is the zero set of
the conic plus a constant; they are computed over the ground field only,
and a pair that would need a quadratic extension is reported absent
together with the nonsquare discriminant that witnesses it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateInput
from .field import Scalar
from .plane import InfPoint, Line, LinePair, PlanePoint, Point
from .quad import Quadrilateral

_COEFF_NAMES = ("a", "b", "c", "d", "e", "f")


class Conic:
    """Six normalized coefficients of a quadratic polynomial."""

    __slots__ = _COEFF_NAMES

    def __init__(self, a, b, c, d, e, f):
        coeffs = (a, b, c, d, e, f)
        if a.is_zero() and b.is_zero() and c.is_zero():
            raise DegenerateInput("quadratic part vanishes")
        lead = next(x for x in coeffs if not x.is_zero())
        for name, value in zip(_COEFF_NAMES, coeffs):
            object.__setattr__(self, name, value / lead)

    def __setattr__(self, name, value):
        raise AttributeError("Conic is immutable")

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return tuple(getattr(self, name) for name in _COEFF_NAMES)

    @property
    def field(self):
        return self.a.field

    @classmethod
    def from_lines(cls, l1: Line, l2: Line) -> "Conic":
        """Product of the two canonical linear forms."""
        t1, u1, v1 = l1.t, l1.u, l1.v
        t2, u2, v2 = l2.t, l2.u, l2.v
        return cls(
            t1 * t2,
            -(t1 * u2 + t2 * u1),
            u1 * u2,
            t1 * v2 + t2 * v1,
            -(u1 * v2 + u2 * v1),
            v1 * v2,
        )

    def shift(self, lam: Scalar) -> "Conic":
        """The conic plus a constant; normalization is unaffected."""
        a, b, c, d, e, f = self.coeffs
        return Conic(a, b, c, d, e, f + lam)

    def evaluate(self, p: Point) -> Scalar:
        x, y = p.x, p.y
        return (
            self.a * x * x + self.b * x * y + self.c * y * y
            + self.d * x + self.e * y + self.f
        )

    def evaluate_infinite(self, p: InfPoint) -> Scalar:
        """Homogenized value at [x : y : 0], i.e. the leading form."""
        return self.a * p.x * p.x + self.b * p.x * p.y + self.c * p.y * p.y

    def contains(self, p: PlanePoint) -> bool:
        if isinstance(p, InfPoint):
            return self.evaluate_infinite(p).is_zero()
        return self.evaluate(p).is_zero()

    def leading_discriminant(self) -> Scalar:
        return self.b * self.b - 4 * self.a * self.c

    def det3(self) -> Scalar:
        """Determinant of the symmetric 3x3 matrix of the homogenized conic."""
        a, b, c, d, e, f = self.coeffs
        b2, d2, e2 = b / 2, d / 2, e / 2
        return (
            a * (c * f - e2 * e2)
            - b2 * (b2 * f - d2 * e2)
            + d2 * (b2 * e2 - c * d2)
        )

    def is_degenerate(self) -> bool:
        return self.det3().is_zero()

    def __eq__(self, other):
        return isinstance(other, Conic) and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(("conic",) + self.coeffs)

    def __str__(self):
        terms = []
        for coeff, mono in zip(self.coeffs, ("X^2", "X*Y", "Y^2", "X", "Y", "")):
            if coeff.is_zero():
                continue
            text = str(coeff)
            sign = "-" if text.startswith("-") else "+"
            mag = text[1:] if text.startswith("-") else text
            if mono and mag == "1":
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = mag
            terms.append((sign, body))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Conic<{self}>"


@dataclass(frozen=True)
class ConicClass:
    """Classification by points at infinity over k and reducibility over k."""

    kind: str  # ellipse | parabola | hyperbola | degenerate_pair | degenerate_irreducible
    pair: LinePair | None = None

    def __str__(self):
        if self.pair is not None:
            return f"{self.kind} {self.pair}"
        return self.kind


@dataclass(frozen=True)
class Degeneration:
    lam: Scalar
    pair: LinePair


@dataclass(frozen=True)
class ParallelFamily:
    """All degenerations of a parallel-line-pair conic.

    The pairs are exactly {midline shifted by +r, midline shifted by -r}
    for r in the field; base is the double midline (r = 0).
    """

    conic: "Conic"
    midline: Line
    direction: InfPoint
    base: Degeneration

    def pair_at_offset(self, r: Scalar) -> Degeneration:
        l1 = Line(self.midline.t, self.midline.u, self.midline.v + r)
        l2 = Line(self.midline.t, self.midline.u, self.midline.v - r)
        return Degeneration(_lambda_for(self.conic, l1, l2), LinePair(l1, l2))


@dataclass(frozen=True)
class DegenerationReport:
    """Degenerations of a conic over the ground field.

    entries holds the isolated degenerations (at most one: the asymptote
    pair); family is set for parallel-line-pair conics; absent_witness is
    the nonsquare leading discriminant when the unique degeneration exists
    only over a quadratic extension.
    """

    entries: tuple[Degeneration, ...]
    family: ParallelFamily | None = None
    absent_witness: Scalar | None = None


def _lambda_for(conic: Conic, l1: Line, l2: Line) -> Scalar:
    """The constant lam with conic + lam proportional to the product l1*l2,
    rescaled so the identity is exact on the normalized representation."""
    product = Conic.from_lines(l1, l2)
    for mine, theirs in zip(conic.coeffs[:3], product.coeffs[:3]):
        if not theirs.is_zero():
            scale = mine / theirs
            break
    lam = scale * product.f - conic.f
    assert conic.shift(lam) == product
    return lam


def _factor_degenerate(c: Conic) -> LinePair | None:
    """Split a degenerate conic into two lines over the ground field.

    Returns None when the factorization needs a quadratic extension.
    """
    A, B, C, D, E, F = c.coeffs
    field = c.field
    disc = c.leading_discriminant()
    root = disc.sqrt()
    if root is None:
        return None
    if not disc.is_zero():
        if not A.is_zero():
            r1 = (-B + root) / (2 * A)
            r2 = (-B - root) / (2 * A)
            # A*(x - r1*y + w1)(x - r2*y + w2): match the linear coefficients.
            s1 = D / A
            s2 = -E / A
            w1 = (r1 * s1 - s2) / (r1 - r2)
            w2 = s1 - w1
            if A * w1 * w2 != F:
                return None
            return LinePair(Line(field.one, r1, w1), Line(field.one, r2, w2))
        # A = 0, B != 0: (y + w1)(B*x + C*y + w2).
        w1 = D / B
        w2 = E - C * w1
        if w1 * w2 != F:
            return None
        return LinePair(Line(field.zero, -field.one, w1), Line(B, -C, w2))
    # Double direction: the conic is a polynomial in one linear form w.
    if not A.is_zero():
        if 2 * A * E != B * D:
            return None
        m = B / (2 * A)
        s_sum, s_prod = D / A, F / A
    else:
        if not D.is_zero():
            return None
        m = None
        s_sum, s_prod = E / C, F / C
    inner_root = (s_sum * s_sum - 4 * s_prod).sqrt()
    if inner_root is None:
        return None
    v1 = (s_sum + inner_root) / 2
    v2 = (s_sum - inner_root) / 2
    if m is not None:
        return LinePair(Line(field.one, -m, v1), Line(field.one, -m, v2))
    return LinePair(Line(field.zero, -field.one, v1), Line(field.zero, -field.one, v2))


def classify(c: Conic) -> ConicClass:
    if c.is_degenerate():
        pair = _factor_degenerate(c)
        if pair is None:
            return ConicClass("degenerate_irreducible")
        return ConicClass("degenerate_pair", pair)
    disc = c.leading_discriminant()
    if disc.is_zero():
        return ConicClass("parabola")
    if disc.sqrt() is not None:
        return ConicClass("hyperbola")
    return ConicClass("ellipse")


def degenerations(c: Conic) -> DegenerationReport:
    """All constants lam with c + lam reducible over the ground field."""
    A, B, C, D, E = c.a, c.b, c.c, c.d, c.e
    disc = c.leading_discriminant()
    if not disc.is_zero():
        # det3 is linear in the constant coefficient with nonzero slope.
        slope = A * C - B * B / 4
        lam = -c.det3() / slope
        pair = _factor_degenerate(c.shift(lam))
        if pair is None:
            return DegenerationReport(entries=(), absent_witness=disc)
        return DegenerationReport(entries=(Degeneration(lam, pair),))
    # Perfect-square leading form: either a parabola (no degenerations) or
    # a one-parameter family of parallel pairs sharing a midline.
    if not A.is_zero():
        if 2 * A * E != B * D:
            return DegenerationReport(entries=())
        m = B / (2 * A)
        midline = Line(c.field.one, -m, D / (2 * A))
    else:
        if not D.is_zero():
            return DegenerationReport(entries=())
        midline = Line(c.field.zero, -c.field.one, E / (2 * C))
    base = Degeneration(_lambda_for(c, midline, midline), LinePair(midline, midline))
    family = ParallelFamily(c, midline, midline.infinite_point(), base)
    return DegenerationReport(entries=(), family=family)


def center(c: Conic) -> Point | None:
    """Solution of the gradient system; None when it is not unique."""
    det = 4 * c.a * c.c - c.b * c.b
    if det.is_zero():
        return None
    x = (c.b * c.e - 2 * c.c * c.d) / det
    y = (c.b * c.d - 2 * c.a * c.e) / det
    return Point(x, y)


@dataclass(frozen=True)
class Pencil:
    """Generated by the two degenerate conics of the opposite-side pairs."""

    f1: Conic
    f2: Conic

    def member(self, alpha: Scalar, beta: Scalar) -> Conic:
        if alpha.is_zero() and beta.is_zero():
            raise DegenerateInput("pencil member needs (alpha, beta) != (0, 0)")
        return Conic(*(alpha * x + beta * y for x, y in zip(self.f1.coeffs, self.f2.coeffs)))


def pencil_of(q: Quadrilateral) -> Pencil:
    f1 = Conic.from_lines(q.a, q.a2)
    f2 = Conic.from_lines(q.b, q.b2)
    if q.proper:
        assert all(f1.contains(v) and f2.contains(v) for v in q.vertices)
    return Pencil(f1, f2)


def _solve_exact(matrix: list[list[Scalar]], rhs: list[Scalar]) -> list[Scalar] | None:
    """Gauss-Jordan over the field; returns one solution or None."""
    rows = [list(row) + [r] for row, r in zip(matrix, rhs)]
    ncols = len(matrix[0])
    pivot_cols: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = next(
            (i for i in range(rank, len(rows)) if not rows[i][col].is_zero()), None
        )
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        rows[rank] = [x / pivot for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero():
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[rank])]
        pivot_cols.append(col)
        rank += 1
        if rank == len(rows):
            break
    for i in range(rank, len(rows)):
        if not rows[i][ncols].is_zero():
            return None
    zero = matrix[0][0].field.zero
    solution = [zero] * ncols
    for i, col in enumerate(pivot_cols):
        solution[col] = rows[i][ncols]
    return solution


def is_degeneration_of(p: Pencil, pair: LinePair) -> bool:
    """Whether the pair's product equals alpha*f1 + beta*f2 + lam for some
    scalars, decided by an exact linear solve on the six coefficients."""
    product = Conic.from_lines(pair.a, pair.b)
    field = product.field
    one, zero = field.one, field.zero
    unit_constant = (zero, zero, zero, zero, zero, one)
    matrix = [
        [c1, c2, cu]
        for c1, c2, cu in zip(p.f1.coeffs, p.f2.coeffs, unit_constant)
    ]
    return _solve_exact(matrix, list(product.coeffs)) is not None
