"""Definition-level reference computations and theorem verification.

Everything here goes straight to the definitions: bisectors are found by
testing every line of a finite plane against the midpoint condition, never
through the closed-form equations, so this module is the independent side
of every dual-route check.

The sampler is a plain 64-bit linear congruential generator
(state <- state * 6364136223846793005 + 1442695040888963407 mod 2^64,
drawing from the top 32 bits), chosen so any implementation can reproduce
the same instances from the same seed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .bisectors import (
    AllLinesThrough,
    Bisector,
    bisector_field_check,
    bisector_locus,
    bisector_through,
    is_bisector,
    is_q_pair,
    nine_points,
    q_partner,
)
from .errors import ExhaustedSampling, GeometryError, InfiniteField, NotBisectors
from .field import Field, PrimeField, Scalar
from .form import (
    chart_point,
    desargues_involution,
    inner,
    involution_from_pairs,
    lambda_q,
    phi,
    quadratic_data,
)
from .pencil import center, degenerations, is_degeneration_of, pencil_of
from .plane import AffineMap, InfPoint, Line, LinePair, Point, intersect, midpoint
from .quad import Quadrilateral, requadrilate


class Lcg64:
    """Deterministic 64-bit LCG with the Knuth MMIX constants."""

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) & self.MASK
        return self.state

    def below(self, n: int) -> int:
        return (self.next_u64() >> 32) % n


def enumerate_lines(field: Field) -> list[Line]:
    """All p^2 + p affine lines of GF(p)^2 in canonical form."""
    if not isinstance(field, PrimeField):
        raise InfiniteField("line enumeration needs a finite field")
    one, zero = field.one, field.zero
    lines = []
    for t in range(field.p):
        ts = field.scalar(t)
        for v in range(field.p):
            lines.append(Line(ts, one, field.scalar(v)))
    for v in range(field.p):
        lines.append(Line(one, zero, field.scalar(v)))
    return lines


def enumerate_points(field: Field) -> list[Point]:
    if not isinstance(field, PrimeField):
        raise InfiniteField("point enumeration needs a finite field")
    scalars = [field.scalar(i) for i in range(field.p)]
    return [Point(x, y) for x in scalars for y in scalars]


def lines_through(field: Field, p: Point) -> list[Line]:
    """All p + 1 lines of GF(p)^2 through a point."""
    if not isinstance(field, PrimeField):
        raise InfiniteField("line enumeration needs a finite field")
    one, zero = field.one, field.zero
    out = []
    for t in range(field.p):
        ts = field.scalar(t)
        out.append(Line(ts, one, p.y - ts * p.x))
    out.append(Line(one, zero, -p.x))
    return out


def brute_bisectors(q: Quadrilateral) -> set[Bisector]:
    """Every line of the finite plane tested against the definition."""
    if not isinstance(q.field, PrimeField):
        raise InfiniteField("brute-force bisectors need a finite field")
    found = set()
    for line in enumerate_lines(q.field):
        m = is_bisector(q, line)
        if m is not None:
            found.add(Bisector(line, m))
    return found


def closed_form_bisectors(q: Quadrilateral) -> set[Bisector]:
    """The closed-form route: sweep the locus and solve for each midpoint."""
    if not isinstance(q.field, PrimeField):
        raise InfiniteField("locus sweep needs a finite field")
    locus = bisector_locus(q)
    found = set()
    for pt in enumerate_points(q.field):
        if not locus.conic.contains(pt):
            continue
        result = bisector_through(q, pt)
        if isinstance(result, AllLinesThrough):
            for line in lines_through(q.field, result.center):
                found.add(Bisector(line, result.center))
        else:
            found.update(result)
    return found


def random_scalar(field: Field, rng: Lcg64) -> Scalar:
    """Small-height scalar: full residue range over GF(p), numerator in
    [-8, 8] and denominator in [1, 3] over the rationals."""
    if isinstance(field, PrimeField):
        return field.scalar(rng.below(field.p))
    return field.scalar(Fraction(rng.below(17) - 8, rng.below(3) + 1))


def random_line(field: Field, rng: Lcg64) -> Line:
    if isinstance(field, PrimeField):
        i = rng.below(field.p * field.p + field.p)
        if i < field.p * field.p:
            return Line(field.scalar(i // field.p), field.one, field.scalar(i % field.p))
        return Line(field.one, field.zero, field.scalar(i - field.p * field.p))
    if rng.below(8) == 0:
        return Line(field.one, field.zero, random_scalar(field, rng))
    return Line(random_scalar(field, rng), field.one, random_scalar(field, rng))


def random_quadrilateral(field: Field, seed: int, max_tries: int = 10000) -> Quadrilateral:
    """Rejection-sample four lines until they validate; deterministic per seed."""
    rng = Lcg64(seed)
    for _ in range(max_tries):
        try:
            return Quadrilateral(*(random_line(field, rng) for _ in range(4)))
        except GeometryError:
            continue
    raise ExhaustedSampling(f"no valid quadrilateral after {max_tries} tries")


def random_invertible_map(field: Field, rng: Lcg64) -> AffineMap:
    while True:
        entries = [random_scalar(field, rng) for _ in range(4)]
        if not (entries[0] * entries[3] - entries[1] * entries[2]).is_zero():
            return AffineMap.linear(*entries)


@dataclass
class TheoremReport:
    tag: str
    field_name: str
    instances: int
    violations: list[str] = dc_field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        return f"{self.tag} {self.field_name} {self.instances} {len(self.violations)}"


def _side_diag_parallel_pairs(q: Quadrilateral) -> list[tuple[Line, Line]]:
    d1, d2 = q.diagonal_lines
    return [
        (l1, l2)
        for l1, l2 in ((q.a, q.a2), (q.b, q.b2), (d1, d2))
        if l1.is_parallel(l2)
    ]


def _canonical_bisectors(q: Quadrilateral) -> list[Line]:
    """Sides and diagonals, deduplicated (they overlap for improper quads)."""
    seen, out = set(), []
    for line in q.sides + q.diagonal_lines:
        if line not in seen:
            seen.add(line)
            out.append(line)
    return out


def _check_eq1(q, ctx):
    d = quadratic_data(q)
    sides = (q.a, q.b, q.a2, q.b2)
    product = q.field.one
    for l1, l2 in zip(sides, sides[1:] + sides[:1]):
        product = product * (l1.t * l2.u - l2.t * l1.u)
    out = []
    if d.discriminant() != product:
        out.append(f"discriminant {d.discriminant()} != factor product {product}")
    if product.is_zero():
        out.append("discriminant vanished on a valid quadrilateral")
    return 1, out


def _check_opposite_orthogonal(q, ctx):
    d = quadratic_data(q)
    d1, d2 = q.diagonal_lines
    out = []
    for name, l1, l2 in (("A,A'", q.a, q.a2), ("B,B'", q.b, q.b2), ("diagonals", d1, d2)):
        if not inner(d, (l1.u, l1.t), (l2.u, l2.t)).is_zero():
            out.append(f"pair {name} is not Q-orthogonal")
    return 3, out


def _check_lambda_involution(q, ctx):
    d = quadratic_data(q)
    inv = lambda_q(d)
    out = []
    for l1, l2 in ((q.a, q.a2), (q.b, q.b2), q.diagonal_lines):
        if not inv.conjugate(l1.infinite_point(), l2.infinite_point()):
            out.append(f"infinite points of {l1} and {l2} are not conjugate")
    instances = 3
    if ctx.exhaustive:
        field = q.field
        directions = [InfPoint(field.one, field.scalar(t)) for t in range(field.p)]
        directions.append(InfPoint(field.zero, field.one))
        for p in directions:
            fixed = inv.fixes(p)
            null = phi(d, p.x, p.y).is_zero()
            if fixed != null:
                out.append(f"fixed-point/null-direction mismatch at {p}")
        instances += len(directions)
    return instances, out


def _fixture_probe_lines(q) -> list[Line]:
    field = q.field
    candidates = [
        Line.parse(field, "X=3"),
        Line.parse(field, "X=5"),
        Line.parse(field, "Y=7"),
        Line.parse(field, "Y=X+3"),
        Line.parse(field, "Y=2X+5"),
    ]
    out = []
    for line in candidates:
        if all(not line.contains(v) for v in q.vertices) and line not in out:
            out.append(line)
    return out[:4]


def _check_desargues(q, ctx):
    if not q.proper:
        return 0, []
    qr = q.quadrangle()
    if ctx.exhaustive:
        lines = [
            l
            for l in enumerate_lines(q.field)
            if all(not l.contains(v) for v in qr.points)
        ]
    else:
        lines = _fixture_probe_lines(q)
    out = []
    for line in lines:
        pairs = [
            tuple(
                chart_point(line, intersect(line, member))
                for member in side_pair.lines
            )
            for side_pair in qr.opposite_side_pairs()
        ]
        try:
            inv = desargues_involution(qr, line)
            inv13 = involution_from_pairs(pairs[0], pairs[2])
        except GeometryError as err:
            out.append(f"{line}: involution underdetermined ({err})")
            continue
        if inv != inv13:
            out.append(f"{line}: the three conjugate pairs disagree")
        if not inv.conjugate(*pairs[2]):
            out.append(f"{line}: third pair not conjugate")
        bisects = is_bisector(q, line) is not None
        if inv.is_reflection() != bisects:
            out.append(f"{line}: reflection={inv.is_reflection()} but bisector={bisects}")
    return len(lines), out


def _check_vertex_lines(q, ctx):
    canonical = set(_canonical_bisectors(q))
    out = []
    count = 0
    seen_vertices = set(q.vertices)
    for v in seen_vertices:
        for line in lines_through(q.field, v):
            count += 1
            bisects = is_bisector(q, line) is not None
            if bisects != (line in canonical):
                out.append(f"{line} through {v}: bisector={bisects}")
    return count, out


def _check_parallel_bisectors(q, ctx):
    field = q.field
    bis_lines = {b.line for b in ctx.brute(q)}
    parallel_dirs = {l1.infinite_point() for l1, _ in _side_diag_parallel_pairs(q)}
    directions = [(field.scalar(t), field.one) for t in range(field.p)]
    directions.append((field.one, field.zero))
    out = []
    for t, u in directions:
        direction = InfPoint(u, t)
        if u.is_zero():
            class_lines = [Line(field.one, field.zero, field.scalar(v)) for v in range(field.p)]
        else:
            class_lines = [Line(t, u, field.scalar(v)) for v in range(field.p)]
        in_class = [l for l in class_lines if l in bis_lines]
        if direction in parallel_dirs:
            if len(in_class) != len(class_lines):
                out.append(f"direction {direction}: only {len(in_class)} of the class bisect")
        elif len(in_class) > 1:
            out.append(f"direction {direction}: {len(in_class)} distinct parallel bisectors")
    return len(directions), out


def _check_two_three(q, ctx):
    if not q.proper:
        return 0, []
    quads = [c for c in requadrilate(q.quadrangle()) if isinstance(c, Quadrilateral)]
    out = []
    reference = {(b.line, b.midpoint) for b in ctx.brute(q)}
    d_ref = quadratic_data(q)
    triple_ref = (d_ref.alpha, d_ref.beta, d_ref.gamma)
    for other in quads:
        got = {(b.line, b.midpoint) for b in ctx.brute(other)}
        if got != reference:
            out.append("re-pairing changed the bisector set")
        d_other = quadratic_data(other)
        triple_other = (d_other.alpha, d_other.beta, d_other.gamma)
        if any(
            triple_ref[i] * triple_other[j] != triple_ref[j] * triple_other[i]
            for i in range(3)
            for j in range(i + 1, 3)
        ):
            out.append("quadratic data not proportional across re-pairing")
    return len(quads), out


def _check_unique_midpoints(q, ctx):
    by_midpoint: dict[Point, set[Line]] = {}
    for b in ctx.brute(q):
        by_midpoint.setdefault(b.midpoint, set()).add(b.line)
    shared = {m: ls for m, ls in by_midpoint.items() if len(ls) > 1}
    out = []
    if bool(shared) != q.has_parallelogram_vertices():
        out.append(
            f"shared midpoints {sorted(str(m) for m in shared)} vs "
            f"parallelogram-vertices={q.has_parallelogram_vertices()}"
        )
    for m in shared:
        if m != q.centroid:
            out.append(f"shared midpoint {m} is not the centroid")
    return len(by_midpoint), out


def _check_closed_form(q, ctx):
    brute = ctx.brute(q)
    closed = closed_form_bisectors(q)
    out = []
    if brute != closed:
        missing = brute - closed
        extra = closed - brute
        if missing:
            out.append(f"closed form misses {sorted(str(b.line) for b in missing)}")
        if extra:
            out.append(f"closed form invents {sorted(str(b.line) for b in extra)}")
    return len(brute), out


def _check_locus(q, ctx):
    locus = bisector_locus(q)
    out = []
    if locus.center != q.centroid:
        out.append("locus center is not the centroid")
    gradient_center = center(locus.conic)
    if gradient_center is not None and gradient_center != q.centroid:
        out.append("gradient center disagrees with the centroid")
    data = locus.data
    h, k = q.centroid.x, q.centroid.y
    for dp in q.diagonal_points():
        if isinstance(dp, Point):
            if phi(data, dp.x - h, dp.y - k) != locus.constant:
                out.append(f"locus depends on the diagonal point choice at {dp}")
    instances = 1
    if ctx.exhaustive:
        midpoints = {b.midpoint for b in ctx.brute(q)}
        zero_set = {p for p in enumerate_points(q.field) if locus.conic.contains(p)}
        if midpoints != zero_set:
            out.append(
                f"midpoint set ({len(midpoints)}) != zero set ({len(zero_set)})"
            )
        instances += len(zero_set)
    else:
        for line in _canonical_bisectors(q):
            m = is_bisector(q, line)
            if m is None:
                out.append(f"canonical line {line} does not bisect")
            elif not locus.conic.contains(m):
                out.append(f"midpoint {m} of {line} is off the locus")
            instances += 1
    return instances, out


def _check_degeneracy(q, ctx):
    locus = bisector_locus(q)
    has_parallel = bool(_side_diag_parallel_pairs(q))
    out = []
    if (locus.components is not None) != has_parallel:
        out.append("degeneracy does not match the parallel-pair criterion")
    if locus.conic.is_degenerate() != has_parallel:
        out.append("determinant degeneracy disagrees with the criterion")
    if locus.components is not None:
        for component in locus.components:
            if not component.contains(q.centroid):
                out.append(f"component {component} misses the centroid")
    return 1, out


def _check_nine_points(q, ctx):
    if not q.proper:
        return 0, []
    locus = bisector_locus(q)
    pts = nine_points(q.quadrangle())
    out = []
    for p in pts:
        if not locus.contains(p):
            out.append(f"nine-point {p} is off the locus")
    return len(pts), out


def _member_degeneration_entries(member, field, exhaustive):
    """All degenerations of a pencil member that exist over the field."""
    report = degenerations(member)
    entries = list(report.entries)
    if report.family is not None:
        if exhaustive:
            offsets = range((field.p + 1) // 2)
        else:
            offsets = (0, 1, 2)
        for r in offsets:
            entries.append(report.family.pair_at_offset(field.scalar(r)))
    return entries


def _pencil_members(q, ctx):
    pen = pencil_of(q)
    field = q.field
    members = []
    if ctx.exhaustive:
        for t in range(field.p):
            members.append(pen.member(field.one, field.scalar(t)))
        members.append(pen.member(field.zero, field.one))
    else:
        for alpha, beta in ((1, 0), (0, 1), (1, 1), (1, -1), (2, 3)):
            members.append(pen.member(field.scalar(alpha), field.scalar(beta)))
    return pen, members


def _check_pencil_degenerations(q, ctx):
    pen, members = _pencil_members(q, ctx)
    locus = bisector_locus(q)
    out = []
    seen_lines = set()
    for member in members:
        for entry in _member_degeneration_entries(member, q.field, ctx.exhaustive):
            try:
                if not is_q_pair(q, entry.pair):
                    out.append(f"degeneration {entry.pair} is not a Q-pair")
            except NotBisectors:
                out.append(f"degeneration {entry.pair} contains a non-bisector")
            seen_lines.update(entry.pair.lines)
        if not member.is_degenerate():
            ctr = center(member)
            if ctr is not None and not locus.conic.contains(ctr):
                out.append(f"center {ctr} of a pencil member is off the locus")
    if ctx.exhaustive:
        bis_lines = {b.line for b in ctx.brute(q)}
        if seen_lines != bis_lines:
            out.append(
                f"degeneration lines ({len(seen_lines)}) != bisectors ({len(bis_lines)})"
            )
    # Converse: every bisector pairs with its partner into a degeneration.
    if ctx.exhaustive:
        lines = [b.line for b in ctx.brute(q)]
    else:
        lines = _canonical_bisectors(q)
    for line in lines:
        partner = q_partner(q, line)
        if not is_degeneration_of(pen, LinePair(line, partner)):
            out.append(f"pair {{{line}, {partner}}} is not a pencil degeneration")
    return len(members) + len(lines), out


def _q_pairs_of(q, lines) -> list[LinePair]:
    pairs, seen = [], set()
    for line in lines:
        pair = LinePair(line, q_partner(q, line))
        if pair not in seen:
            seen.add(pair)
            pairs.append(pair)
    return pairs


def _check_bisector_field(q, ctx):
    if ctx.exhaustive:
        lines = [b.line for b in ctx.brute(q)]
    else:
        lines = _canonical_bisectors(q)
    pairs = _q_pairs_of(q, lines)
    report = bisector_field_check(q, pairs)
    return report.lines_checked, list(report.violations)


def _check_partner_involution(q, ctx):
    if ctx.exhaustive:
        lines = [b.line for b in ctx.brute(q)]
    else:
        lines = _canonical_bisectors(q)
    out = []
    for line in lines:
        partner = q_partner(q, line)
        try:
            if not is_q_pair(q, LinePair(line, partner)):
                out.append(f"{{{line}, {partner}}} is not a Q-pair")
        except NotBisectors:
            out.append(f"partner {partner} of {line} is not a bisector")
        if q_partner(q, partner) != line:
            out.append(f"partner involution fails at {line}")
    return len(lines), out


def _check_pair_redundancy(q, ctx):
    bis = sorted(ctx.brute(q), key=lambda b: b.line.sort_key())
    d = quadratic_data(q)
    parallel_dirs = {l1.infinite_point() for l1, _ in _side_diag_parallel_pairs(q)}
    out = []
    count = 0
    for i in range(len(bis)):
        for j in range(i, len(bis)):
            b1, b2 = bis[i], bis[j]
            count += 1
            orth = inner(d, (b1.line.u, b1.line.t), (b2.line.u, b2.line.t)).is_zero()
            anti = midpoint(b1.midpoint, b2.midpoint) == q.centroid
            both_parallel = (
                b1.line.infinite_point() in parallel_dirs
                and b2.line.infinite_point() in parallel_dirs
            )
            if orth and not both_parallel and not anti:
                out.append(f"orthogonal pair {{{b1.line}, {b2.line}}} is not antipodal")
            if anti and b1.midpoint != b2.midpoint and not orth:
                out.append(f"antipodal pair {{{b1.line}, {b2.line}}} is not orthogonal")
    return count, out


def _check_affine_invariance(q, ctx):
    rng = Lcg64(ctx.seed ^ 0x5EED)
    field = q.field
    out = []
    trials = 5 if ctx.exhaustive else 10
    for _ in range(trials):
        f = random_invertible_map(field, rng)
        fq = q.transform(f)
        d_q = quadratic_data(q)
        d_fq = quadratic_data(fq)
        basis = [
            (field.one, field.zero),
            (field.zero, field.one),
            (field.one, field.one),
        ]
        lam = None
        for v in basis:
            for w in basis:
                fv = (f.m00 * v[0] + f.m01 * v[1], f.m10 * v[0] + f.m11 * v[1])
                fw = (f.m00 * w[0] + f.m01 * w[1], f.m10 * w[0] + f.m11 * w[1])
                denom = inner(d_fq, fv, fw)
                if not denom.is_zero():
                    lam = inner(d_q, v, w) / denom
                    break
            if lam is not None:
                break
        if lam is None:
            out.append("no probe pair with nonzero inner product")
            continue
        for _ in range(10):
            v = (random_scalar(field, rng), random_scalar(field, rng))
            w = (random_scalar(field, rng), random_scalar(field, rng))
            fv = (f.m00 * v[0] + f.m01 * v[1], f.m10 * v[0] + f.m11 * v[1])
            fw = (f.m00 * w[0] + f.m01 * w[1], f.m10 * w[0] + f.m11 * w[1])
            if inner(d_q, v, w) != lam * inner(d_fq, fv, fw):
                out.append(f"lambda {lam} fails on a sampled vector pair")
                break
    return trials, out


_CHECKS = (
    ("eq1_discriminant", False, _check_eq1),
    ("opposite_orthogonal", False, _check_opposite_orthogonal),
    ("lambda_involution", False, _check_lambda_involution),
    ("desargues_reflection", False, _check_desargues),
    ("vertex_line_bisectors", True, _check_vertex_lines),
    ("parallel_bisectors", True, _check_parallel_bisectors),
    ("repairing_bisectors", True, _check_two_three),
    ("unique_midpoints", True, _check_unique_midpoints),
    ("closed_form_oracle", True, _check_closed_form),
    ("locus_midpoints", False, _check_locus),
    ("locus_degeneracy", False, _check_degeneracy),
    ("nine_points", False, _check_nine_points),
    ("pencil_degenerations", False, _check_pencil_degenerations),
    ("bisector_field", False, _check_bisector_field),
    ("partner_involution", False, _check_partner_involution),
    ("pair_redundancy", True, _check_pair_redundancy),
    ("affine_invariance", False, _check_affine_invariance),
)


class _Context:
    def __init__(self, exhaustive: bool, seed: int):
        self.exhaustive = exhaustive
        self.seed = seed
        self._brute_cache: dict[Quadrilateral, set[Bisector]] = {}

    def brute(self, q: Quadrilateral) -> set[Bisector]:
        cached = self._brute_cache.get(q)
        if cached is None:
            cached = self._brute_cache[q] = brute_bisectors(q)
        return cached


def verify_all(q: Quadrilateral, profile: str = "fixture", seed: int = 0) -> list[TheoremReport]:
    """Run the registered theorem checks against one quadrilateral.

    profile "fixture" runs the non-enumerative checks over any field;
    "exhaustive" additionally sweeps every line, point and pencil member
    and requires a finite field.
    """
    if profile not in ("fixture", "exhaustive"):
        raise ValueError(f"unknown profile {profile!r}")
    exhaustive = profile == "exhaustive"
    if exhaustive and not isinstance(q.field, PrimeField):
        raise InfiniteField("exhaustive verification needs a finite field")
    ctx = _Context(exhaustive, seed)
    reports = []
    for tag, needs_exhaustive, fn in _CHECKS:
        if needs_exhaustive and not exhaustive:
            continue
        start = time.perf_counter()
        try:
            instances, violations = fn(q, ctx)
        except (GeometryError, AssertionError) as err:
            # A crashing check is a failed check, not an aborted run.
            instances, violations = 0, [f"check aborted: {type(err).__name__}: {err}"]
        reports.append(
            TheoremReport(
                tag=tag,
                field_name=q.field.name,
                instances=instances,
                violations=violations,
                elapsed=time.perf_counter() - start,
            )
        )
    return reports
