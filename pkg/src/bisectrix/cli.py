"""Command-line interface.

One flag set drives every command:

    bisectrix --field Q --quad "Y=0; Y=X+1; X=0; Y=2X-1" --cmd analyze

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 domain
error (e.g. asking for the partner of a non-bisector).  Output format
"record" prints tab-separated key/value lines whose exact values parse
back bit-for-bit; "text" is for people.  Config may come from a file of
"key value" lines via --config; a key given both there and as a flag is
rejected rather than silently resolved.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .bisectors import (
    AllLinesThrough,
    bisector_locus,
    bisector_through,
    q_partner,
)
from .errors import GeometryError, NotABisector
from .field import Field, GF, PrimeField, QQ, Scalar
from .form import quadratic_data
from .oracle import TheoremReport, random_quadrilateral, verify_all
from .pencil import classify, degenerations
from .plane import InfPoint, Line, PlanePoint, Point
from .quad import Quadrilateral, standard_form
from .svgplot import PLOT_KINDS, render_svg

_CONFIG_KEYS = (
    "field", "quad", "cmd", "seed", "out", "format",
    "point", "line", "alpha", "beta", "what", "instances",
)

_COMMANDS = ("analyze", "bisector", "partner", "pencil", "verify", "plot")


class ConfigError(Exception):
    pass


@dataclass
class JobConfig:
    field: Field
    cmd: str
    quad: Quadrilateral | None
    seed: int
    out: str | None
    format: str
    point: Point | None
    line: Line | None
    alpha: Scalar | None
    beta: Scalar | None
    what: str | None
    instances: int


def _parse_field(text: str) -> Field:
    if text == "Q":
        return QQ
    if text.startswith("GFp:"):
        try:
            return GF(int(text[4:]))
        except ValueError as err:
            raise ConfigError(f"bad field {text!r}: {err}") from err
    raise ConfigError(f"bad field {text!r}: expected Q or GFp:<p>")


def _parse_quad(field: Field, text: str) -> Quadrilateral:
    parts = [p for p in text.split(";") if p.strip()]
    if len(parts) != 4:
        raise ConfigError("quad needs four ';'-separated line literals A;B;A';B'")
    return Quadrilateral(*(Line.parse(field, p) for p in parts))


def _parse_point(field: Field, text: str) -> Point:
    cleaned = text.strip().strip("()")
    parts = cleaned.replace(",", " ").split()
    if len(parts) != 2:
        raise ConfigError(f"bad point {text!r}: expected two scalars")
    return Point(field.parse(parts[0]), field.parse(parts[1]))


def _read_config_file(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for raw in handle:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                key, _, value = line.partition("\t")
                if not value:
                    key, _, value = line.partition(" ")
                key, value = key.strip(), value.strip()
                if key not in _CONFIG_KEYS:
                    raise ConfigError(f"unknown config key {key!r}")
                if key in out:
                    raise ConfigError(f"duplicate config key {key!r}")
                out[key] = value
    except OSError as err:
        raise ConfigError(f"cannot read config {path!r}: {err}") from err
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bisectrix",
        description="Exact bisector geometry of quadrilaterals over Q and GF(p).",
    )
    parser.add_argument("--config", help="config file of 'key value' lines")
    parser.add_argument("--field", help="Q or GFp:<p>")
    parser.add_argument("--quad", help="four line literals: \"A; B; A'; B'\"")
    parser.add_argument("--cmd", choices=_COMMANDS)
    parser.add_argument("--seed", help="PRNG seed (default 0)")
    parser.add_argument("--out", help="output path (plot)")
    parser.add_argument("--format", choices=("text", "record", "svg"))
    parser.add_argument("--point", help="midpoint 'x,y' (bisector)")
    parser.add_argument("--line", help="line literal (partner)")
    parser.add_argument("--alpha", help="pencil coefficient")
    parser.add_argument("--beta", help="pencil coefficient")
    parser.add_argument("--what", choices=PLOT_KINDS, help="plot kind")
    parser.add_argument("--instances", help="random instances (verify)")
    return parser


def load_config(argv) -> JobConfig:
    args = _build_parser().parse_args(argv)
    merged: dict[str, str] = {}
    if args.config:
        merged.update(_read_config_file(args.config))
    for key in _CONFIG_KEYS:
        value = getattr(args, key)
        if value is None:
            continue
        if key in merged:
            raise ConfigError(f"key {key!r} given both in config file and as a flag")
        merged[key] = value
    if "cmd" not in merged:
        raise ConfigError("missing --cmd")
    cmd = merged["cmd"]
    if cmd not in _COMMANDS:
        raise ConfigError(f"unknown command {cmd!r}")
    field = _parse_field(merged.get("field", "Q"))
    fmt = merged.get("format", "text")
    if fmt not in ("text", "record", "svg"):
        raise ConfigError(f"unknown format {fmt!r}")
    try:
        seed = int(merged.get("seed", "0"))
        instances = int(merged.get("instances", "0"))
    except ValueError as err:
        raise ConfigError(str(err)) from err
    try:
        quad = _parse_quad(field, merged["quad"]) if "quad" in merged else None
        point = _parse_point(field, merged["point"]) if "point" in merged else None
        line = Line.parse(field, merged["line"]) if "line" in merged else None
        alpha = field.parse(merged["alpha"]) if "alpha" in merged else None
        beta = field.parse(merged["beta"]) if "beta" in merged else None
    except GeometryError:
        raise
    except (ValueError, ZeroDivisionError) as err:
        raise ConfigError(str(err)) from err
    what = merged.get("what")
    if what is not None and what not in PLOT_KINDS:
        raise ConfigError(f"unknown plot kind {what!r}")
    return JobConfig(
        field=field,
        cmd=cmd,
        quad=quad,
        seed=seed,
        out=merged.get("out"),
        format=fmt,
        point=point,
        line=line,
        alpha=alpha,
        beta=beta,
        what=what,
        instances=instances,
    )


def _render_point(p: PlanePoint) -> str:
    if isinstance(p, InfPoint):
        return f"{p.x}:{p.y}:0"
    return f"{p.x} {p.y}"


def _signed_term(sign_terms: list[tuple[str, str]]) -> str:
    if not sign_terms:
        return "0"
    head_sign, head = sign_terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in sign_terms[1:]:
        out += f" {sign} {body}"
    return out


def _term(coeff: Scalar, body: str) -> tuple[str, str] | None:
    if coeff.is_zero():
        return None
    text = str(coeff)
    sign = "-" if text.startswith("-") else "+"
    mag = text[1:] if text.startswith("-") else text
    if body and mag == "1":
        return (sign, body)
    if body:
        return (sign, f"{mag}*{body}")
    return (sign, mag)


def _phi_string(alpha: Scalar, beta: Scalar, gamma: Scalar) -> str:
    terms = [
        _term(alpha, "Y^2"),
        _term(-2 * beta, "X*Y"),
        _term(gamma, "X^2"),
    ]
    return _signed_term([t for t in terms if t is not None])


def _centered_factor(var: str, shift: Scalar) -> str:
    if shift.is_zero():
        return var
    text = str(-shift)
    if text.startswith("-"):
        return f"({var} - {text[1:]})"
    return f"({var} + {text})"


def _locus_string(locus) -> str:
    data = locus.data
    h, k = locus.center.x, locus.center.y
    fx = _centered_factor("X", h)
    fy = _centered_factor("Y", k)
    terms = [
        _term(data.alpha, f"{fy}^2"),
        _term(-2 * data.beta, f"{fx}*{fy}"),
        _term(data.gamma, f"{fx}^2"),
        _term(-locus.constant, ""),
    ]
    return _signed_term([t for t in terms if t is not None])


def _emit(records: list[tuple[str, str]], fmt: str) -> list[str]:
    if fmt == "record":
        return [f"{key}\t{value}" for key, value in records]
    return [f"{key}: {value}" for key, value in records]


def cmd_analyze(cfg: JobConfig) -> tuple[int, list[str]]:
    q = cfg.quad
    d = quadratic_data(q)
    f, std, mu = standard_form(q)
    locus = bisector_locus(q)
    records = [
        ("field", cfg.field.name),
        ("side_a", str(q.a)),
        ("side_b", str(q.b)),
        ("side_a2", str(q.a2)),
        ("side_b2", str(q.b2)),
        ("proper", "true" if q.proper else "false"),
    ]
    for i, v in enumerate(q.vertices):
        records.append((f"vertex_{i}", _render_point(v)))
    records.append(("centroid", f"{q.centroid.x}, {q.centroid.y}"))
    records.append(("alpha_beta_gamma", f"{d.alpha} {d.beta} {d.gamma}"))
    records.append(("phi", _phi_string(d.alpha, d.beta, d.gamma)))
    records.append(("mu", str(mu)))
    records.append(
        ("map", f"{f.m00} {f.m01} {f.m10} {f.m11} {f.b0} {f.b1}")
    )
    records.append(("locus", _locus_string(locus)))
    records.append(("locus_conic", " ".join(str(c) for c in locus.conic.coeffs)))
    records.append(("locus_class", classify(locus.conic).kind))
    if locus.components is not None:
        records.append(
            ("locus_components", ", ".join(str(c) for c in locus.components))
        )
    for i, dp in enumerate(q.diagonal_points()):
        records.append((f"diagonal_point_{i}", _render_point(dp)))
    return 0, _emit(records, cfg.format)


def cmd_bisector(cfg: JobConfig) -> tuple[int, list[str]]:
    found = bisector_through(cfg.quad, cfg.point)
    if isinstance(found, AllLinesThrough):
        text = f"all lines through ({found.center.x}, {found.center.y})"
        if cfg.format == "record":
            return 0, [f"bisector\t{text}"]
        return 0, [text]
    if not found:
        return 0, (["bisector\tnone"] if cfg.format == "record" else ["none"])
    lines = []
    for b in found:
        if cfg.format == "record":
            lines.append(f"bisector\t{b.line}")
            lines.append(f"midpoint\t{_render_point(b.midpoint)}")
        else:
            lines.append(str(b.line))
    return 0, lines


def cmd_partner(cfg: JobConfig) -> tuple[int, list[str]]:
    partner = q_partner(cfg.quad, cfg.line)
    if cfg.format == "record":
        return 0, [f"partner\t{partner}"]
    return 0, [str(partner)]


def cmd_pencil(cfg: JobConfig) -> tuple[int, list[str]]:
    from .pencil import pencil_of

    alpha = cfg.alpha if cfg.alpha is not None else cfg.field.one
    beta = cfg.beta if cfg.beta is not None else cfg.field.zero
    member = pencil_of(cfg.quad).member(alpha, beta)
    records = [
        ("conic", " ".join(str(c) for c in member.coeffs)),
        ("polynomial", str(member)),
        ("class", str(classify(member))),
    ]
    report = degenerations(member)
    if report.entries:
        for entry in report.entries:
            records.append(
                ("degeneration", f"{entry.pair.a}, {entry.pair.b} at lambda={entry.lam}")
            )
    elif report.family is not None:
        records.append(
            (
                "degeneration_family",
                f"parallel pairs with midline {report.family.midline}",
            )
        )
    elif report.absent_witness is not None:
        records.append(
            ("degeneration", f"absent over {cfg.field.name}"
             f" (nonsquare discriminant {report.absent_witness})")
        )
    else:
        records.append(("degeneration", "none"))
    return 0, _emit(records, cfg.format)


def _aggregate(reports: list[TheoremReport]) -> list[TheoremReport]:
    by_tag: dict[str, TheoremReport] = {}
    for r in reports:
        agg = by_tag.get(r.tag)
        if agg is None:
            by_tag[r.tag] = TheoremReport(
                r.tag, r.field_name, r.instances, list(r.violations), r.elapsed
            )
        else:
            agg.instances += r.instances
            agg.violations.extend(r.violations)
            agg.elapsed += r.elapsed
    return list(by_tag.values())


def cmd_verify(cfg: JobConfig) -> tuple[int, list[str]]:
    profile = "exhaustive" if isinstance(cfg.field, PrimeField) else "fixture"
    reports: list[TheoremReport] = []
    if cfg.quad is not None:
        reports.extend(verify_all(cfg.quad, profile, seed=cfg.seed))
    for i in range(cfg.instances):
        q = random_quadrilateral(cfg.field, cfg.seed + i)
        reports.extend(verify_all(q, profile, seed=cfg.seed + i))
    if not reports:
        raise ConfigError("verify needs --quad and/or --instances")
    lines = [r.summary() for r in _aggregate(reports)]
    failures = [r for r in reports if not r.passed]
    for r in failures:
        for violation in r.violations:
            lines.append(f"violation {r.tag}: {violation}")
    return (1 if failures else 0), lines


def cmd_plot(cfg: JobConfig) -> tuple[int, list[str]]:
    if not isinstance(cfg.field, type(QQ)):
        raise ConfigError("plotting is only available over Q (no embedding of GF(p))")
    if cfg.out is None:
        raise ConfigError("plot needs --out PATH")
    what = cfg.what or "locus"
    document = render_svg(cfg.quad, what)
    with open(cfg.out, "w", encoding="utf-8") as handle:
        handle.write(document)
    return 0, [f"wrote {cfg.out}"]


def dispatch(cfg: JobConfig) -> tuple[int, list[str]]:
    needs_quad = cfg.cmd in ("analyze", "bisector", "partner", "pencil", "plot")
    if needs_quad and cfg.quad is None:
        raise ConfigError(f"{cfg.cmd} needs --quad")
    if cfg.cmd == "bisector" and cfg.point is None:
        raise ConfigError("bisector needs --point")
    if cfg.cmd == "partner" and cfg.line is None:
        raise ConfigError("partner needs --line")
    if cfg.cmd == "analyze":
        return cmd_analyze(cfg)
    if cfg.cmd == "bisector":
        return cmd_bisector(cfg)
    if cfg.cmd == "partner":
        return cmd_partner(cfg)
    if cfg.cmd == "pencil":
        return cmd_pencil(cfg)
    if cfg.cmd == "verify":
        return cmd_verify(cfg)
    return cmd_plot(cfg)


def main(argv=None) -> int:
    try:
        cfg = load_config(argv)
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except GeometryError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2
    try:
        code, lines = dispatch(cfg)
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except NotABisector as err:
        print(f"error: NotABisector: {err}", file=sys.stderr)
        return 3
    except GeometryError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
