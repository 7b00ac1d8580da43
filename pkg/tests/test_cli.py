import xml.etree.ElementTree as ET

from bisectrix.cli import main

E1_QUAD = "Y=0; Y=X+1; X=0; Y=2X-1"
E2_QUAD = "Y=0; X=0; Y=1; X=1"

SVG_NS = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def test_analyze_e1(capsys):
    code, out, _ = run(capsys, "--field", "Q", "--quad", E1_QUAD, "--cmd", "analyze")
    assert code == 0
    assert "centroid: -1/8, 0" in out
    assert "mu: 2" in out
    assert "locus: Y^2 - 2*(X + 1/8)^2 + 1/32" in out
    assert "alpha_beta_gamma: 1 0 -2" in out


def test_analyze_e2_degenerate(capsys):
    code, out, _ = run(capsys, "--field", "Q", "--quad", E2_QUAD, "--cmd", "analyze")
    assert code == 0
    assert "locus_components: Y=1/2, X=1/2" in out
    assert "locus_class: degenerate_pair" in out


def test_analyze_record_round_trip(capsys):
    code, out, _ = run(
        capsys, "--field", "Q", "--quad", E1_QUAD, "--cmd", "analyze",
        "--format", "record",
    )
    assert code == 0
    records = dict(line.split("\t", 1) for line in out)
    from bisectrix import Line, QQ

    for key in ("side_a", "side_b", "side_a2", "side_b2"):
        assert Line.parse(QQ, records[key]) == Line.parse(QQ, records[key])
    assert records["mu"] == "2"
    assert QQ.parse(records["mu"]) == QQ.scalar(2)
    coeffs = [QQ.parse(c) for c in records["locus_conic"].split()]
    assert len(coeffs) == 6


def test_partner(capsys):
    code, out, _ = run(
        capsys, "--field", "Q", "--quad", E1_QUAD, "--cmd", "partner",
        "--line", "Y=X+1",
    )
    assert code == 0
    assert out == ["Y=2X-1"]


def test_partner_not_a_bisector(capsys):
    code, out, err = run(
        capsys, "--field", "Q", "--quad", E1_QUAD, "--cmd", "partner",
        "--line", "X=3",
    )
    assert code == 3
    assert "NotABisector" in err


def test_bisector_point(capsys):
    code, out, _ = run(
        capsys, "--field", "Q", "--quad", E1_QUAD, "--cmd", "bisector",
        "--point", "0,0",
    )
    assert code == 0
    assert out == ["X=0"]


def test_bisector_off_locus(capsys):
    code, out, _ = run(
        capsys, "--field", "Q", "--quad", E1_QUAD, "--cmd", "bisector",
        "--point", "5,5",
    )
    assert code == 0
    assert out == ["none"]


def test_bisector_parallelogram_center(capsys):
    code, out, _ = run(
        capsys, "--field", "Q", "--quad", E2_QUAD, "--cmd", "bisector",
        "--point", "1/2,1/2",
    )
    assert code == 0
    assert out == ["all lines through (1/2, 1/2)"]


def test_invalid_quad_exit_2(capsys):
    code, out, err = run(
        capsys, "--field", "Q", "--quad", "Y=0; Y=1; X=0; Y=X", "--cmd", "analyze"
    )
    assert code == 2
    assert "AdjacentParallel" in err


def test_pencil_member(capsys):
    code, out, _ = run(
        capsys, "--field", "Q", "--quad", E1_QUAD, "--cmd", "pencil",
        "--alpha", "1", "--beta", "1",
    )
    assert code == 0
    assert any(line.startswith("polynomial: ") for line in out)
    assert "class: ellipse" in out


def test_verify_exit_zero(capsys):
    code, out, _ = run(
        capsys, "--field", "GFp:7", "--cmd", "verify", "--seed", "1",
        "--instances", "3",
    )
    assert code == 0
    for line in out:
        parts = line.split()
        assert parts[-1] == "0"
        assert parts[1] == "GF(7)"


def test_verify_fixture_q(capsys):
    code, out, _ = run(
        capsys, "--field", "Q", "--quad", E1_QUAD, "--cmd", "verify"
    )
    assert code == 0


def test_config_file(tmp_path, capsys):
    config = tmp_path / "job.cfg"
    config.write_text(
        f"field Q\nquad {E1_QUAD}\ncmd partner\nline Y=X+1\n", encoding="utf-8"
    )
    code, out, _ = run(capsys, "--config", str(config))
    assert code == 0
    assert out == ["Y=2X-1"]


def test_config_flag_conflict(tmp_path, capsys):
    config = tmp_path / "job.cfg"
    config.write_text("cmd analyze\n", encoding="utf-8")
    code, _, err = run(capsys, "--config", str(config), "--cmd", "verify")
    assert code == 2
    assert "both" in err


def test_config_unknown_key(tmp_path, capsys):
    config = tmp_path / "job.cfg"
    config.write_text("cmd analyze\nbogus 1\n", encoding="utf-8")
    code, _, err = run(capsys, "--config", str(config))
    assert code == 2
    assert "unknown config key" in err


def _counts(svg_path):
    root = ET.parse(svg_path).getroot()
    declared = {}
    meta = root.find(f"{SVG_NS}metadata")
    for item in meta.text.split():
        key, value = item.split("=")
        declared[key] = int(value)
    actual = {
        g.get("id"): len(list(g)) for g in root.findall(f"{SVG_NS}g")
    }
    return declared, actual


def test_plot_locus_structure(tmp_path, capsys):
    out_path = tmp_path / "e1.svg"
    code, out, _ = run(
        capsys, "--field", "Q", "--quad", E1_QUAD, "--cmd", "plot",
        "--what", "locus", "--out", str(out_path),
    )
    assert code == 0
    declared, actual = _counts(out_path)
    assert declared == actual
    assert actual["sides"] == 4
    assert actual["locus"] >= 1
    assert actual["midpoints"] >= 8
    root = ET.parse(out_path).getroot()
    assert root.get("viewBox")
    polylines = root.find(f"{SVG_NS}g[@id='locus']").findall(f"{SVG_NS}polyline")
    assert polylines


def test_plot_bisector_field_sample(tmp_path, capsys):
    out_path = tmp_path / "e2.svg"
    code, out, _ = run(
        capsys, "--field", "Q", "--quad", E2_QUAD, "--cmd", "plot",
        "--what", "bisector-field-sample", "--out", str(out_path),
    )
    assert code == 0
    declared, actual = _counts(out_path)
    assert declared == actual
    # Midlines plus a star of lines through the center.
    assert actual["pairs"] >= 6
    assert actual["midpoints"] >= 5


def test_plot_rejects_finite_field(tmp_path, capsys):
    code, _, err = run(
        capsys, "--field", "GFp:7", "--quad", E1_QUAD, "--cmd", "plot",
        "--what", "locus", "--out", str(tmp_path / "bad.svg"),
    )
    assert code == 2
    assert "over Q" in err


def test_missing_required_args(capsys):
    code, _, err = run(capsys, "--field", "Q", "--cmd", "analyze")
    assert code == 2
    assert "needs --quad" in err
    code, _, err = run(capsys, "--field", "Q", "--cmd", "verify")
    assert code == 2
