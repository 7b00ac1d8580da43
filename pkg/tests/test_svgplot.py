from fractions import Fraction

import pytest

from bisectrix import QQ, Point, bisector_locus
from bisectrix.errors import GeometryError
from bisectrix.svgplot import rational_conic_points, render_svg


def test_rational_conic_points_are_exact(e1):
    locus = bisector_locus(e1)
    base = Point(QQ.zero, QQ.zero)  # the diagonal point A.A' is on the locus
    assert locus.conic.contains(base)
    slopes = [Fraction(k, 3) for k in range(-5, 6)]
    points = rational_conic_points(locus.conic, base, slopes)
    assert len(points) >= 5
    for p in points:
        assert locus.conic.contains(p)
        assert p != base


def test_render_svg_rejects_unknown_kind(e1):
    with pytest.raises(GeometryError):
        render_svg(e1, "nonsense")


def test_render_svg_improper(improper):
    document = render_svg(improper, "locus")
    assert document.startswith("<svg")
    assert "midpoints" in document


def test_render_svg_pencil_sample(e1):
    document = render_svg(e1, "pencil-sample")
    assert 'id="members"' in document
    assert "polyline" in document
