from __future__ import annotations

import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from koebetri import figures
from koebetri.figures import FIGURE_KINDS, FigureSpec, figure_data, render_figure
from koebetri.objective import koebe_radius, suffridge_radius


def test_spec_validation():
    FigureSpec(kind="tangent", fold=3, samples=64)
    with pytest.raises(ValueError):
        FigureSpec(kind="nope", fold=3, samples=64)
    with pytest.raises(ValueError):
        FigureSpec(kind="tangent", fold=0, samples=64)
    with pytest.raises(ValueError):
        FigureSpec(kind="tangent", fold=3, samples=32)
    with pytest.raises(ValueError):
        FigureSpec(kind="tangent", fold=3, samples=64, overlays=("bogus",))


def test_all_kinds_render(tmp_path):
    for kind in FIGURE_KINDS:
        spec = FigureSpec(kind=kind, fold=3, samples=64)
        svg, csv, png = render_figure(spec, tmp_path / kind)
        assert svg.exists() and csv.exists() and png.exists()
        root = ET.parse(svg).getroot()
        assert "viewBox" in root.attrib
        assert png.stat().st_size > 0


def test_csv_sample_counts():
    n = 96
    assert len(figure_data(FigureSpec(kind="circle-image", fold=2, samples=n)).csv_rows) == n
    assert len(figure_data(FigureSpec(kind="domain-boundary", fold=2, samples=n)).csv_rows) == 5 * n
    assert len(figure_data(FigureSpec(kind="tangent", fold=2, samples=n)).csv_rows) == n + 2
    assert len(figure_data(FigureSpec(kind="disks-comparison", fold=2, samples=n)).csv_rows) == 4 * n


def test_csv_headers():
    assert figure_data(FigureSpec(kind="circle-image", fold=1, samples=64)).csv_header == ("phi", "re", "im")
    assert figure_data(FigureSpec(kind="domain-boundary", fold=1, samples=64)).csv_header == ("curve", "t", "a", "b")
    assert figure_data(FigureSpec(kind="disks-comparison", fold=1, samples=64)).csv_header == ("curve", "phi", "re", "im")


def test_csv_bit_stable(tmp_path):
    spec = FigureSpec(kind="domain-boundary", fold=3, samples=64)
    _, csv1, _ = render_figure(spec, tmp_path / "one")
    _, csv2, _ = render_figure(spec, tmp_path / "two")
    assert csv1.read_bytes() == csv2.read_bytes()


def test_circle_image_rotation_symmetry():
    n = 3 * 64
    data = figure_data(FigureSpec(kind="circle-image", fold=3, samples=n))
    w = np.array([complex(row[1], row[2]) for row in data.csv_rows])
    rotated = w * np.exp(2j * math.pi / 3.0)
    assert float(np.max(np.abs(np.roll(w, -64) - rotated))) < 1e-9


def test_domain_boundary_has_five_curves():
    data = figure_data(FigureSpec(kind="domain-boundary", fold=3, samples=64))
    names = {name for name, _, _ in data.paths}
    assert names == {"gamma1", "gamma2+", "gamma2-", "gamma3+", "gamma3-"}
    # corner of the top edge joins the positive arc endpoint
    by_name = {name: (xs, ys) for name, xs, ys in data.paths}
    g1x, g1y = by_name["gamma1"]
    g3x, g3y = by_name["gamma3+"]
    assert abs(g1x[-1] - g3x[-1]) < 1e-9
    assert abs(g1y[-1] - g3y[-1]) < 1e-9


def test_disks_comparison_radii():
    data = figure_data(FigureSpec(kind="disks-comparison", fold=3, samples=64))
    radii = sorted(r for _, _, r in data.circles)
    assert abs(radii[0] - koebe_radius(3)) < 1e-12
    assert abs(radii[1] - suffridge_radius(0.25)) < 1e-12
    assert abs(radii[0] - 0.6902785) < 1e-6
    assert abs(radii[1] - 0.6991180) < 1e-6


def test_tangent_rows_on_tangent_line():
    data = figure_data(FigureSpec(kind="tangent", fold=3, samples=64))
    r = koebe_radius(3)
    rows = [row for row in data.csv_rows if row[0] == "tangent"]
    assert len(rows) == 2
    for _, _, x, y in rows:
        assert abs(-x + y - (-1.0 + r)) < 1e-12


def test_svg_polyline_count(tmp_path):
    spec = FigureSpec(kind="domain-boundary", fold=2, samples=64)
    svg, _, _ = render_figure(spec, tmp_path / "fig")
    root = ET.parse(svg).getroot()
    ns = {"s": "http://www.w3.org/2000/svg"}
    polylines = root.findall(".//s:polyline", ns)
    assert len(polylines) == 5
    for p in polylines:
        assert p.get("points")
