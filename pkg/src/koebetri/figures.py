"""Figure rendering: hand-built SVG, sibling CSV of the raw samples, and a
matplotlib PNG alongside.

Four figure kinds:

* ``circle-image``: the unit-circle image under the extremal trinomial.
* ``domain-boundary``: all five boundary curves of the univalence domain.
* ``tangent``: the positive arc with the tangent line -x + y = -1 + r at the
  extremal coefficient point.
* ``disks-comparison``: unit-circle images of the extremal and corner
  trinomials, with the circles of their two covering radii.

The CSV is the contract surface (bit-stable across runs, 17 significant
digits); the SVG carries geometry only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import domain
from .domain import CurveId
from .objective import extremal_coeffs, koebe_radius, suffridge_radius

FIGURE_KINDS = ("circle-image", "domain-boundary", "tangent", "disks-comparison")
OVERLAY_NAMES = ("extremal", "suffridge", "disk(r)", "disk(R)", "tangent-line")

_DEFAULT_OVERLAYS = {
    "circle-image": (),
    "domain-boundary": (),
    "tangent": ("tangent-line", "extremal"),
    "disks-comparison": ("disk(r)", "disk(R)"),
}
_TANGENT_SPAN = 0.15


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    fold: int
    samples: int = 512
    overlays: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in FIGURE_KINDS:
            raise ValueError(f"kind must be one of {FIGURE_KINDS}, got {self.kind!r}")
        if self.fold < 1:
            raise ValueError(f"fold must be >= 1, got {self.fold}")
        if self.samples < 64:
            raise ValueError(f"samples must be >= 64, got {self.samples}")
        object.__setattr__(self, "overlays", tuple(self.overlays))
        for name in self.overlays:
            if name not in OVERLAY_NAMES:
                raise ValueError(f"unknown overlay {name!r}; allowed: {OVERLAY_NAMES}")


@dataclass
class FigureData:
    """Resolved geometry: world-coordinate paths plus the CSV sample table."""

    title: str
    csv_header: tuple[str, ...]
    csv_rows: list[tuple] = field(default_factory=list)
    paths: list[tuple[str, np.ndarray, np.ndarray]] = field(default_factory=list)
    circles: list[tuple[float, float, float]] = field(default_factory=list)
    segments: list[tuple[float, float, float, float]] = field(default_factory=list)
    markers: list[tuple[float, float]] = field(default_factory=list)


def _circle_image(fold: int, a: float, b: float, samples: int) -> tuple[np.ndarray, np.ndarray]:
    varphi = 2.0 * math.pi * np.arange(samples) / samples
    z = np.exp(1j * varphi)
    zp = z**fold
    w = z * (1.0 + zp * (a + b * zp))
    return varphi, w


def _effective_overlays(spec: FigureSpec) -> tuple[str, ...]:
    names = list(_DEFAULT_OVERLAYS[spec.kind])
    for name in spec.overlays:
        if name not in names:
            names.append(name)
    return tuple(names)


def _apply_domain_overlays(data: FigureData, spec: FigureSpec) -> None:
    alpha = 1.0 / (1 + spec.fold)
    for name in _effective_overlays(spec):
        if name == "extremal":
            data.markers.append(extremal_coeffs(spec.fold))
        elif name == "suffridge":
            p = domain.suffridge_point(alpha)
            data.markers.append((p.a, p.b))
        elif name == "tangent-line":
            a0, b0 = extremal_coeffs(spec.fold)
            d = _TANGENT_SPAN
            data.segments.append((a0 - d, b0 - d, a0 + d, b0 + d))
        # disk overlays have no meaning in coefficient space


def _apply_image_overlays(data: FigureData, spec: FigureSpec) -> None:
    for name in _effective_overlays(spec):
        if name == "disk(r)":
            data.circles.append((0.0, 0.0, koebe_radius(spec.fold)))
        elif name == "disk(R)":
            data.circles.append((0.0, 0.0, suffridge_radius(1.0 / (1 + spec.fold))))


def figure_data(spec: FigureSpec) -> FigureData:
    """Sample the geometry for one figure kind."""
    fold = spec.fold
    alpha = 1.0 / (1 + fold)
    n = spec.samples

    if spec.kind == "circle-image":
        a0, b0 = extremal_coeffs(fold)
        varphi, w = _circle_image(fold, a0, b0, n)
        data = FigureData(title=f"Unit-circle image, fold {fold}", csv_header=("phi", "re", "im"))
        data.csv_rows = [(p, z.real, z.imag) for p, z in zip(varphi, w)]
        xs = np.append(w.real, w.real[0])
        ys = np.append(w.imag, w.imag[0])
        data.paths.append(("image", xs, ys))
        _apply_image_overlays(data, spec)
        return data

    if spec.kind == "domain-boundary":
        lim = domain.gamma1_halfwidth(alpha)
        t2max = domain.gamma2_tmax(alpha)
        grids = {
            CurveId.GAMMA1: np.linspace(-lim, lim, n),
            CurveId.GAMMA2_PLUS: np.linspace(0.0, t2max, n),
            CurveId.GAMMA2_MINUS: np.linspace(0.0, t2max, n),
            CurveId.GAMMA3_PLUS: np.linspace(0.0, math.pi / 2.0, n),
            CurveId.GAMMA3_MINUS: np.linspace(0.0, math.pi / 2.0, n),
        }
        data = FigureData(
            title=f"Univalence domain boundary, fold {fold}",
            csv_header=("curve", "t", "a", "b"),
        )
        for curve, t in grids.items():
            pts = domain._curve_points(alpha, curve, t)
            data.csv_rows.extend(
                (curve.value, tk, ak, bk) for tk, (ak, bk) in zip(t, pts)
            )
            data.paths.append((curve.value, pts[:, 0], pts[:, 1]))
        _apply_domain_overlays(data, spec)
        return data

    if spec.kind == "tangent":
        t = np.linspace(0.0, math.pi / 2.0, n)
        pts = domain._curve_points(alpha, CurveId.GAMMA3_PLUS, t)
        data = FigureData(
            title=f"Boundary arc tangent, fold {fold}",
            csv_header=("curve", "t", "a", "b"),
        )
        data.csv_rows = [
            (CurveId.GAMMA3_PLUS.value, tk, ak, bk) for tk, (ak, bk) in zip(t, pts)
        ]
        data.paths.append((CurveId.GAMMA3_PLUS.value, pts[:, 0], pts[:, 1]))
        _apply_domain_overlays(data, spec)
        for x1, y1, x2, y2 in data.segments:
            data.csv_rows.append(("tangent", 0.0, x1, y1))
            data.csv_rows.append(("tangent", 1.0, x2, y2))
        return data

    # disks-comparison
    a0, b0 = extremal_coeffs(fold)
    corner = domain.suffridge_point(alpha)
    r = koebe_radius(fold)
    big_r = suffridge_radius(alpha)
    varphi = 2.0 * math.pi * np.arange(n) / n
    data = FigureData(
        title=f"Image disks comparison, fold {fold}",
        csv_header=("curve", "phi", "re", "im"),
    )
    for name, (ca, cb) in (("extremal", (a0, b0)), ("suffridge", (corner.a, corner.b))):
        _, w = _circle_image(fold, ca, cb, n)
        data.csv_rows.extend((name, p, z.real, z.imag) for p, z in zip(varphi, w))
        data.paths.append((name, np.append(w.real, w.real[0]), np.append(w.imag, w.imag[0])))
    for name, radius in (("disk-r", r), ("disk-R", big_r)):
        data.csv_rows.extend(
            (name, p, radius * math.cos(p), radius * math.sin(p)) for p in varphi
        )
    _apply_image_overlays(data, spec)
    return data


# ---------------------------------------------------------------------------
# writers


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    return format(float(value), ".17g")


def write_csv(data: FigureData, path: Path) -> None:
    lines = [",".join(data.csv_header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in data.csv_rows)
    path.write_text("\n".join(lines) + "\n")


_SVG_SIZE = 640.0
_SVG_PAD = 24.0


def _svg_bbox(data: FigureData) -> tuple[float, float, float, float]:
    xs, ys = [], []
    for _, px, py in data.paths:
        xs.append(px)
        ys.append(py)
    for cx, cy, radius in data.circles:
        xs.append(np.array([cx - radius, cx + radius]))
        ys.append(np.array([cy - radius, cy + radius]))
    for x1, y1, x2, y2 in data.segments:
        xs.append(np.array([x1, x2]))
        ys.append(np.array([y1, y2]))
    for mx, my in data.markers:
        xs.append(np.array([mx]))
        ys.append(np.array([my]))
    allx = np.concatenate(xs)
    ally = np.concatenate(ys)
    return float(allx.min()), float(allx.max()), float(ally.min()), float(ally.max())


def write_svg(data: FigureData, path: Path) -> None:
    """Geometry-only SVG: polylines, circles, lines, point markers."""
    x0, x1, y0, y1 = _svg_bbox(data)
    span = max(x1 - x0, y1 - y0, 1e-9)
    scale = (_SVG_SIZE - 2.0 * _SVG_PAD) / span
    width = (x1 - x0) * scale + 2.0 * _SVG_PAD
    height = (y1 - y0) * scale + 2.0 * _SVG_PAD

    def sx(x: float) -> float:
        return (x - x0) * scale + _SVG_PAD

    def sy(y: float) -> float:
        return (y1 - y) * scale + _SVG_PAD

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.2f} {height:.2f}">',
        '<g fill="none" stroke="black" stroke-width="1.2">',
    ]
    for name, px, py in data.paths:
        coords = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in zip(px, py))
        parts.append(f'<polyline data-name="{name}" points="{coords}"/>')
    for cx, cy, radius in data.circles:
        parts.append(
            f'<circle cx="{sx(cx):.3f}" cy="{sy(cy):.3f}" r="{radius * scale:.3f}"/>'
        )
    for xa, ya, xb, yb in data.segments:
        parts.append(
            f'<line x1="{sx(xa):.3f}" y1="{sy(ya):.3f}" x2="{sx(xb):.3f}" y2="{sy(yb):.3f}"/>'
        )
    parts.append("</g>")
    for mx, my in data.markers:
        parts.append(f'<circle cx="{sx(mx):.3f}" cy="{sy(my):.3f}" r="3" fill="black"/>')
    parts.append("</svg>")
    path.write_text("\n".join(parts) + "\n")


def write_png(data: FigureData, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 6.4))
    for name, px, py in data.paths:
        ax.plot(px, py, linewidth=1.2, label=name)
    for cx, cy, radius in data.circles:
        theta = np.linspace(0.0, 2.0 * math.pi, 512)
        ax.plot(cx + radius * np.cos(theta), cy + radius * np.sin(theta), linewidth=1.0, linestyle="--")
    for x1, y1, x2, y2 in data.segments:
        ax.plot([x1, x2], [y1, y2], linewidth=1.0)
    for mx, my in data.markers:
        ax.plot([mx], [my], marker="o", markersize=4, color="black")
    ax.set_aspect("equal")
    ax.set_title(data.title)
    if len(data.paths) > 1:
        ax.legend(loc="best", fontsize=8)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_figure(spec: FigureSpec, out_path) -> tuple[Path, Path, Path]:
    """Write the SVG, its sibling CSV, and a PNG; returns the three paths."""
    base = Path(out_path)
    svg_path = base if base.suffix == ".svg" else base.with_suffix(".svg")
    csv_path = svg_path.with_suffix(".csv")
    png_path = svg_path.with_suffix(".png")
    data = figure_data(spec)
    write_svg(data, svg_path)
    write_csv(data, csv_path)
    write_png(data, png_path)
    return svg_path, csv_path, png_path
