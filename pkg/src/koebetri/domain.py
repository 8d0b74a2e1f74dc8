"""Univalence domain of symmetric two-coefficient trinomials z + a z^(1+T) + b z^(1+2T).

In the coefficient plane the domain is bounded by five curves: a horizontal top
segment, two straight side segments, and two mirrored parametric arcs whose
components are quotients of sine combinations.  Everything is parametrized by
alpha = 1/(1+T) in (0, 1/2]; the T-form of the arcs is a reparametrization of
the alpha-form.

Small-parameter evaluation is delicate: the arc numerators and denominator all
vanish like t^3 at the origin, and the derivative factor G vanishes like t^6,
so both switch to cancellation-free odd/even series below a cutoff.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# below this t the arc quotients use the series form (numerator and
# denominator each extracted by t^3)
SERIES_CUTOFF = 1e-3
# below this t the derivative factor G uses its even series (t^6 leading);
# direct cosine summation loses the sign around t ~ 1e-2
G_SERIES_CUTOFF = 0.5
DEFAULT_BAND = 1e-6
POLYLINE_SEGMENTS = 4096


@dataclass(frozen=True)
class AlphaParam:
    """Symmetry parameter: alpha = 1/(1+fold) for an integer fold order >= 1."""

    alpha: float
    fold: int

    def __post_init__(self) -> None:
        if self.fold < 1:
            raise ValueError(f"fold must be >= 1, got {self.fold}")
        if not 0.0 < self.alpha <= 0.5:
            raise ValueError(f"alpha must be in (0, 1/2], got {self.alpha}")
        if abs(self.alpha * (1 + self.fold) - 1.0) > 1e-12:
            raise ValueError(f"alpha {self.alpha} does not match fold {self.fold}")

    @classmethod
    def from_fold(cls, fold: int) -> "AlphaParam":
        if fold < 1:
            raise ValueError(f"fold must be >= 1, got {fold}")
        return cls(alpha=1.0 / (1 + fold), fold=fold)

    @classmethod
    def from_alpha(cls, alpha: float) -> "AlphaParam":
        if not 0.0 < alpha <= 0.5:
            raise ValueError(f"alpha must be in (0, 1/2], got {alpha}")
        fold = round(1.0 / alpha - 1.0)
        return cls(alpha=alpha, fold=fold)


def _alpha_value(alpha: AlphaParam | float) -> float:
    a = alpha.alpha if isinstance(alpha, AlphaParam) else float(alpha)
    if not 0.0 < a <= 0.5:
        raise ValueError(f"alpha must be in (0, 1/2], got {a}")
    return a


class CurveId(enum.Enum):
    GAMMA1 = "gamma1"
    GAMMA2_PLUS = "gamma2+"
    GAMMA2_MINUS = "gamma2-"
    GAMMA3_PLUS = "gamma3+"
    GAMMA3_MINUS = "gamma3-"


class Membership(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class BoundaryPoint:
    curve: CurveId
    t: float
    a: float
    b: float


def gamma1_halfwidth(alpha: AlphaParam | float) -> float:
    """Half-length of the top segment, (2/(2-alpha)) sin(pi alpha/2)."""
    a = _alpha_value(alpha)
    return 2.0 / (2.0 - a) * math.sin(math.pi * a / 2.0)


def gamma2_tmax(alpha: AlphaParam | float) -> float:
    """Parameter range end of the side segments, 4 alpha/(3-alpha)."""
    a = _alpha_value(alpha)
    return 4.0 * a / (3.0 - a)


def uvw(alpha: AlphaParam | float, t: float) -> tuple[float, float, float]:
    """The three sine combinations behind the boundary arcs, evaluated directly.

    U(t) = 2 sin(2(1-alpha)t) - 2(1-alpha) sin(2t)
    V(t) = (1+alpha) sin((1-alpha)t) - (1-alpha) sin((1+alpha)t)
    W(t) = (3-alpha) sin((1-alpha)t) - (1-alpha) sin((3-alpha)t)
    """
    a = _alpha_value(alpha)
    u = 2.0 * math.sin(2.0 * (1.0 - a) * t) - 2.0 * (1.0 - a) * math.sin(2.0 * t)
    v = (1.0 + a) * math.sin((1.0 - a) * t) - (1.0 - a) * math.sin((1.0 + a) * t)
    w = (3.0 - a) * math.sin((1.0 - a) * t) - (1.0 - a) * math.sin((3.0 - a) * t)
    return u, v, w


def _pq_series(p: float, q: float, t2):
    """(p sin(qt) - q sin(pt)) / t^3 as a short even series in t.

    Relative truncation error ~ (max(p,q) t)^10 / 4e8; ample for
    max(p,q)·t < 0.3 and far beyond machine precision below SERIES_CUTOFF.
    """
    c1 = p * q * (p * p - q * q) / 6.0
    c2 = -p * q * (p**4 - q**4) / 120.0
    c3 = p * q * (p**6 - q**6) / 5040.0
    c4 = -p * q * (p**8 - q**8) / 362880.0
    return c1 + t2 * (c2 + t2 * (c3 + t2 * c4))


def _arc_ab_arrays(alpha: float, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized (A(t), B(t)) on the parametric arc, series-safe near t = 0."""
    t = np.asarray(t, dtype=float)
    a_out = np.empty_like(t)
    b_out = np.empty_like(t)
    small = t < SERIES_CUTOFF
    if small.any():
        t2 = t[small] * t[small]
        u3 = _pq_series(2.0, 2.0 * (1.0 - alpha), t2)
        v3 = _pq_series(1.0 + alpha, 1.0 - alpha, t2)
        w3 = _pq_series(3.0 - alpha, 1.0 - alpha, t2)
        a_out[small] = u3 / w3
        b_out[small] = v3 / w3
    big = ~small
    if big.any():
        tb = t[big]
        u = 2.0 * np.sin(2.0 * (1.0 - alpha) * tb) - 2.0 * (1.0 - alpha) * np.sin(2.0 * tb)
        v = (1.0 + alpha) * np.sin((1.0 - alpha) * tb) - (1.0 - alpha) * np.sin((1.0 + alpha) * tb)
        w = (3.0 - alpha) * np.sin((1.0 - alpha) * tb) - (1.0 - alpha) * np.sin((3.0 - alpha) * tb)
        a_out[big] = u / w
        b_out[big] = v / w
    return a_out, b_out


def _arc_ab(alpha: float, t: float) -> tuple[float, float]:
    a, b = _arc_ab_arrays(alpha, np.array([t]))
    return float(a[0]), float(b[0])


def boundary_point(alpha: AlphaParam | float, curve: CurveId, t: float) -> BoundaryPoint:
    """Point of a boundary curve at parameter t.  Ranges are strict, as printed.

    gamma1:   a = t in [-L, L], b = alpha/(2-alpha), L the half-width
    gamma2+-: a = +-t, b = (t-alpha)/(2-alpha), t in [0, 4 alpha/(3-alpha)]
    gamma3+-: a = +-A(t), b = B(t), t in [0, pi/2]
    """
    al = _alpha_value(alpha)
    if curve is CurveId.GAMMA1:
        lim = gamma1_halfwidth(al)
        if not -lim <= t <= lim:
            raise ValueError(f"gamma1 parameter {t} outside [-{lim}, {lim}]")
        return BoundaryPoint(curve, t, t, al / (2.0 - al))
    if curve in (CurveId.GAMMA2_PLUS, CurveId.GAMMA2_MINUS):
        tmax = gamma2_tmax(al)
        if not 0.0 <= t <= tmax:
            raise ValueError(f"gamma2 parameter {t} outside [0, {tmax}]")
        sign = 1.0 if curve is CurveId.GAMMA2_PLUS else -1.0
        return BoundaryPoint(curve, t, sign * t, (t - al) / (2.0 - al))
    if curve in (CurveId.GAMMA3_PLUS, CurveId.GAMMA3_MINUS):
        if not 0.0 <= t <= math.pi / 2.0:
            raise ValueError(f"gamma3 parameter {t} outside [0, pi/2]")
        a, b = _arc_ab(al, t)
        sign = 1.0 if curve is CurveId.GAMMA3_PLUS else -1.0
        return BoundaryPoint(curve, t, sign * a, b)
    raise ValueError(f"unknown curve {curve}")


def _g_factor_arrays(alpha: float, t: np.ndarray) -> np.ndarray:
    """The positivity factor G(t, alpha) of the arc derivatives, series-safe.

    G = (1+alpha) cos((3-2 alpha)t) + (3-alpha) cos((1-2 alpha)t)
        - (1-alpha)^2 cos(3t) - (1+alpha)(3-alpha) cos(t).

    The t^0, t^2 and t^4 series coefficients cancel identically, so the direct
    sum loses the sign for small t; below G_SERIES_CUTOFF the even series
    starting at t^6 is used instead.
    """
    t = np.asarray(t, dtype=float)
    out = np.empty_like(t)
    weights = (
        (1.0 + alpha, 3.0 - 2.0 * alpha),
        (3.0 - alpha, 1.0 - 2.0 * alpha),
        (-((1.0 - alpha) ** 2), 3.0),
        (-(1.0 + alpha) * (3.0 - alpha), 1.0),
    )
    small = t < G_SERIES_CUTOFF
    if small.any():
        ts = t[small]
        t2 = ts * ts
        acc = np.zeros_like(ts)
        power = t2 * t2 * t2
        for m in range(3, 15):
            s_m = sum(c * k ** (2 * m) for c, k in weights)
            acc += ((-1.0) ** m) * s_m / math.factorial(2 * m) * power
            power = power * t2
        out[small] = acc
    big = ~small
    if big.any():
        tb = t[big]
        out[big] = sum(c * np.cos(k * tb) for c, k in weights)
    return out


def _w_arrays(alpha: float, t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    out = np.empty_like(t)
    small = t < SERIES_CUTOFF
    if small.any():
        ts = t[small]
        out[small] = _pq_series(3.0 - alpha, 1.0 - alpha, ts * ts) * ts**3
    big = ~small
    if big.any():
        tb = t[big]
        out[big] = (3.0 - alpha) * np.sin((1.0 - alpha) * tb) - (1.0 - alpha) * np.sin((3.0 - alpha) * tb)
    return out


def _arc_derivative_arrays(alpha: float, t: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized (A'(t), B'(t), G(t, alpha)).

    A' = 2(1-alpha) G sin((2-alpha)t) / W^2 and B' the same with sin(t).
    """
    t = np.asarray(t, dtype=float)
    g = _g_factor_arrays(alpha, t)
    w = _w_arrays(alpha, t)
    common = 2.0 * (1.0 - alpha) * g / (w * w)
    return common * np.sin((2.0 - alpha) * t), common * np.sin(t), g


def curve_derivative(alpha: AlphaParam | float, t: float) -> tuple[float, float, float]:
    """(A'(t), B'(t), G(t, alpha)) on the open parameter range (0, pi/2)."""
    al = _alpha_value(alpha)
    if not 0.0 < t < math.pi / 2.0:
        raise ValueError(f"derivative parameter {t} outside (0, pi/2)")
    w = _w_arrays(al, np.array([t]))[0]
    if w == 0.0:
        raise ArithmeticError(f"denominator W vanished at t={t}, alpha={al}")
    ap, bp, g = _arc_derivative_arrays(al, np.array([t]))
    return float(ap[0]), float(bp[0]), float(g[0])


def t_star(alpha: AlphaParam | float) -> tuple[float, BoundaryPoint]:
    """Arc parameter pi/(3-alpha) of the extremal point, with the point itself."""
    al = _alpha_value(alpha)
    ts = math.pi / (3.0 - al)
    return ts, boundary_point(al, CurveId.GAMMA3_PLUS, ts)


def suffridge_point(alpha: AlphaParam | float) -> BoundaryPoint:
    """Corner shared by the top segment and the arc, at arc parameter pi/2."""
    al = _alpha_value(alpha)
    return BoundaryPoint(
        CurveId.GAMMA3_PLUS,
        math.pi / 2.0,
        gamma1_halfwidth(al),
        al / (2.0 - al),
    )


def find_t_tilde(alpha: AlphaParam | float) -> float:
    """Arc parameter where the direction ratio a(1+b)/(4b) crosses 1.

    The ratio exceeds 1 at the extremal parameter and is below 1 at the corner,
    and it is strictly decreasing in between, so bisection applies.
    """
    al = _alpha_value(alpha)
    lo, _ = t_star(al)
    hi = math.pi / 2.0

    def excess(t: float) -> float:
        a, b = _arc_ab(al, t)
        return a * (1.0 + b) / (4.0 * b) - 1.0

    f_lo, f_hi = excess(lo), excess(hi)
    if not (f_lo > 0.0 > f_hi):
        raise ArithmeticError(f"ratio does not bracket 1 on [{lo}, {hi}] at alpha={al}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    return 0.5 * (lo + hi)


def tform_point(fold: int, s: float) -> tuple[float, float]:
    """Arc point in the T-form parametrization, s in (0, pi/(2+2T)].

    Satisfies the reparametrization identity: equals the alpha-form arc at
    t = (1+T)s with alpha = 1/(1+T).
    """
    if fold < 1:
        raise ValueError(f"fold must be >= 1, got {fold}")
    s_max = math.pi / (2.0 + 2.0 * fold)
    if not 0.0 < s <= s_max:
        raise ValueError(f"T-form parameter {s} outside (0, {s_max}]")
    T = fold
    if (2 + 3 * T) * s < 0.3:
        # numerator and denominator all vanish like s^3; note the doubled
        # argument in the first numerator
        s2 = s * s
        den3 = _pq_series(T, 2 + 3 * T, s2)
        at = 16.0 * _pq_series(T, 1 + T, 4.0 * s2) / den3
        bt = _pq_series(T, 2 + T, s2) / den3
        return at, bt
    den = T * math.sin((2 + 3 * T) * s) - (2 + 3 * T) * math.sin(T * s)
    at = (2 * T * math.sin((2 + 2 * T) * s) - (2 + 2 * T) * math.sin(2 * T * s)) / den
    bt = (T * math.sin((2 + T) * s) - (2 + T) * math.sin(T * s)) / den
    return at, bt


# ---------------------------------------------------------------------------
# membership


def _curve_points(alpha: float, curve: CurveId, t: np.ndarray) -> np.ndarray:
    if curve is CurveId.GAMMA1:
        return np.column_stack([t, np.full_like(t, alpha / (2.0 - alpha))])
    if curve in (CurveId.GAMMA2_PLUS, CurveId.GAMMA2_MINUS):
        sign = 1.0 if curve is CurveId.GAMMA2_PLUS else -1.0
        return np.column_stack([sign * t, (t - alpha) / (2.0 - alpha)])
    a, b = _arc_ab_arrays(alpha, t)
    sign = 1.0 if curve is CurveId.GAMMA3_PLUS else -1.0
    return np.column_stack([sign * a, b])


@lru_cache(maxsize=16)
def closed_boundary_polyline(fold: int, segments_per_curve: int = POLYLINE_SEGMENTS) -> np.ndarray:
    """Closed (N+1) x 2 vertex array tracing all five curves once.

    Runs along the top segment right to left, down the left arc and side,
    through the bottom vertex, and back up the right side and arc.
    """
    alpha = 1.0 / (1 + fold)
    n = segments_per_curve
    lim = gamma1_halfwidth(alpha)
    t2max = gamma2_tmax(alpha)
    pieces = [
        _curve_points(alpha, CurveId.GAMMA1, np.linspace(lim, -lim, n + 1)[:-1]),
        _curve_points(alpha, CurveId.GAMMA3_MINUS, np.linspace(math.pi / 2.0, 0.0, n + 1)[:-1]),
        _curve_points(alpha, CurveId.GAMMA2_MINUS, np.linspace(t2max, 0.0, n + 1)[:-1]),
        _curve_points(alpha, CurveId.GAMMA2_PLUS, np.linspace(0.0, t2max, n + 1)[:-1]),
        _curve_points(alpha, CurveId.GAMMA3_PLUS, np.linspace(0.0, math.pi / 2.0, n + 1)[:-1]),
    ]
    loop = np.vstack(pieces)
    loop.setflags(write=False)
    return np.vstack([loop, loop[:1]])


def polyline_distances(points: np.ndarray, loop: np.ndarray, chunk: int = 512) -> np.ndarray:
    """Distance from each query point to the closed polyline (vectorized, chunked)."""
    points = np.atleast_2d(points)
    ax, ay = loop[:-1, 0], loop[:-1, 1]
    dx, dy = loop[1:, 0] - ax, loop[1:, 1] - ay
    seg2 = dx * dx + dy * dy
    seg2 = np.where(seg2 > 0.0, seg2, 1.0)
    out = np.empty(len(points))
    for start in range(0, len(points), chunk):
        px = points[start : start + chunk, 0][:, None]
        py = points[start : start + chunk, 1][:, None]
        proj = np.clip(((px - ax) * dx + (py - ay) * dy) / seg2, 0.0, 1.0)
        qx = ax + proj * dx
        qy = ay + proj * dy
        out[start : start + chunk] = np.sqrt(np.min((px - qx) ** 2 + (py - qy) ** 2, axis=1))
    return out


def winding_parity(points: np.ndarray, loop: np.ndarray, chunk: int = 512) -> np.ndarray:
    """Even-odd crossing parity of each query point (True = enclosed)."""
    points = np.atleast_2d(points)
    ax, ay = loop[:-1, 0], loop[:-1, 1]
    bx, by = loop[1:, 0], loop[1:, 1]
    dy = np.where(by != ay, by - ay, 1.0)
    out = np.empty(len(points), dtype=bool)
    for start in range(0, len(points), chunk):
        px = points[start : start + chunk, 0][:, None]
        py = points[start : start + chunk, 1][:, None]
        straddle = (ay > py) != (by > py)
        x_at = ax + (py - ay) * (bx - ax) / dy
        out[start : start + chunk] = (np.sum(straddle & (x_at > px), axis=1) % 2).astype(bool)
    return out


def contains(fold: int, a: float, b: float, band: float = DEFAULT_BAND) -> Membership:
    """Membership of (a, b) in the univalence domain of the given fold order.

    Classifies by even-odd crossing parity against the cached boundary
    polyline; any point within `band` of the polyline reports Boundary.
    Boundary is therefore a resolution artifact of the polyline, not an
    exact incidence test.
    """
    if fold < 1:
        raise ValueError(f"fold must be >= 1, got {fold}")
    if band < 0.0:
        raise ValueError(f"band must be >= 0, got {band}")
    loop = closed_boundary_polyline(fold)
    pt = np.array([[a, b]])
    if polyline_distances(pt, loop)[0] < band:
        return Membership.BOUNDARY
    return Membership.INSIDE if winding_parity(pt, loop)[0] else Membership.OUTSIDE
