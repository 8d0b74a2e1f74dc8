"""Squared boundary distance of symmetric trinomials and its direction analysis.

For F(z) = z + a z^(1+T) + b z^(1+2T), the squared distance from the origin to
the image of the unit circle in direction phi is

    Phi(a, b, phi) = 1 + a^2 + b^2 + 2a(1+b) cos(T phi) + 2b cos(2T phi).

The main direction is phi = pi/T with value H = (1-a+b)^2.  A second candidate
arises where cos(T phi) = -mu with mu = a(1+b)/(4b); it is reported as special
only when it strictly beats the main direction.  The extremal coefficients and
the two radii tie the picture together.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .domain import AlphaParam, _alpha_value


@dataclass(frozen=True)
class Trinomial:
    """F(z) = z + a z^(1+fold) + b z^(1+2 fold).  No univalence is assumed."""

    fold: int
    a: float
    b: float

    def __post_init__(self) -> None:
        if self.fold < 1:
            raise ValueError(f"fold must be >= 1, got {self.fold}")

    def __call__(self, z: complex) -> complex:
        return eval_trinomial(self, z)

    def derivative(self, z: complex) -> complex:
        zp = z**self.fold
        return 1.0 + (1 + self.fold) * self.a * zp + (1 + 2 * self.fold) * self.b * zp * zp

    def circle_point(self, varphi: float) -> complex:
        return eval_trinomial(self, cmath.exp(1j * varphi))


@dataclass(frozen=True)
class DirectionProfile:
    """Distance candidates of one trinomial.

    H is the main-direction squared distance.  mu is None exactly when b = 0.
    special, when present, is (phi_hat, value) with value strictly below H;
    special_at_origin marks the corner case phi_hat = 0 (mu = -1), which the
    strict definition does not otherwise distinguish.
    """

    H: float
    mu: float | None
    special: tuple[float, float] | None
    special_at_origin: bool = False


def eval_trinomial(f: Trinomial, z: complex) -> complex:
    zp = z**f.fold
    return z * (1.0 + zp * (f.a + f.b * zp))


def phi(fold: int, a: float, b: float, varphi: float) -> float:
    """Squared distance to the circle image in direction varphi."""
    if fold < 1:
        raise ValueError(f"fold must be >= 1, got {fold}")
    p = varphi % (2.0 * math.pi / fold)
    c = math.cos(fold * p)
    c2 = math.cos(2.0 * fold * p)
    return 1.0 + a * a + b * b + 2.0 * a * (1.0 + b) * c + 2.0 * b * c2


def main_value(a: float, b: float) -> float:
    """Squared distance in the main direction, (1 - a + b)^2."""
    h = 1.0 - a + b
    return h * h


def mu(a: float, b: float) -> float:
    """Direction ratio a(1+b)/(4b); a special direction needs |mu| <= 1."""
    if b == 0.0:
        raise ValueError("mu is undefined at b = 0")
    return a * (1.0 + b) / (4.0 * b)


def direction_profile(f: Trinomial) -> DirectionProfile:
    """Main and (when it exists) special direction of one trinomial.

    The special branch applies only for b > 0: for b < 0 the decomposition
    Phi = H + 16|b| cos^2(T phi/2)(...) exceeds H in every direction, and at
    b = 0 the ratio mu is undefined.
    """
    H = main_value(f.a, f.b)
    if f.b == 0.0:
        return DirectionProfile(H=H, mu=None, special=None)
    m = mu(f.a, f.b)
    if f.b < 0.0 or abs(m) > 1.0:
        return DirectionProfile(H=H, mu=m, special=None)
    phi_hat = math.acos(-m) / f.fold
    value = (1.0 - f.b) ** 2 * (1.0 - f.a * f.a / (4.0 * f.b))
    if not value < H:
        return DirectionProfile(H=H, mu=m, special=None)
    return DirectionProfile(H=H, mu=m, special=(phi_hat, value), special_at_origin=phi_hat == 0.0)


def koebe_radius(fold: int) -> float:
    """4 cos^2(pi(1+T)/(2+3T)), the minimal central-disk radius over the family."""
    if fold < 1:
        raise ValueError(f"fold must be >= 1, got {fold}")
    return 4.0 * math.cos(math.pi * (1 + fold) / (2 + 3 * fold)) ** 2


def extremal_coeffs(fold: int) -> tuple[float, float]:
    """Coefficients (a0, b0) of the distance-minimizing trinomial.

    Satisfy 1 - a0 + b0 = koebe_radius(fold) exactly.
    """
    if fold < 1:
        raise ValueError(f"fold must be >= 1, got {fold}")
    T = fold
    c = math.cos(math.pi * T / (2 + 3 * T))
    a0 = 2.0 / (2 + 3 * T) * (-T + (2 + 2 * T) * c)
    b0 = 1.0 / (2 + 3 * T) * (2 + T - 2 * T * c)
    return a0, b0


def suffridge_radius(alpha: AlphaParam | float) -> float:
    """Distance attained by the corner trinomial in its special direction.

    R^2 = 4 ((1-alpha)/(2-alpha))^2 (1 - sin^2(pi alpha/2)/(alpha(2-alpha))).
    Exceeds the Koebe radius of the matching fold order.
    """
    a = _alpha_value(alpha)
    s2 = math.sin(math.pi * a / 2.0) ** 2
    r2 = 4.0 * ((1.0 - a) / (2.0 - a)) ** 2 * (1.0 - s2 / (a * (2.0 - a)))
    if r2 < 0.0:
        raise ArithmeticError(f"negative squared radius at alpha={a}")
    return math.sqrt(r2)
