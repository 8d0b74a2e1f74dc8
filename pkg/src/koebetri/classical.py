"""Chebyshev machinery and coefficient families of extremal univalent polynomials.

All families are normalized so the leading (linear) coefficient is 1, and every
coefficient is expressed through Chebyshev polynomials of the second kind
U_k and their derivatives, evaluated at a cosine node that depends on the
family.  Where a family has two printed closed forms, both are evaluated and
cross-checked on the spot.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

CROSS_CHECK_TOL = 1e-10


def cheb_u(k: int, x: float) -> float:
    """Chebyshev polynomial of the second kind U_k(x), by the three-term recurrence.

    U_0 = 1, U_1 = 2x, U_k = 2x U_{k-1} - U_{k-2}.
    """
    if k < 0:
        raise ValueError(f"degree must be nonnegative, got {k}")
    u_prev, u_cur = 1.0, 2.0 * x
    if k == 0:
        return u_prev
    for _ in range(k - 1):
        u_prev, u_cur = u_cur, 2.0 * x * u_cur - u_prev
    return u_cur


def cheb_u_deriv(k: int, x: float) -> float:
    """Derivative U_k'(x), by differentiating the recurrence.

    U_k' = 2 U_{k-1} + 2x U_{k-1}' - U_{k-2}', seeded with U_0' = 0, U_1' = 2.
    """
    if k < 0:
        raise ValueError(f"degree must be nonnegative, got {k}")
    if k == 0:
        return 0.0
    u_prev, u_cur = 1.0, 2.0 * x
    d_prev, d_cur = 0.0, 2.0
    for _ in range(k - 1):
        u_prev, u_cur, d_prev, d_cur = (
            u_cur,
            2.0 * x * u_cur - u_prev,
            d_cur,
            2.0 * u_cur + 2.0 * x * d_cur - d_prev,
        )
    return d_cur


@dataclass(frozen=True)
class PolynomialFamilyCoeffs:
    """Coefficients of one member of a symmetric extremal family.

    The polynomial is sum_j coeffs[j-1] * z**(1 + (j-1)*fold) for j = 1..len,
    so fold = 1 gives a full polynomial, fold = 2 an odd one, and so on.
    """

    degree: int
    fold: int
    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.degree < 1 or self.fold < 1:
            raise ValueError(f"bad family shape: degree={self.degree} fold={self.fold}")
        if not self.coeffs or abs(self.coeffs[0] - 1.0) > 1e-15:
            raise ValueError("first coefficient must be 1")
        expected_degree = 1 + (len(self.coeffs) - 1) * self.fold
        if expected_degree != self.degree:
            raise ValueError(
                f"degree {self.degree} inconsistent with {len(self.coeffs)} "
                f"coefficients at fold {self.fold}"
            )

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j: int) -> float:
        return self.coeffs[j]

    def evaluate(self, z: complex) -> complex:
        acc = 0.0 + 0.0j
        zt = z**self.fold
        for c in reversed(self.coeffs):
            acc = acc * zt + c
        return acc * z


def q_coeffs(n_deg: int) -> PolynomialFamilyCoeffs:
    """Coefficients of the degree-N univalent extremal polynomial Q_N.

    Each coefficient has a sine-product form and a Chebyshev-derivative form;
    both are evaluated at cos(pi/(N+2)) and must agree to 1e-10.
    """
    if n_deg < 2:
        raise ValueError(f"degree must be >= 2, got {n_deg}")
    theta = math.pi / (n_deg + 2)
    x = math.cos(theta)
    d_top = cheb_u_deriv(n_deg, x)
    coeffs = [1.0]
    for j in range(2, n_deg + 1):
        cheb_form = cheb_u_deriv(n_deg - j + 1, x) / d_top * cheb_u(j - 1, x)
        sine_form = (
            ((n_deg - j + 3) * math.sin((j + 1) * theta) - (n_deg - j + 1) * math.sin((j - 1) * theta))
            * math.sin(j * theta)
            / ((n_deg + 2) * math.sin(2 * theta) * math.sin(theta))
        )
        assert abs(cheb_form - sine_form) <= CROSS_CHECK_TOL, (
            f"closed forms disagree at N={n_deg}, j={j}: {cheb_form} vs {sine_form}"
        )
        coeffs.append(cheb_form)
    return PolynomialFamilyCoeffs(degree=n_deg, fold=1, coeffs=tuple(coeffs))


def odd_extremizer_coeffs(n_deg: int) -> PolynomialFamilyCoeffs:
    """Coefficients of the odd extremal polynomial of odd degree N.

    Coefficient j of z**(2j-1) is U'_{N+3-2j}(cos(pi/(N+3))) / U'_{N+1}(cos(pi/(N+3))),
    which reduces to 1 at j = 1 and matches the two-fold symmetric family.
    """
    if n_deg < 3 or n_deg % 2 == 0:
        raise ValueError(f"degree must be odd and >= 3, got {n_deg}")
    x = math.cos(math.pi / (n_deg + 3))
    d_top = cheb_u_deriv(n_deg + 1, x)
    n_terms = (n_deg + 1) // 2
    coeffs = tuple(cheb_u_deriv(n_deg + 3 - 2 * j, x) / d_top for j in range(1, n_terms + 1))
    return PolynomialFamilyCoeffs(degree=n_deg, fold=2, coeffs=coeffs)


def symmetric_koebe_coeffs(fold: int, terms: int) -> PolynomialFamilyCoeffs:
    """Leading Taylor coefficients of the fold-symmetric Koebe function.

    K(z) = z / (1 - z**fold)**(2/fold); coefficient j is the product of
    (s + 2/fold - 1)/s over s = 1..j-1.  fold = 1 gives 1, 2, 3, ...,
    fold = 2 gives all ones.
    """
    if fold < 1:
        raise ValueError(f"fold must be >= 1, got {fold}")
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    coeffs = [1.0]
    for j in range(2, terms + 1):
        c = 1.0
        for s in range(1, j):
            c *= (s + 2.0 / fold - 1.0) / s
        coeffs.append(c)
    return PolynomialFamilyCoeffs(degree=1 + (terms - 1) * fold, fold=fold, coeffs=tuple(coeffs))


def general_extremizer_coeffs(fold: int, n_terms: int) -> PolynomialFamilyCoeffs:
    """Coefficients of the fold-symmetric extremal polynomial with n_terms terms.

    Term j of z**(1+(j-1)fold) is b_j * gamma_j with

        b_j     = U'_{fold(n-j+1)}(x) / U'_{fold n}(x),  x = cos(pi/(fold n + 2)),
        gamma_j = prod_{s<j} sin(pi(s + 2/fold - 1)/(n + 2/fold)) / sin(pi s/(n + 2/fold)).

    gamma_j also has a Chebyshev-ratio form, prod_{s<j} U_{n-s}(y)/U_{s-1}(y) at
    y = cos(pi/(n + 2/fold)); both are evaluated and must agree to 1e-10.
    """
    if fold < 1:
        raise ValueError(f"fold must be >= 1, got {fold}")
    if n_terms < 2:
        raise ValueError(f"need at least 2 terms, got {n_terms}")
    x = math.cos(math.pi / (fold * n_terms + 2))
    d_top = cheb_u_deriv(fold * n_terms, x)
    theta = math.pi / (n_terms + 2.0 / fold)
    y = math.cos(theta)
    coeffs = [1.0]
    gamma_sine = 1.0
    gamma_cheb = 1.0
    for j in range(2, n_terms + 1):
        s = j - 1
        gamma_sine *= math.sin((s + 2.0 / fold - 1.0) * theta) / math.sin(s * theta)
        gamma_cheb *= cheb_u(n_terms - s, y) / cheb_u(s - 1, y)
        assert abs(gamma_sine - gamma_cheb) <= CROSS_CHECK_TOL, (
            f"gamma forms disagree at fold={fold}, j={j}: {gamma_sine} vs {gamma_cheb}"
        )
        b_j = cheb_u_deriv(fold * (n_terms - j + 1), x) / d_top
        coeffs.append(b_j * gamma_sine)
    return PolynomialFamilyCoeffs(degree=1 + (n_terms - 1) * fold, fold=fold, coeffs=tuple(coeffs))
