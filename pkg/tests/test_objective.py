from __future__ import annotations

import cmath
import math

import numpy as np
import pytest

from koebetri.objective import (
    Trinomial,
    direction_profile,
    extremal_coeffs,
    koebe_radius,
    main_value,
    mu,
    phi,
    suffridge_radius,
)

# Oracle values, frozen from a 40-digit recomputation.
RADII = {
    1: 0.3819660112501051,
    2: 0.585786437626905,
    3: 0.6902785321094299,
    4: 0.7530203962825329,
    5: 0.7947307272414872,
    6: 0.8244294954150537,
    7: 0.8466393557702657,
    8: 0.8638705065376884,
}
EXTREMALS = {
    1: (0.8944271909999159, 0.27639320225002103),
    2: (0.5606601717798213, 0.1464466094067262),
    3: (0.4070701584658692, 0.09734869057529906),
    4: (0.3192711455124765, 0.07229154179500941),
    5: (0.2625430160648325, 0.05727374330631977),
    6: (0.22289935320946238, 0.04732884862451612),
    7: (0.19364218729024994, 0.04028154306051565),
    8: (0.17116657239698496, 0.03503707893467335),
}
MU_EXTREMAL_FOLD_1 = 1.0326237921249264
SUFFRIDGE_R_HALF = 0.3849001794597505
SUFFRIDGE_R_QUARTER = 0.6991180470267525
SUFFRIDGE_MAIN_SQ_QUARTER = 0.49773680937344874


def test_koebe_radius_frozen_values():
    for fold, r in RADII.items():
        assert abs(koebe_radius(fold) - r) < 1e-14


def test_radius_closed_form_coincidences():
    assert abs(koebe_radius(1) - 0.25 / math.cos(math.pi / 5) ** 2) < 1e-12
    assert abs(koebe_radius(2) - 0.5 / math.cos(math.pi / 8) ** 2) < 1e-12
    assert abs(koebe_radius(2) - (2.0 - math.sqrt(2.0))) < 1e-12


def test_extremal_coeffs_frozen_values():
    for fold, (a0, b0) in EXTREMALS.items():
        got = extremal_coeffs(fold)
        assert abs(got[0] - a0) < 1e-14
        assert abs(got[1] - b0) < 1e-14


def test_radius_identity_all_folds():
    for fold in range(1, 9):
        a0, b0 = extremal_coeffs(fold)
        assert abs(1.0 - a0 + b0 - koebe_radius(fold)) < 1e-14


def test_invalid_fold():
    with pytest.raises(ValueError):
        koebe_radius(0)
    with pytest.raises(ValueError):
        extremal_coeffs(-1)


def test_phi_equals_squared_image_distance():
    rng = np.random.default_rng(21)
    for _ in range(200):
        fold = int(rng.integers(1, 7))
        a = float(rng.uniform(-1.2, 1.2))
        b = float(rng.uniform(-0.8, 1.2))
        varphi = float(rng.uniform(-10.0, 10.0))
        f = Trinomial(fold, a, b)
        assert abs(phi(fold, a, b, varphi) - abs(f.circle_point(varphi)) ** 2) < 1e-10


def test_phi_decomposition_identity():
    rng = np.random.default_rng(22)
    for _ in range(200):
        fold = int(rng.integers(1, 7))
        a = float(rng.uniform(-1.2, 1.2))
        b = float(rng.uniform(0.01, 1.2))
        varphi = float(rng.uniform(0.0, 2.0 * math.pi))
        h = (1.0 - a + b) ** 2
        half = fold * varphi / 2.0
        split = h + 16.0 * b * math.cos(half) ** 2 * (mu(a, b) - math.sin(half) ** 2)
        assert abs(phi(fold, a, b, varphi) - split) < 1e-10


def test_phi_mirror_symmetry():
    rng = np.random.default_rng(23)
    for _ in range(100):
        fold = int(rng.integers(1, 6))
        a = float(rng.uniform(0.0, 1.0))
        b = float(rng.uniform(-0.5, 1.0))
        varphi = float(rng.uniform(0.0, 2.0 * math.pi))
        left = phi(fold, -a, b, varphi)
        right = phi(fold, a, b, math.pi / fold - varphi)
        assert abs(left - right) < 1e-10


def test_phi_periodicity():
    assert abs(phi(3, 0.4, 0.1, 0.3) - phi(3, 0.4, 0.1, 0.3 + 2 * math.pi / 3)) < 1e-12


def test_main_value_is_main_direction_distance():
    f = Trinomial(3, 0.4, 0.1)
    assert abs(main_value(0.4, 0.1) - phi(3, 0.4, 0.1, math.pi / 3)) < 1e-12


def test_mu_rejects_zero_b():
    with pytest.raises(ValueError):
        mu(0.5, 0.0)


def test_extremal_profile_has_no_special_direction():
    a0, b0 = extremal_coeffs(1)
    prof = direction_profile(Trinomial(1, a0, b0))
    assert prof.mu is not None
    assert abs(prof.mu - MU_EXTREMAL_FOLD_1) < 1e-12
    assert prof.mu > 1.0
    assert prof.special is None


def test_suffridge_profile_special_direction():
    # at the corner point of fold 1 the special value drops to 4/27
    from koebetri.domain import suffridge_point

    p = suffridge_point(0.5)
    prof = direction_profile(Trinomial(1, p.a, p.b))
    assert prof.special is not None
    _, value = prof.special
    assert abs(value - 4.0 / 27.0) < 1e-12
    assert value < prof.H
    assert abs(math.sqrt(value) - SUFFRIDGE_R_HALF) < 1e-12


def test_suffridge_main_square_frozen():
    from koebetri.domain import suffridge_point

    p = suffridge_point(0.25)
    prof = direction_profile(Trinomial(3, p.a, p.b))
    assert abs(prof.H - SUFFRIDGE_MAIN_SQ_QUARTER) < 1e-13


def test_negative_b_has_no_special_direction():
    prof = direction_profile(Trinomial(2, 0.3, -0.1))
    assert prof.special is None


def test_special_at_origin_flag():
    b = 0.1
    a = -4.0 * b / (1.0 + b)  # mu = -1, phi_hat = 0
    prof = direction_profile(Trinomial(2, a, b))
    assert prof.special is not None
    assert prof.special_at_origin
    assert prof.special[0] == 0.0


def test_suffridge_radius_frozen_values():
    assert abs(suffridge_radius(0.5) - SUFFRIDGE_R_HALF) < 1e-13
    assert abs(suffridge_radius(0.5) - math.sqrt(4.0 / 27.0)) < 1e-13
    assert abs(suffridge_radius(0.25) - SUFFRIDGE_R_QUARTER) < 1e-13


def test_trinomial_derivative():
    f = Trinomial(3, 0.4, 0.1)
    h = 1e-7
    z = 0.3 + 0.2j
    fd = (f(z + h) - f(z - h)) / (2 * h)
    assert abs(f.derivative(z) - fd) < 1e-6


def test_circle_point_matches_eval():
    f = Trinomial(4, 0.2, 0.05)
    varphi = 0.77
    assert abs(f.circle_point(varphi) - f(cmath.exp(1j * varphi))) < 1e-14
