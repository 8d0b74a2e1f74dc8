"""Acceptance suite: one test per headline criterion, pinned tolerances.

Each test prints a single summary line; under pytest -v the per-criterion
pass/fail is the test outcome line.
"""

from __future__ import annotations

import math
import time

import mpmath as mp
import numpy as np

from koebetri import certify, domain, search
from koebetri.classical import (
    general_extremizer_coeffs,
    odd_extremizer_coeffs,
    q_coeffs,
)
from koebetri.domain import suffridge_point, t_star, tform_point
from koebetri.objective import (
    Trinomial,
    extremal_coeffs,
    koebe_radius,
    mu,
    phi,
    suffridge_radius,
)
from koebetri.search import Verdict, domain_agreement, global_verify, univalence_check

ALL_FOLDS = tuple(range(1, 9))
ALPHA_GRID = (0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5)


def test_criterion_1_radius_identities():
    assert abs(koebe_radius(1) - 0.25 / math.cos(math.pi / 5) ** 2) < 1e-12
    assert abs(koebe_radius(2) - 0.5 / math.cos(math.pi / 8) ** 2) < 1e-12
    for fold in ALL_FOLDS:
        a0, b0 = extremal_coeffs(fold)
        assert abs(1.0 - a0 + b0 - koebe_radius(fold)) < 1e-12
    print("criterion 1 (radius identities): PASS")


def test_criterion_2_theorem_reproduction_at_desk_scale():
    for fold in ALL_FOLDS:
        start = time.monotonic()
        report = global_verify(fold, margin=1e-5, resolution=4096, refine_depth=40)
        scan = search.boundary_scan(fold, resolution=4096, refine_depth=40)
        elapsed = time.monotonic() - start
        a0, b0 = extremal_coeffs(fold)
        assert abs(scan.r_min - koebe_radius(fold)) < 1e-5, fold
        assert abs(scan.argmin_a - a0) < 1e-4, fold
        assert abs(scan.argmin_b - b0) < 1e-4, fold
        assert abs(scan.argmin_phi - math.pi / fold) < 1e-4, fold
        assert report.uniqueness_ok, fold
        assert report.worst_excess is not None and report.worst_excess >= 1e-4, fold
        assert elapsed < 60.0, (fold, elapsed)
    print("criterion 2 (scan reproduces theorem, fold 1..8): PASS")


def test_criterion_3_step_table():
    caps = {3: 2.3e-5, 4: 5.4e-5, 5: 1.9e-5, 6: 2.2e-6}
    mu_digits = {3: 950, 4: 921, 5: 890, 6: 857}
    delta_windows = {3: (0.0019, 0.0020), 4: (0.0070, 0.0071), 5: (0.010, 0.011), 6: (0.012, 0.013)}
    t0_inputs = {3: 1.46, 4: 1.49, 5: 1.52, 6: 1.55}
    for fold in (3, 4, 5, 6):
        rep = certify.step_algorithm(fold)
        assert rep.t0 == t0_inputs[fold]
        assert 0.0 < rep.delta0 < caps[fold], (fold, rep.delta0)
        assert int(rep.mu0 * 1000) == mu_digits[fold], (fold, rep.mu0)
        lo, hi = delta_windows[fold]
        assert lo <= rep.Delta < hi, (fold, rep.Delta)
        assert rep.Delta > 0.0
        assert rep.passed
    print("criterion 3 (step table, fold 3..6): PASS")


def test_criterion_4_budan_certificates():
    expected = {2: 11, 4: 7, 6: 9}
    for lemma, count in expected.items():
        p = certify.hat_poly(lemma)
        assert p.exact  # exact rational arithmetic end to end
        cert = certify.budan_certificate(p, *certify.HAT_INTERVALS[lemma])
        assert cert.variations_lo == count, lemma
        assert cert.variations_hi == count, lemma
        assert cert.root_free, lemma
        assert cert.positive_on_interval, lemma
    assert certify.HAT_INTERVALS[6][1] == 0.125
    print("criterion 4 (Budan certificates 11/7/9): PASS")


def test_criterion_5_reconstruction_domination():
    for lemma in (2, 4, 6):
        gaps = certify.domination_gaps(lemma)
        assert all(0.0 <= g < 0.011 for g in gaps), (lemma, min(gaps), max(gaps))
    print("criterion 5 (reconstruction domination): PASS")


def test_criterion_6_identity_suite():
    rng = np.random.default_rng(5)
    for fold in (1, 2, 3, 6):
        alpha = 1.0 / (1 + fold)

        # squared boundary distance agrees with |F(e^{i phi})|^2
        for _ in range(50):
            a = float(rng.uniform(-1.0, 1.0))
            b = float(rng.uniform(-0.6, 1.0))
            varphi = float(rng.uniform(0.0, 2.0 * math.pi))
            f = Trinomial(fold, a, b)
            value = phi(fold, a, b, varphi)
            assert abs(value - abs(f.circle_point(varphi)) ** 2) < 1e-10
            if b > 0.0:
                half = fold * varphi / 2.0
                split = (1.0 - a + b) ** 2 + 16.0 * b * math.cos(half) ** 2 * (
                    mu(a, b) - math.sin(half) ** 2
                )
                assert abs(value - split) < 1e-10

        t = np.linspace(0.0, math.pi / 2.0, 400)[1:]
        arc_a, arc_b = domain._arc_ab_arrays(alpha, t)
        sine_gap = np.abs(arc_a * np.sin(t) - arc_b * np.sin((2.0 - alpha) * t) - np.sin(alpha * t))
        assert float(sine_gap.max()) < 1e-11

        for k in range(0, len(t), 37):
            at, bt = tform_point(fold, float(t[k]) / (1 + fold))
            assert abs(at - arc_a[k]) < 1e-10
            assert abs(bt - arc_b[k]) < 1e-10

        a0, b0 = extremal_coeffs(fold)
        _, p_star = t_star(alpha)
        assert math.hypot(p_star.a - a0, p_star.b - b0) < 1e-10

        corner = suffridge_point(alpha)
        end_a, end_b = domain._arc_ab(alpha, math.pi / 2.0)
        assert math.hypot(end_a - corner.a, end_b - corner.b) < 1e-10

        eps_a, eps_b = domain._arc_ab(alpha, 1e-7)
        t2max = domain.gamma2_tmax(alpha)
        junction_b = (t2max - alpha) / (2.0 - alpha)
        assert math.hypot(eps_a - t2max, eps_b - junction_b) < 1e-8

    for n_deg in range(2, 13):
        obs = q_coeffs(n_deg).evaluate(-1.0).real
        assert abs(obs + 0.25 / math.cos(math.pi / (n_deg + 2)) ** 2) < 1e-10

    assert max(
        abs(x - y) for x, y in zip(general_extremizer_coeffs(1, 5).coeffs, q_coeffs(5).coeffs)
    ) < 1e-10
    assert max(
        abs(x - y)
        for x, y in zip(general_extremizer_coeffs(2, 3).coeffs, odd_extremizer_coeffs(5).coeffs)
    ) < 1e-10
    print("criterion 6 (identity suite): PASS")


def test_criterion_7_lemma_grids():
    grid = 1000
    for lemma in (1, 3, 5):
        rep = certify.verify_lemma_numeric(lemma, grid)
        assert rep.passed, (lemma, rep.failures[:3])

    for alpha in ALPHA_GRID:
        t = math.pi / 2.0 * np.arange(1, grid + 1) / grid
        arc_a, arc_b = domain._arc_ab_arrays(alpha, t)

        # height -A + B attains its minimum at the radius-identity parameter
        height = -arc_a + arc_b
        ts = math.pi / (3.0 - alpha)
        k_min = int(np.argmin(height))
        assert abs(float(t[k_min]) - ts) < math.pi / 2.0 / grid * 1.5, alpha
        a_s, b_s = domain._arc_ab(alpha, ts)
        for delta in (1e-3, 1e-2):
            for side in (ts - delta, ts + delta):
                sa, sb = domain._arc_ab(alpha, side)
                assert -a_s + b_s <= -sa + sb + 1e-15, alpha

        # the corner covering radius strictly exceeds the minimal radius
        r_alpha = 4.0 * math.cos(math.pi / (3.0 - alpha)) ** 2
        assert suffridge_radius(alpha) > r_alpha, alpha
    print("criterion 7 (lemma grids): PASS")


def test_criterion_8_oracle_agreement():
    for fold in (1, 2, 3):
        rate = domain_agreement(fold, samples=5000, band=0.01, seed=0)
        assert rate >= 0.99, (fold, rate)

        a0, b0 = extremal_coeffs(fold)
        res = univalence_check(Trinomial(fold, a0, b0), resolution=512)
        assert res.verdict in (Verdict.UNIVALENT, Verdict.MARGINAL), fold

        outside = Trinomial(fold, 0.0, 1.05 / (1 + 2 * fold))
        first = univalence_check(outside, resolution=512)
        second = univalence_check(outside, resolution=512)
        assert first.verdict is Verdict.NOT_UNIVALENT, fold
        assert first.witness is not None
        assert first.witness == second.witness
        phi1, phi2 = first.witness
        assert abs(outside.circle_point(phi1) - outside.circle_point(phi2)) < 1e-8
    print("criterion 8 (oracle agreement): PASS")
