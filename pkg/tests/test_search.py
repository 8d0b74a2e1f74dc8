from __future__ import annotations

import math

import numpy as np
import pytest

from koebetri import search
from koebetri.domain import CurveId
from koebetri.objective import Trinomial, extremal_coeffs, koebe_radius
from koebetri.search import (
    UnivalenceVerdict,
    Verdict,
    boundary_scan,
    domain_agreement,
    global_verify,
    min_over_direction,
    univalence_check,
)


def test_min_over_direction_at_extremal_is_main():
    for fold in (1, 3, 8):
        a0, b0 = extremal_coeffs(fold)
        varphi, value = min_over_direction(Trinomial(fold, a0, b0))
        assert abs(varphi - math.pi / fold) < 1e-15
        assert abs(math.sqrt(value) - koebe_radius(fold)) < 1e-14


def test_min_over_direction_special_beats_main():
    from koebetri.domain import suffridge_point
    from koebetri.objective import suffridge_radius

    p = suffridge_point(0.5)
    varphi, value = min_over_direction(Trinomial(1, p.a, p.b))
    assert abs(math.sqrt(value) - suffridge_radius(0.5)) < 1e-12
    assert 0.0 < varphi < math.pi


def test_boundary_scan_recovers_radius():
    for fold in (1, 3, 5):
        scan = boundary_scan(fold, resolution=2048, refine_depth=40)
        a0, b0 = extremal_coeffs(fold)
        assert abs(scan.r_min - koebe_radius(fold)) < 1e-9
        assert abs(scan.argmin_a - a0) < 1e-5
        assert abs(scan.argmin_b - b0) < 1e-5
        assert abs(scan.argmin_phi - math.pi / fold) < 1e-5
        assert scan.curve is CurveId.GAMMA3_PLUS


def test_boundary_scan_deterministic():
    s1 = boundary_scan(2, resolution=512, refine_depth=20)
    s2 = boundary_scan(2, resolution=512, refine_depth=20)
    assert s1.r_min == s2.r_min
    assert s1.t == s2.t
    assert s1.curve is s2.curve


def test_boundary_scan_validation():
    with pytest.raises(ValueError):
        boundary_scan(0)
    with pytest.raises(ValueError):
        boundary_scan(3, resolution=32)


def test_global_verify_passes():
    report = global_verify(3, margin=1e-5, resolution=2048, refine_depth=40)
    assert report.passed
    assert report.uniqueness_ok
    assert report.radius_error < 1e-5
    assert report.worst_excess is not None and report.worst_excess >= search.UNIQUENESS_EXCESS


def test_global_verify_negative_control():
    # an inflated expected radius must fail the margin check, not raise
    report = global_verify(3, margin=1e-5, resolution=512, refine_depth=20, expected_radius=0.75)
    assert not report.passed


def test_univalence_identity_map():
    res = univalence_check(Trinomial(1, 0.0, 0.0), resolution=256)
    assert res.verdict is Verdict.UNIVALENT


def test_univalence_interior_point():
    a0, b0 = extremal_coeffs(3)
    res = univalence_check(Trinomial(3, 0.5 * a0, 0.5 * b0), resolution=512)
    assert res.verdict is Verdict.UNIVALENT


def test_univalence_extremal_not_flagged():
    for fold in (1, 2, 3):
        a0, b0 = extremal_coeffs(fold)
        res = univalence_check(Trinomial(fold, a0, b0), resolution=512)
        assert res.verdict in (Verdict.UNIVALENT, Verdict.MARGINAL)


def test_univalence_outside_point_has_witness():
    for fold in (1, 2, 3):
        b = 1.05 / (1 + 2 * fold)
        f = Trinomial(fold, 0.0, b)
        res = univalence_check(f, resolution=512)
        assert res.verdict is Verdict.NOT_UNIVALENT
        assert res.witness is not None
        phi1, phi2 = res.witness
        z1 = f.circle_point(phi1)
        z2 = f.circle_point(phi2)
        assert abs(z1 - z2) < 1e-8
        assert abs(phi1 - phi2) > 1e-6


def test_univalence_witness_reproducible():
    f = Trinomial(2, 0.0, 1.05 / 5.0)
    r1 = univalence_check(f, resolution=512)
    r2 = univalence_check(f, resolution=512)
    assert r1.witness == r2.witness


def test_univalence_far_outside():
    res = univalence_check(Trinomial(1, 0.9, 0.8), resolution=512)
    assert res.verdict is Verdict.NOT_UNIVALENT


def test_univalence_resolution_floor():
    with pytest.raises(ValueError):
        univalence_check(Trinomial(1, 0.0, 0.0), resolution=128)


def test_verdict_requires_witness():
    with pytest.raises(ValueError):
        UnivalenceVerdict(verdict=Verdict.NOT_UNIVALENT, resolution=512, witness=None)


def test_domain_agreement_high():
    rate = domain_agreement(1, samples=1000, band=0.01, seed=0)
    assert rate >= 0.99


def test_domain_agreement_validation():
    with pytest.raises(ValueError):
        domain_agreement(1, samples=10, band=0.01)


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("KOEBE_THREADS", "2")
    assert search._thread_count() == 2
    monkeypatch.setenv("KOEBE_THREADS", "0")
    with pytest.raises(ValueError):
        search._thread_count()
    monkeypatch.delenv("KOEBE_THREADS")
    assert search._thread_count() >= 1
