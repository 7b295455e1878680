"""Membership predicates, coefficient-bound reports, and the member sampler."""

from __future__ import annotations

import numpy as np
import pytest

from polyharm import (
    KINDS,
    HarmonicLayer,
    PolyharmonicMap,
    coefficient_bounds,
    convex_membership,
    membership,
    rotated,
    sample_member,
    starlike_membership,
)
from polyharm.catalog import f1, f2, f3, f4, identity

SEED = 811


def test_kinds_tuple():
    assert KINDS == ("starlike", "convex")
    with pytest.raises(ValueError):
        membership(identity(), "elliptic")


def test_identity_is_member_of_both():
    for kind in KINDS:
        rep = membership(identity(), kind)
        assert rep.member
        assert rep.lhs == 0.0
        assert rep.rhs == 1.0
        assert rep.slack == 1.0
        assert rep.first_order_budget == 0.0


def test_f1_convex_golden():
    rep = convex_membership(f1())
    assert rep.member
    assert rep.lhs == 0.0
    assert abs(rep.rhs - 1.0 / 6.0) <= 1e-12
    assert abs(rep.slack - 1.0 / 6.0) <= 1e-12


def test_f4_convex_golden():
    rep = convex_membership(f4())
    assert rep.member
    assert rep.lhs == 0.0
    assert abs(rep.rhs - 1.0 / 12.0) <= 1e-12


def test_f2_starlike_slack_zero():
    rep = starlike_membership(f2())
    assert rep.member
    assert abs(rep.lhs - 1.0) <= 1e-12
    assert rep.rhs == 1.0
    assert abs(rep.slack) <= 1e-12


def test_f3_convex_slack_zero():
    rep = convex_membership(f3())
    assert rep.member
    assert abs(rep.slack) <= 1e-12


def test_starlike_rejection_example():
    F = PolyharmonicMap.from_coefficients(
        1, 2, analytic={(1, 2): 0.25}, anti_analytic={(1, 1): 0.6})
    rep = starlike_membership(F)
    assert not rep.member
    assert abs(rep.lhs - 0.5) <= 1e-15
    assert abs(rep.rhs - 0.4) <= 1e-15


def test_budget_overflow_rejected():
    # first-order mass alone exceeds 1, so rhs < 0 and nothing else matters
    F = PolyharmonicMap.from_coefficients(
        2, 2, analytic={(2, 1): 0.3}, anti_analytic={(1, 1): 0.5})
    rep = starlike_membership(F)
    assert rep.first_order_budget > 1.0
    assert rep.rhs < 0.0
    assert not rep.member


def test_convex_members_are_starlike_members():
    for i in range(40):
        p = 1 + i % 3
        F = sample_member("convex", p, 8, fill=0.9, seed=(SEED, i))
        assert convex_membership(F).member
        assert starlike_membership(F).member


def test_sample_member_fill_semantics():
    for i in range(20):
        F = sample_member("starlike", 2, 8, fill=1.0, seed=(SEED + 1, i))
        rep = starlike_membership(F)
        assert rep.member
        assert abs(rep.slack) <= 1e-12
        G = sample_member("convex", 2, 8, fill=0.5, seed=(SEED + 1, i))
        repg = convex_membership(G)
        assert repg.member
        assert abs(repg.slack - 0.5 * repg.rhs) <= 1e-12


def test_sample_member_rejects_bad_fill():
    for bad in (0.0, -0.5, 1.5):
        with pytest.raises(ValueError):
            sample_member("starlike", 1, 4, fill=bad, seed=0)


def test_sample_member_deterministic():
    F = sample_member("convex", 3, 10, fill=0.7, seed=42)
    G = sample_member("convex", 3, 10, fill=0.7, seed=42)
    for lf, lg in zip(F.layers, G.layers):
        assert np.array_equal(lf.analytic.coeffs, lg.analytic.coeffs)
        assert np.array_equal(lf.anti_analytic.coeffs, lg.anti_analytic.coeffs)
    H = sample_member("convex", 3, 10, fill=0.7, seed=43)
    assert not np.array_equal(F.layers[0].analytic.coeffs, H.layers[0].analytic.coeffs)


def test_membership_rotation_invariant():
    rng = np.random.default_rng(SEED + 2)
    for i in range(10):
        F = sample_member("starlike", 2, 6, fill=0.8, seed=(SEED + 2, i))
        G = rotated(F, rng.uniform(0.0, 2 * np.pi))
        for kind in KINDS:
            a, b = membership(F, kind), membership(G, kind)
            assert abs(a.lhs - b.lhs) <= 1e-13
            assert abs(a.rhs - b.rhs) <= 1e-13
            assert a.member == b.member


def test_scale_monotone_slack():
    """Shrinking the j >= 2 block strictly grows the slack."""
    for i in range(10):
        F = sample_member("starlike", 2, 6, fill=0.9, seed=(SEED + 3, i))
        base = starlike_membership(F).slack
        for t in (0.9, 0.5, 0.1):
            layers = []
            for layer in F.layers:
                a = layer.analytic.coeffs.copy()
                b = layer.anti_analytic.coeffs.copy()
                a[1:] *= t
                b[1:] *= t
                layers.append(HarmonicLayer(a, b))
            shrunk = PolyharmonicMap(layers)
            assert starlike_membership(shrunk).slack > base


def test_coefficient_bounds_f2_tight_at_degree():
    report = coefficient_bounds(f2(), "starlike")
    assert report.kind == "starlike"
    assert report.all_within
    rows = {row.j: row for row in report.rows}
    assert rows[3].total == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert rows[3].bound == 1.0 / 3.0
    assert rows[3].tight
    assert rows[2].total == 0.0
    assert not rows[2].tight


def test_coefficient_bounds_f3_tight_at_degree():
    report = coefficient_bounds(f3(), "convex")
    rows = {row.j: row for row in report.rows}
    assert rows[3].total == pytest.approx(1.0 / 9.0, abs=1e-15)
    assert rows[3].bound == pytest.approx(1.0 / 9.0, abs=0)
    assert rows[3].tight


def test_coefficient_bounds_identity_all_zero():
    report = coefficient_bounds(identity(truncation=5), "convex")
    assert all(row.total == 0.0 for row in report.rows)
    assert not any(row.tight for row in report.rows)
    assert [row.j for row in report.rows] == [2, 3, 4, 5]


def test_coefficient_bounds_requires_membership():
    F = PolyharmonicMap.from_coefficients(1, 3, analytic={(1, 3): 0.9})
    assert not starlike_membership(F).member
    with pytest.raises(ValueError, match="starlike"):
        coefficient_bounds(F, "starlike")


def test_sampled_members_satisfy_per_power_bounds():
    for i in range(30):
        p = 1 + i % 3
        Fs = sample_member("starlike", p, 10, fill=0.95, seed=(SEED + 4, i))
        for row in coefficient_bounds(Fs, "starlike").rows:
            assert row.total <= 1.0 / row.j + 1e-9
        Fc = sample_member("convex", p, 10, fill=0.95, seed=(SEED + 5, i))
        for row in coefficient_bounds(Fc, "convex").rows:
            assert row.total <= 1.0 / row.j ** 2 + 1e-9
