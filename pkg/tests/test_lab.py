"""Verification campaigns: Hilbert series, certificates, reports and their
determinism."""

import json
from fractions import Fraction
from itertools import product
from math import factorial

import pytest

import hookgh
from hookgh import (
    CampaignReport,
    Claim,
    HilbertSeries,
    HookShape,
    Monomial,
    enumerate_fillings,
    explore_d_intersection,
    hilbert_series,
    inversions,
    phi,
    verify_arr_basis,
    verify_nfact2,
    verify_orbit_harmonics,
)
from hookgh.fillings import UNIT
from hookgh.lab import _exclusion_scan
from hookgh.polyalg import OrbitParams, seeded_params
from hookgh.shapes import b_stat, conjugate


def hooks(n_max):
    return [HookShape(a, n - a)
            for n in range(1, n_max + 1) for a in range(1, n + 1)]


# ------------------------------------------------------- report primitives


def test_claim_pass_flag_and_json():
    good = Claim("two plus two", 4, 4)
    bad = Claim("two plus two", 4, 5)
    assert good.passed and not bad.passed
    assert good.to_json() == {"anchor": "two plus two", "expected": 4,
                              "computed": 4, "pass": True}


def test_report_ok_text_and_json():
    report = CampaignReport("demo", {"n": 1}, [Claim("a", 1, 1), Claim("b", 2, 3)])
    assert not report.ok
    text = report.to_text()
    assert "[PASS] a" in text and "[FAIL] b" in text and "FAILED" in text
    data = report.to_json()
    assert set(data) == {"campaign", "inputs", "claims", "exploratory",
                         "ms", "engine"}
    assert data["engine"] == hookgh.__version__
    ok_report = CampaignReport("demo", {}, [Claim("a", 1, 1)])
    assert ok_report.ok and "OK" in ok_report.to_text()


# ----------------------------------------------------------- Hilbert series


def test_hilbert_series_type():
    h = HilbertSeries({(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 1})
    assert h.coefficient(1, 0) == 2
    assert h.coefficient(5, 5) == 0
    assert h.total() == 6
    assert h.t_degree() == 1 and h.q_degree() == 1
    assert h.is_symmetric(1, 1)
    assert not HilbertSeries({(0, 0): 1, (1, 0): 2}).is_symmetric(1, 0)
    assert str(h) == "1 + 2*q + 2*t + t*q"
    assert str(HilbertSeries({})) == "0"
    assert str(HilbertSeries({(2, 0): 1, (0, 3): 4})) == "t^2 + 4*q^3"
    assert h.to_json() == {"terms": [
        {"t": 0, "q": 0, "c": 1}, {"t": 0, "q": 1, "c": 2},
        {"t": 1, "q": 0, "c": 2}, {"t": 1, "q": 1, "c": 1}]}
    with pytest.raises(ValueError):
        HilbertSeries({(0, 0): -1})
    assert HilbertSeries({(0, 0): 0}) == HilbertSeries({})


def test_hilbert_series_smallest_shapes():
    assert str(hilbert_series(HookShape(1, 1))) == "1 + t"
    assert str(hilbert_series(HookShape(2, 0))) == "1 + q"
    assert hilbert_series(HookShape(2, 1)) == HilbertSeries(
        {(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 1})


def test_hilbert_series_against_direct_enumeration():
    for s in hooks(5):
        coeffs = {}
        for S in enumerate_fillings(s):
            inv = inversions(S)
            key = (len(inv.col_pairs), len(inv.row_pairs))
            coeffs[key] = coeffs.get(key, 0) + 1
        assert hilbert_series(s) == HilbertSeries(coeffs)


def test_hilbert_series_symmetry_and_degrees():
    for s in hooks(6):
        h = hilbert_series(s)
        assert h.total() == factorial(s.n)
        assert h.t_degree() == b_stat(s)
        assert h.q_degree() == b_stat(conjugate(s))
        assert h.is_symmetric(h.t_degree(), h.q_degree())


# ------------------------------------------------------------ basis campaign


def test_verify_arr_basis():
    report = verify_arr_basis(HookShape(2, 1))
    assert report.ok
    assert [c.expected for c in report.claims] == [6, 6, True, 6]
    assert report.inputs == {"shape": "2,1", "n": 3, "guard": 6}
    trivial = verify_arr_basis(HookShape(1, 0))
    assert trivial.ok
    assert [c.computed for c in trivial.claims] == [1, 1, True, 1]


def test_verify_arr_basis_guard():
    with pytest.raises(ValueError):
        verify_arr_basis(HookShape(4, 3))
    with pytest.raises(ValueError):
        verify_arr_basis(HookShape(2, 1), guard=2)
    assert verify_arr_basis(HookShape(2, 1), guard=3).ok


# ------------------------------------------------------ half-factorial camp


def test_verify_nfact2_smallest_cases():
    tiny = verify_nfact2(HookShape(2, 1))
    assert tiny.ok
    assert tiny.inputs["mu"] == "2" and tiny.inputs["rho"] == "1,1"
    report = verify_nfact2(HookShape(2, 2))
    assert report.ok
    assert len(report.claims) == 16
    assert all(c.passed for c in report.claims)
    assert report.inputs == {"lambda": "2,1^2", "mu": "2,1", "rho": "1,1^2",
                             "n": 3, "guard": 8}


def test_nfact2_common_monomials_at_n3():
    mu, rho = HookShape(2, 1), HookShape(1, 2)
    common = {phi(S) for S in enumerate_fillings(mu)} & \
             {phi(T) for T in enumerate_fillings(rho)}
    assert common == {UNIT, Monomial(x=((2, 1),)), Monomial(x=((3, 1),))}


def test_verify_nfact2_eligibility_and_guard():
    with pytest.raises(ValueError):
        verify_nfact2(HookShape(1, 2))
    with pytest.raises(ValueError):
        verify_nfact2(HookShape(3, 0))
    with pytest.raises(ValueError):
        verify_nfact2(HookShape(2, 1), guard=1)
    assert verify_nfact2(HookShape(2, 1), guard=2).ok


def test_reports_are_deterministic_except_wall_time():
    a = verify_nfact2(HookShape(2, 2)).to_json()
    b = verify_nfact2(HookShape(2, 2)).to_json()
    a["ms"] = b["ms"] = 0.0
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


# ------------------------------------------------------------ orbit campaign


def test_verify_orbit_harmonics():
    report = verify_orbit_harmonics(HookShape(2, 1))
    assert report.ok
    assert len(report.claims) == 2
    assert [c.expected for c in report.claims] == [6, 6]
    assert report.inputs["alphas"] == ["1", "2", "3"]
    explicit = verify_orbit_harmonics(
        HookShape(2, 1), OrbitParams((1, 2, 3), (-1, -2, -3)))
    assert explicit.ok
    assert verify_orbit_harmonics(HookShape(2, 1), seeded_params(3, 1)).ok


def test_verify_orbit_rejects_bad_params_and_guard():
    with pytest.raises(ValueError):
        verify_orbit_harmonics(HookShape(2, 1), OrbitParams((1, 1, 2), (1, 2, 3)))
    with pytest.raises(ValueError):
        verify_orbit_harmonics(HookShape(3, 3))


# ------------------------------------------------------- exploratory campaign


def test_explore_d_intersection_asserts_nothing():
    report = explore_d_intersection(HookShape(2, 1))
    assert report.claims == []
    assert report.ok  # vacuously: exploratory findings never gate
    assert len(report.exploratory) == 4
    dim_entry, family_entry, fail_mu, fail_rho = report.exploratory
    assert dim_entry["computed"] == 1
    assert dim_entry["half_factorial"] == 1
    assert dim_entry["matches_half_factorial"] is True
    assert family_entry["common"] == 0
    assert family_entry["left"] == family_entry["right"] == 1
    assert fail_mu["failures"] == 0 and fail_mu["total"] == 1
    assert fail_rho["failures"] == 0 and fail_rho["total"] == 1


def test_explore_d_eligibility_and_guard():
    with pytest.raises(ValueError):
        explore_d_intersection(HookShape(1, 2))
    # The guard bounds the size of the two child shapes, i.e. n - 1.
    with pytest.raises(ValueError):
        explore_d_intersection(HookShape(4, 2), guard=4)
    assert explore_d_intersection(HookShape(4, 2)).claims == []


# ------------------------------------------------------------ exclusion scan


def test_exclusion_scan_matches_brute_force():
    n = 3
    vec_pool = list(product(range(3), repeat=n))
    monomial_pool = [tuple((i + 1, e) for i, e in enumerate(v) if e)
                     for v in vec_pool if any(v)]
    for vecs in (vec_pool[::5], vec_pool[::9], [(1, 0, 0)], []):
        sigs = monomial_pool + monomial_pool[::2]  # duplicates hit the cache
        expect = 0
        for pairs in sigs:
            target = [0] * n
            for i, e in pairs:
                target[i - 1] = e
            expect += any(all(a >= b for a, b in zip(v, target)) for v in vecs)
        assert _exclusion_scan(iter(sigs), list(vecs), n) == expect
