import json

import pytest

from unknot_lmov.arith import fp
from unknot_lmov.invariants import Q_L_MINUS_M_HALF
from unknot_lmov.verify import (
    SUITES,
    VerifyReport,
    _case_binom_p,
    _case_fp_sign,
    _case_genus0_rows,
    check_eq_fp_sign,
    check_extremal,
    check_genus0_integrality,
    check_genus0_rows,
    check_lemma_binom_p,
    check_lemma_cm,
    check_lemma_fp_power,
    check_lemma_valuation,
    check_phi_identity,
    check_pipeline,
    run_suites,
)


def test_fp_power_examples():
    assert fp(6, 2) == 15 and 15 % 4 == 3  # -1 = (-1)^[3/2]
    assert check_lemma_fp_power(2, 1, 3).passed
    assert check_lemma_fp_power(3, 1, 30).passed
    r = check_lemma_fp_power(2, 2, 30)
    assert r.passed and r.cases_run == 30


def test_fp_power_rejects_composite():
    with pytest.raises(ValueError):
        check_lemma_fp_power(4, 1, 5)


def test_binom_p_examples():
    assert check_lemma_binom_p(3, 3, range(-5, 6)).passed
    assert _case_binom_p({"p": 2, "m": 2, "l": 2, "tau": 1}) is None
    assert check_lemma_binom_p(5, 5, range(-3, 4)).passed


def test_binom_p_counts_out_of_hypothesis_cases_as_skipped():
    r = check_lemma_binom_p(3, 6, [0, 1])
    # l = 0 has no decomposition p^beta * b
    assert r.skipped == 2 * 2
    assert r.cases_run == 2 * (3 + 6)


def test_valuation_examples():
    assert check_lemma_valuation(1, range(-10, 11)).passed
    assert check_lemma_valuation(6, range(-4, 5)).passed


def test_fp_sign_examples():
    assert fp(6, 3) == 40 and 40 % 3 == 1
    assert check_eq_fp_sign(3, 1, 2).passed
    assert check_eq_fp_sign(2, 2, 20).passed
    assert check_eq_fp_sign(5, 1, 20).passed


def test_fp_sign_fails_for_eight():
    # the units mod 8 multiply to +1, so the second congruence breaks for odd k
    r = check_eq_fp_sign(2, 3, 20)
    assert not r.passed
    assert sorted(f.case["k"] for f in r.failures) == list(range(1, 21, 2))
    assert all(f.case["clause"] == "sign" for f in r.failures)
    for f in r.failures:
        assert _case_fp_sign(f.case) == (f.relation, f.observed)


def test_cm_identity():
    r = check_lemma_cm(6, 10)
    assert r.passed and r.cases_run == 6 * 11
    assert check_lemma_cm(1, 1).passed


def test_phi_identity():
    assert check_phi_identity(6, range(-3, 4)).passed


def test_pipeline_small():
    assert check_pipeline(3, range(-1, 2)).passed


def test_extremal_skips_out_of_regime():
    r = check_extremal(3, [0, 1, 2])
    assert r.passed and r.skipped == 2 * 3 * 2


def test_failures_reproduce_in_isolation():
    r = check_genus0_rows(3, [1], Q_L_MINUS_M_HALF)
    assert not r.passed
    for f in r.failures:
        assert _case_genus0_rows(f.case) == (f.relation, f.observed)


def test_reports_are_deterministic_and_leave_out_time():
    a = check_genus0_integrality(10, range(-2, 3))
    b = check_genus0_integrality(10, range(-2, 3))
    assert a.to_json() == b.to_json()
    assert "elapsed" not in a.to_dict()
    assert "elapsed" in a.to_dict(timing=True)


def test_seeded_sampling_is_reproducible():
    a = check_genus0_integrality(5, [1], seed=7, samples=20)
    b = check_genus0_integrality(5, [1], seed=7, samples=20)
    c = check_genus0_integrality(5, [1])
    assert a.to_json() == b.to_json()
    assert a.seed == 7 and json.loads(a.to_json())["seed"] == 7
    assert a.cases_run == c.cases_run + 20


def test_parallel_matches_sequential():
    a = check_lemma_valuation(8, range(-2, 3))
    b = check_lemma_valuation(8, range(-2, 3), jobs=2)
    assert a.to_json() == b.to_json()
    c = check_genus0_rows(3, [1, 2], Q_L_MINUS_M_HALF, jobs=2)
    d = check_genus0_rows(3, [1, 2], Q_L_MINUS_M_HALF)
    assert c.to_json() == d.to_json()


def test_passed_iff_no_failures():
    r = VerifyReport("x", cases_run=3)
    assert r.passed
    r.failures.append(object())
    assert not r.passed


def test_registry():
    assert {"fp_power", "binom_p", "valuation", "fp_sign", "cm", "phi", "theorems", "orientation"} <= set(SUITES)
    with pytest.raises(KeyError):
        run_suites(["nope"])
    reports = run_suites(["cm", "cm", "phi"])
    assert [r.suite for r in reports] == ["cm", "phi"]
