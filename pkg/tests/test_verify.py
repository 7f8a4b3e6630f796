"""Determinism and coverage of the bundled invariant suites."""

import pytest

from holink import format_summary, run_all

EXPECTED_SUITES = [
    "half-period-sum",
    "weierstrass-oracle",
    "lambda-periodicity",
    "lambda-complement",
    "lambda-no-underflow",
    "sphere-closed-form",
    "linking-bilinearity",
    "translation-invariance",
    "half-period-dual-route",
    "adjunction-square",
    "green-flexibility",
    "green-laplacian",
    "invariant-dims-dual-route",
    "hodge-conjugation-symmetry",
    "serre-symmetry",
    "massey-cross-path",
    "massey-reality",
    "massey-lambda-periodicity",
]


def test_all_suites_pass_at_default_tolerances():
    results = run_all(seed=42)
    failed = [r.name for r in results if not r.passed]
    assert failed == [], failed


def test_suite_roster():
    results = run_all(seed=42)
    assert [r.name for r in results] == EXPECTED_SUITES


def test_same_seed_is_byte_identical():
    a = format_summary(run_all(seed=42), seed=42)
    b = format_summary(run_all(seed=42), seed=42)
    assert a == b
    lines = a.splitlines()
    assert lines[0] == "verification suites: seed=42 tol=default"
    assert lines[-1] == f"result: {len(EXPECTED_SUITES)}/{len(EXPECTED_SUITES)} suites passed"
    assert len(lines) == len(EXPECTED_SUITES) + 2


def test_different_seed_changes_draws_not_verdicts():
    results = run_all(seed=7)
    assert all(r.passed for r in results)
    a = {r.name: r.worst for r in run_all(seed=42)}
    b = {r.name: r.worst for r in results}
    # at least one float-valued suite must see different random draws
    assert any(a[n] != b[n] for n in a)


def test_absurd_tolerance_fails_float_suites():
    results = run_all(seed=42, tol=1e-30)
    failed = [r.name for r in results if not r.passed]
    assert failed  # residuals of genuine float computations cannot hit 1e-30
    assert all(r.tolerance == 1e-30 for r in results)
    # the exact integer identities still hold at any positive tolerance
    passed = {r.name for r in results if r.passed}
    assert "invariant-dims-dual-route" in passed
    text = format_summary(results, seed=42, tol=1e-30)
    assert "[FAIL]" in text
    assert "tol=1.000e-30" in text.splitlines()[0]


def test_tolerance_must_be_positive():
    with pytest.raises(ValueError):
        run_all(seed=42, tol=0.0)
    with pytest.raises(ValueError):
        run_all(seed=42, tol=-1.0)
