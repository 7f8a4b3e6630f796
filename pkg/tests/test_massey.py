"""The triple-product obstruction value: closed form vs. the linking route."""

import math

import numpy as np
import pytest

from holink import (
    DivergenceError,
    DomainError,
    find_vanishing_crossing,
    massey_report,
    massey_value_closed_form,
    massey_value_via_linking,
    modular_lambda,
)
from holink.massey import _closed_form_from_lambda

# frozen reference values
VALUE_AT_I = 4.0 * math.log(0.5) / math.pi     # = -0.8825424006106064
CLOSED_AT_I = -0.8825424006106053
LINKED_AT_I = -0.8825424006106068
VALUE_AT_1_PLUS_I = 0.882542400610606
VALUE_AT_2I = -0.03804340783020451
VALUE_AT_GENERIC = -0.05738355699730882        # tau = 0.3 + 1.7i


def test_square_point_golden():
    assert abs(massey_value_closed_form(1j) - VALUE_AT_I) < 1e-12
    assert abs(massey_value_via_linking(1j) - VALUE_AT_I) < 1e-12
    assert massey_value_closed_form(1j) == CLOSED_AT_I
    assert massey_value_via_linking(1j) == LINKED_AT_I


def test_shifted_square_point_flips_sign():
    # lambda(tau + 1) = lambda/(lambda - 1) sends 1/2 to -1, so |1 - lambda|
    # doubles and the value crosses zero somewhere in between
    v = massey_value_closed_form(1 + 1j)
    assert abs(v - VALUE_AT_1_PLUS_I) < 1e-12
    assert abs(v + VALUE_AT_I) < 1e-12


def test_other_frozen_points():
    assert abs(massey_value_closed_form(2j) - VALUE_AT_2I) < 1e-13
    assert abs(massey_value_closed_form(0.3 + 1.7j) - VALUE_AT_GENERIC) < 1e-13


def test_reports_are_real_floats():
    for tau in (1j, 0.5 + 0.8j, -0.3 + 2.2j, 1 + 1j):
        rep = massey_report(tau)
        assert isinstance(rep.value_closed_form, float)
        assert isinstance(rep.value_via_linking, float)
        assert isinstance(rep.nonvanishing, bool)
        assert rep.tau == complex(tau)
        assert rep.residual == abs(rep.value_closed_form - rep.value_via_linking)
        assert not rep.diverged


def test_cross_path_agreement_random_tau():
    rng = np.random.default_rng(401)
    worst = 0.0
    for _ in range(50):
        tau = complex(rng.uniform(-1, 1), rng.uniform(0.3, 3.0))
        rep = massey_report(tau)
        worst = max(worst, rep.residual)
    assert worst < 1e-8


def test_lambda_shift_periodicity():
    rng = np.random.default_rng(402)
    for _ in range(20):
        tau = complex(rng.uniform(-1, 1), rng.uniform(0.3, 3.0))
        assert abs(modular_lambda(tau + 2) - modular_lambda(tau)) < 1e-9
        assert abs(massey_value_closed_form(tau + 2)
                   - massey_value_closed_form(tau)) < 1e-9


def test_nonvanishing_threshold():
    rep = massey_report(0.3 + 1.7j)
    assert rep.nonvanishing
    assert not massey_report(0.3 + 1.7j, tolerance=1.0).nonvanishing
    with pytest.raises(DomainError):
        massey_report(1j, tolerance=0.0)
    with pytest.raises(DomainError):
        massey_report(1j, tolerance=-1e-9)


def test_divergent_lambda_value():
    with pytest.raises(DivergenceError):
        _closed_form_from_lambda(1.0)
    # slightly off the pole is fine and very negative
    assert _closed_form_from_lambda(1.0 + 1e-30j) < -80.0


def test_vanishing_crossing_located():
    tau = find_vanishing_crossing()
    assert abs(tau.real - 0.5) < 1e-9
    assert tau.imag == 1.0
    rep = massey_report(tau)
    assert not rep.nonvanishing
    assert abs(rep.value_closed_form) < 1e-6
    # the flag flips as Re tau moves off the wall
    assert massey_report(tau - 0.2).nonvanishing
    assert massey_report(tau + 0.2).nonvanishing
    left = massey_value_closed_form(tau - 0.2)
    right = massey_value_closed_form(tau + 0.2)
    assert left * right < 0  # genuine sign change across the crossing


def test_crossing_wall_is_unit_complement():
    # on Re tau = 1/2 the complement 1 - lambda has modulus exactly one,
    # which is precisely where the logarithm vanishes
    rng = np.random.default_rng(403)
    for _ in range(10):
        tau = complex(0.5, rng.uniform(0.4, 2.5))
        assert abs(abs(1.0 - modular_lambda(tau)) - 1.0) < 1e-12
        assert abs(massey_value_closed_form(tau)) < 1e-10
