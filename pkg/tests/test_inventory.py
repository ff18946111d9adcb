"""Stocking objective, closed form vs exact argmax, and curve properties."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from longtail.inventory import (
    InventoryParams,
    bruteforce_stock,
    closed_form_stock,
    inventory_curve,
    objective,
)
from oracles import argmax_by_enumeration, objective_highprec


def _params(a=10.0, b=1.0, mu=0.25, alpha=3.5, y_max=1_000_000):
    return InventoryParams(profit_per_item=a, turnover_cost=b, mu=mu, alpha=alpha, y_max=y_max)


def test_objective_empty_inventory_is_zero():
    assert objective(0, _params()) == 0.0


def test_objective_single_rank():
    assert objective(1, _params()) == pytest.approx(9.5, abs=1e-12)


def test_objective_two_ranks_matches_highprec_oracle():
    expected = float(objective_highprec(2, 10, 1, 0.25, 3.5))
    assert objective(2, _params()) == pytest.approx(expected, abs=1e-12)
    assert objective(2, _params()) == pytest.approx(9.883883476483184, abs=1e-12)


def test_objective_rejects_negative_and_out_of_range_y():
    with pytest.raises(ValueError):
        objective(-1, _params())
    with pytest.raises(ValueError):
        objective(11, _params(y_max=10))


@settings(max_examples=100, deadline=None)
@given(
    a=st.floats(min_value=0.01, max_value=10.0),
    b=st.floats(min_value=0.01, max_value=10.0),
    mu=st.floats(min_value=1e-6, max_value=1.0),
    alpha=st.floats(min_value=0.1, max_value=6.0),
    y=st.integers(min_value=1, max_value=100),
)
def test_marginal_identity(a, b, mu, alpha, y):
    params = _params(a, b, mu, alpha)
    marginal = a * y ** (-alpha) - b * math.sqrt(mu)
    assert objective(y, params) - objective(y - 1, params) == pytest.approx(marginal, abs=1e-12)


def test_bruteforce_zero_profit_stocks_nothing():
    result = bruteforce_stock(_params(a=0.0))
    assert result.y_bruteforce == 0
    assert result.objective_at_optimum == 0.0
    assert result.y_closed_form == 0.0


def test_bruteforce_example_matches_enumeration_and_marginal_condition():
    params = _params(a=10.0, b=1.0, mu=0.25, alpha=3.5)
    result = bruteforce_stock(params)
    assert result.y_bruteforce == argmax_by_enumeration(params, 1000)
    y_star = result.y_bruteforce
    cost = 1.0 * math.sqrt(0.25)
    assert 10.0 * y_star ** (-3.5) >= cost > 10.0 * (y_star + 1) ** (-3.5)
    assert result.objective_at_optimum == pytest.approx(objective(y_star, params), rel=1e-12)


def test_bruteforce_boundary_cost_dominates():
    # B*sqrt(mu) >= A: nothing beyond rank 1 can pay for itself
    assert bruteforce_stock(_params(a=0.4, b=1.0, mu=0.25)).y_bruteforce == 0
    assert bruteforce_stock(_params(a=0.6, b=1.0, mu=0.25)).y_bruteforce == 1
    # exactly at the boundary A == B*sqrt(mu): rank 1 gains zero; prefer smaller y
    assert bruteforce_stock(_params(a=0.5, b=1.0, mu=0.25)).y_bruteforce == 0


def test_bruteforce_warns_when_ymax_too_small():
    with pytest.warns(UserWarning, match="y_max"):
        result = bruteforce_stock(_params(a=1000.0, b=0.01, mu=0.01, alpha=1.5, y_max=50))
    assert result.y_bruteforce == 50


@settings(max_examples=100, deadline=None)
@given(
    a=st.floats(min_value=0.01, max_value=100.0),
    b=st.floats(min_value=0.5, max_value=10.0),
    mu=st.floats(min_value=0.04, max_value=1.0),
    alpha=st.floats(min_value=1.3, max_value=5.0),
)
def test_bruteforce_equals_enumeration(a, b, mu, alpha):
    # parameter ranges keep the marginal root well below the scan bound
    params = _params(a, b, mu, alpha, y_max=300)
    result = bruteforce_stock(params)
    assert result.y_bruteforce == argmax_by_enumeration(params, 300)


def test_closed_form_unit_base():
    value, floor = closed_form_stock(_params(a=1.0, b=1.0, mu=1.0, alpha=3.5))
    assert value == pytest.approx(1.0, rel=1e-12)
    assert floor == 1


def test_closed_form_large_ratio_stays_small():
    value, floor = closed_form_stock(_params(a=1e6, b=1.0, mu=1e-4, alpha=3.5))
    assert value == pytest.approx(1e8 ** (1 / 4.5), rel=1e-12)
    assert abs(value - 60) < 1
    assert value <= 100
    assert floor == 59


def test_closed_form_under_20_for_ratio_100():
    for mu in np.geomspace(1e-4, 0.5, 40):
        value, _ = closed_form_stock(_params(a=100.0, b=1.0, mu=float(mu), alpha=3.5))
        assert value < 20


@settings(max_examples=50, deadline=None)
@given(scale=st.floats(min_value=1e-3, max_value=1e3))
def test_closed_form_scale_invariant_in_a_and_b(scale):
    base, _ = closed_form_stock(_params(a=7.0, b=2.0, mu=0.04, alpha=3.5))
    scaled, _ = closed_form_stock(_params(a=7.0 * scale, b=2.0 * scale, mu=0.04, alpha=3.5))
    assert scaled == pytest.approx(base, rel=1e-12)


def test_params_validation():
    with pytest.raises(ValueError, match="turnover_cost"):
        _params(b=0.0)
    with pytest.raises(ValueError, match="mu"):
        _params(mu=0.0)
    with pytest.raises(ValueError, match="mu"):
        _params(mu=1.5)
    with pytest.raises(ValueError, match="alpha"):
        _params(alpha=0.0)
    with pytest.raises(ValueError, match="profit_per_item"):
        _params(a=-1.0)
    with pytest.raises(ValueError, match="y_max"):
        _params(y_max=0)


def test_curve_matches_single_point_evaluation():
    points = inventory_curve(alpha=3.5, ab_ratios=(100.0,), mu_grid=(0.01,))
    value, floor = closed_form_stock(_params(a=100.0, b=1.0, mu=0.01, alpha=3.5))
    assert points[0].y_value == value
    assert points[0].y_floor == floor


def test_curve_monotone_decreasing_in_mu():
    points = inventory_curve(alpha=3.5, ab_ratios=(100.0,), mu_grid=(0.001, 0.01, 0.1, 0.5))
    values = [p.y_value for p in points]
    assert values == sorted(values, reverse=True)


def test_curve_monotone_increasing_in_ab_ratio():
    points = inventory_curve(alpha=3.5, ab_ratios=(10.0, 100.0, 1000.0), mu_grid=(0.01,))
    values = [p.y_value for p in points]
    assert values == sorted(values)


def test_curve_rejects_nonpositive_mu():
    with pytest.raises(ValueError, match="mu"):
        inventory_curve(mu_grid=(0.0, 0.1))
