import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

import arcbounds as ab

finite_a = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
bound_a = st.floats(min_value=-0.99, max_value=8.0, allow_nan=False, allow_infinity=False)
unit_x = st.floats(min_value=1e-9, max_value=1.0 - 1e-9, allow_nan=False, allow_infinity=False)


@given(a=bound_a, x=unit_x)
def test_bound_pair_brackets_arccos(a, x):
    bp = ab.bound_pair(a, x)
    acx = ab.arccos_stable(x)
    tol = 4.0 * np.spacing(acx)
    assert bp.lower <= acx + tol
    assert acx <= bp.upper + tol
    assert bp.lower <= bp.upper


@given(a=finite_a)
def test_classify_regime_total_and_exclusive(a):
    regime = ab.classify_regime(a)
    expected = (
        ab.Regime.INCREASING
        if a <= ab.A_STAR
        else ab.Regime.DECREASING
        if a >= ab.TWO_SQRT2
        else ab.Regime.INTERIOR_MINIMUM
    )
    assert regime is expected


@given(a=bound_a)
def test_constants_ordered(a):
    assert ab.lower_constant(a) <= ab.upper_constant(a)


@given(x=unit_x)
def test_lambda_kernel_range(x):
    lam = ab.lambda_kernel(x)
    assert math.cos(math.pi / 12.0) - 1e-15 < lam < 1.0


@given(x=unit_x)
def test_sharp_pair_brackets_arccos(x):
    sb = ab.best_pair(x)
    acx = ab.arccos_stable(x)
    tol = 4.0 * (np.spacing(acx) + np.spacing(abs(sb.lower_best)))
    assert sb.lower_best == max(sb.lower_lambda, sb.lower_pi2)
    assert sb.lower_best <= acx + tol
    assert acx <= sb.upper_best + tol


@given(x=unit_x)
def test_gain_maximizer_dominates_random_parameters(x):
    attained = ab.lower_gain(ab.lower_gain_argmax(x), x)
    avals = np.linspace(ab.A_STAR, ab.TWO_SQRT2, 301)[1:-1]
    tol = 8.0 * np.spacing(abs(attained))
    assert attained >= float(np.max(ab.lower_gain(avals, x))) - tol


@settings(max_examples=25, deadline=None)
@given(a=st.floats(min_value=ab.A_STAR + 1e-3, max_value=ab.TWO_SQRT2 - 1e-3))
def test_interior_minimum_well_formed(a):
    res = ab.find_minimum(a)
    assert 0.0 < res.x0 < 1.0
    assert res.residual < 1e-12
    floor = 8.0 * (1.0 - 2.0 / (a * a))
    assert res.f_min >= floor - 4.0 * np.spacing(floor)
    assert res.f_min <= min(ab.endpoint_limits(a))


@settings(max_examples=20, deadline=None)
@given(a=st.floats(min_value=ab.A_STAR + 1e-2, max_value=ab.TWO_SQRT2 - 1e-2))
def test_interior_minimum_single_sign_change(a):
    rep = ab.verify_monotonicity(a, ab.GridSpec(1e-9, 1.0 - 1e-9, 10_000, "uniform"))
    assert rep.passed


@given(
    lo=st.floats(min_value=1e-9, max_value=0.4),
    width=st.floats(min_value=1e-6, max_value=0.59),
    n=st.integers(min_value=2, max_value=2_000),
    spacing=st.sampled_from(["uniform", "refined"]),
)
def test_grid_points_sorted_and_bounded(lo, width, n, spacing):
    g = ab.GridSpec(lo, lo + width, n, spacing)
    pts = g.points()
    assert pts[0] == g.lo and pts[-1] == g.hi
    assert np.all(np.diff(pts) > 0.0)
    assert np.all((pts >= g.lo) & (pts <= g.hi))
