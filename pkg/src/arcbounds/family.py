"""The parametric bound family for arccos and its monotonicity regimes.

For a real shape parameter ``a`` the ratio

    R(a, x) = (a + sqrt(1 + x)) * arccos(x) / sqrt(1 - x),    0 < x < 1,

interpolates between pi*(1+a)/2 as x -> 0+ and 2 + sqrt(2)*a as x -> 1-.
Its monotonicity in x decides which endpoint limit bounds it, which turns
the ratio into a two-sided elementary bound for arccos:

* a <= A_STAR          : strictly increasing, so
                         pi*(1+a)/2 < R < 2 + sqrt(2)*a.
* a >= 2*sqrt(2)       : strictly decreasing, bracket reversed.
* A_STAR < a < 2*sqrt(2): unique interior minimum; the minimum value is
                         bounded below by 8*(1 - 2/a**2).

Here A_STAR = 2*(pi - 2)/(4 - pi).  Both endpoint constants are attained
as limits, so they are the best possible for this bound shape.  The
classical double inequality with constants 6 and (1/2 + sqrt(2))*pi is
the special case a = 2*sqrt(2).

All functions are pure, accept scalars or numpy arrays, and do all
arithmetic in binary64.  Near x = 1 the quotient arccos(x)/sqrt(1-x) is
evaluated through arcsin of sqrt((1-x)/2) so no cancellation occurs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "A_STAR",
    "TWO_SQRT2",
    "SQRT2",
    "Regime",
    "BoundPair",
    "arccos_stable",
    "arccos_ratio",
    "bound_ratio",
    "endpoint_limits",
    "classify_regime",
    "lower_constant",
    "upper_constant",
    "bound_pair",
    "bound_arrays",
]

PI = math.pi
SQRT2 = math.sqrt(2.0)
TWO_SQRT2 = 2.0 * math.sqrt(2.0)
# Threshold between the increasing and interior-minimum regimes.  Kept as an
# expression so it is consistent with the pi used everywhere else.
A_STAR = 2.0 * (PI - 2.0) / (4.0 - PI)


class Regime(enum.Enum):
    """Monotonicity regime of the bound ratio as a function of x."""

    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    INTERIOR_MINIMUM = "InteriorMinimum"


@dataclass(frozen=True)
class BoundPair:
    """A two-sided bound for arccos(x) produced by the family at one point.

    ``lower`` and ``upper`` are c * sqrt(1-x) / (a + sqrt(1+x)) with the
    regime's best constants ``c_lower`` and ``c_upper``.
    """

    x: float
    lower: float
    upper: float
    c_lower: float
    c_upper: float
    a: float


def _as_float_array(x) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise DomainError("argument must be finite")
    return arr


def _check_open_unit(x) -> np.ndarray:
    arr = _as_float_array(x)
    if np.any(arr <= 0.0) or np.any(arr >= 1.0):
        raise DomainError("x must lie in the open interval (0, 1)")
    return arr


def _scalar_like(x, value: np.ndarray):
    return float(value) if np.ndim(x) == 0 else value


def arccos_stable(x):
    """arccos(x) on [-1, 1], safe for quotients against sqrt(1-x).

    For x >= 0 uses arccos(x) = 2*arcsin(sqrt((1-x)/2)), which keeps
    arccos(x)/sqrt(1-x) fully accurate as x -> 1-.  For x < 0 the library
    arccos is already well conditioned.  Accurate to within 2 ulp.

    Raises DomainError if |x| > 1.
    """
    arr = np.asarray(x, dtype=np.float64)
    if np.any(np.isnan(arr)) or np.any(np.abs(arr) > 1.0):
        raise DomainError("arccos argument must lie in [-1, 1]")
    t = np.sqrt(0.5 * (1.0 - arr))
    out = np.where(arr >= 0.0, 2.0 * np.arcsin(np.minimum(t, 1.0)), np.arccos(np.maximum(arr, -1.0)))
    return _scalar_like(x, out)


def arccos_ratio(x):
    """arccos(x) / sqrt(1 - x) for x in [-1, 1), without cancellation.

    With t = sqrt((1-x)/2) the quotient equals 2*arcsin(t)/(sqrt(2)*t) for
    x >= 0; the removable limit sqrt(2) is used at t = 0.
    """
    arr = np.asarray(x, dtype=np.float64)
    if np.any(np.isnan(arr)) or np.any(np.abs(arr) > 1.0):
        raise DomainError("argument must lie in [-1, 1]")
    t = np.sqrt(np.maximum(0.5 * (1.0 - arr), 0.0))
    safe_t = np.where(t > 0.0, t, 1.0)
    pos = 2.0 * np.arcsin(np.minimum(safe_t, 1.0)) / (SQRT2 * safe_t)
    neg = np.arccos(np.maximum(arr, -1.0)) / np.sqrt(np.maximum(1.0 - arr, 1.0))
    out = np.where(arr >= 0.0, np.where(t > 0.0, pos, SQRT2), neg)
    return _scalar_like(x, out)


def bound_ratio(a: float, x):
    """Evaluate the family ratio (a + sqrt(1+x)) * arccos(x) / sqrt(1-x).

    Finite for every real a; x must lie in (0, 1).
    """
    arr = _check_open_unit(x)
    out = (a + np.sqrt(1.0 + arr)) * arccos_ratio(arr)
    return _scalar_like(x, out)


def endpoint_limits(a: float) -> tuple[float, float]:
    """Limits of the ratio at the two endpoints: (pi*(1+a)/2, 2 + sqrt(2)*a)."""
    return (PI * (1.0 + a) / 2.0, 2.0 + SQRT2 * a)


def classify_regime(a: float) -> Regime:
    """Classify the monotonicity regime of the ratio for a finite a.

    Boundary values belong to the monotone regimes: a = A_STAR is
    increasing and a = 2*sqrt(2) is decreasing.
    """
    if not math.isfinite(a):
        raise DomainError("shape parameter must be finite")
    if a <= A_STAR:
        return Regime.INCREASING
    if a >= TWO_SQRT2:
        return Regime.DECREASING
    return Regime.INTERIOR_MINIMUM


def _check_bound_parameter(a: float) -> None:
    if not math.isfinite(a) or a <= -1.0:
        raise DomainError("bound evaluation requires a > -1 so the denominator stays positive")


def lower_constant(a: float) -> float:
    """Best lower bound constant for the regime of ``a`` (requires a > -1).

    Increasing regime: pi*(1+a)/2 (the x -> 0+ limit).  Decreasing regime:
    2 + sqrt(2)*a (the x -> 1- limit).  Interior minimum: the floor
    8*(1 - 2/a**2) for the minimum value.
    """
    _check_bound_parameter(a)
    regime = classify_regime(a)
    if regime is Regime.INCREASING:
        return endpoint_limits(a)[0]
    if regime is Regime.DECREASING:
        return endpoint_limits(a)[1]
    return 8.0 * (1.0 - 2.0 / (a * a))


def upper_constant(a: float) -> float:
    """Best upper bound constant for the regime of ``a`` (requires a > -1)."""
    _check_bound_parameter(a)
    regime = classify_regime(a)
    at0, at1 = endpoint_limits(a)
    if regime is Regime.INCREASING:
        return at1
    if regime is Regime.DECREASING:
        return at0
    return max(at0, at1)


def bound_arrays(a: float, x) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized (lower, upper) bound values at the points ``x``."""
    arr = _check_open_unit(x)
    template = np.sqrt(1.0 - arr) / (a + np.sqrt(1.0 + arr))
    return lower_constant(a) * template, upper_constant(a) * template


def bound_pair(a: float, x: float) -> BoundPair:
    """Two-sided bound for arccos(x) with the best constants for ``a``.

    Guarantees lower < arccos(x) < upper in exact arithmetic; in binary64
    the containment holds up to 4 ulp of arccos(x).
    """
    lower, upper = bound_arrays(a, x)
    return BoundPair(
        x=float(x),
        lower=float(lower),
        upper=float(upper),
        c_lower=lower_constant(a),
        c_upper=upper_constant(a),
        a=float(a),
    )
