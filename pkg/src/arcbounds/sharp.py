"""Sharpened arccos bounds extracted from the family's optimal instances.

Each named bound is an instance of the family at a distinguished shape
parameter:

* ``a_star_pair``   -- the increasing/minimum threshold a = A_STAR; its
  lower constant clears to pi**2 / (2*[2*(pi-2) + (4-pi)*sqrt(1+x)]).
* ``carlson_pair``  -- a = 2*sqrt(2), the classical constants 6 and
  (1/2 + sqrt(2))*pi.
* ``sqrt3_lower``   -- a = 1 + sqrt(3), the handoff point of the
  middle-regime gain below.
* ``best_upper``    -- the upper bound at the parameter where the two
  endpoint constants coincide, a = (4-pi)/(pi - 2*sqrt(2)); it is sharp
  at both endpoints and dominates every other upper bound here.
* ``lambda_lower``  -- the pointwise-optimized middle-regime lower bound.
  For fixed x the gain (1 - 2/a**2)/(a + sqrt(1+x)) is maximized over a at
  a = 2*sqrt(2)*lambda(x) with lambda(x) = cos(arctan(sqrt((1-x)/(1+x)))/3),
  giving 2*(4*lambda**2 - 1)*sqrt(1-x) / ((2*sqrt(2)*lambda + sqrt(1+x)) * lambda**2).

``best_lower`` takes the pointwise max of the lambda bound and the A_STAR
lower bound; the two cross once inside (0, 1), so neither dominates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import RegimeError
from .family import A_STAR, PI, SQRT2, TWO_SQRT2, _check_open_unit, _scalar_like

__all__ = [
    "ONE_PLUS_SQRT3",
    "A_CROSS",
    "SharpBounds",
    "lambda_kernel",
    "lambda_lower",
    "best_upper",
    "a_star_pair",
    "carlson_pair",
    "sqrt3_lower",
    "lower_gain",
    "lower_gain_argmax",
    "lower_gain_max",
    "best_lower",
    "best_pair",
]

ONE_PLUS_SQRT3 = 1.0 + math.sqrt(3.0)
# Parameter where the two endpoint constants agree: 2 + sqrt(2)*a = pi*(1+a)/2.
A_CROSS = (4.0 - PI) / (PI - TWO_SQRT2)


@dataclass(frozen=True)
class SharpBounds:
    """Sharp lower candidates and the best upper bound at one abscissa.

    ``lower_best`` is max(lower_lambda, lower_pi2) where ``lower_pi2`` is
    the pi**2-numerator lower bound (the A_STAR instance).
    """

    x: float
    lower_lambda: float
    lower_pi2: float
    lower_best: float
    upper_best: float


def lambda_kernel(x):
    """cos(arctan(sqrt((1-x)/(1+x))) / 3); strictly increasing from
    cos(pi/12) to 1 on (0, 1).

    The arctan argument is formed as a single square root of the quotient
    so neither factor loses relative accuracy near the endpoints.
    """
    arr = _check_open_unit(x)
    out = np.cos(np.arctan(np.sqrt((1.0 - arr) / (1.0 + arr))) / 3.0)
    return _scalar_like(x, out)


def lambda_lower(x):
    """Lower bound 2*(4*lam**2 - 1)*sqrt(1-x) / ((2*sqrt(2)*lam + sqrt(1+x))*lam**2)."""
    arr = _check_open_unit(x)
    lam = np.cos(np.arctan(np.sqrt((1.0 - arr) / (1.0 + arr))) / 3.0)
    lam2 = lam * lam
    out = 2.0 * (4.0 * lam2 - 1.0) * np.sqrt(1.0 - arr) / ((TWO_SQRT2 * lam + np.sqrt(1.0 + arr)) * lam2)
    return _scalar_like(x, out)


def best_upper(x):
    """Upper bound pi*(2 - sqrt(2))*sqrt(1-x) / ((4-pi) + (pi - 2*sqrt(2))*sqrt(1+x)).

    Collapses to pi/2 at x -> 0+ and has ratio -> 1 against arccos at
    x -> 1-, so it is asymptotically sharp at both endpoints.
    """
    arr = _check_open_unit(x)
    out = PI * (2.0 - SQRT2) * np.sqrt(1.0 - arr) / ((4.0 - PI) + (PI - TWO_SQRT2) * np.sqrt(1.0 + arr))
    return _scalar_like(x, out)


def a_star_pair(x):
    """(lower, upper) at a = A_STAR after clearing the factor 4 - pi.

    lower = pi**2*sqrt(1-x) / (2*[2*(pi-2) + (4-pi)*sqrt(1+x)])
    upper = 2*[2*(2-sqrt(2)) + (sqrt(2)-1)*pi]*sqrt(1-x) / (2*(pi-2) + (4-pi)*sqrt(1+x))
    """
    arr = _check_open_unit(x)
    den = 2.0 * (PI - 2.0) + (4.0 - PI) * np.sqrt(1.0 + arr)
    root = np.sqrt(1.0 - arr)
    lower = PI * PI * root / (2.0 * den)
    upper = 2.0 * (2.0 * (2.0 - SQRT2) + (SQRT2 - 1.0) * PI) * root / den
    return _scalar_like(x, lower), _scalar_like(x, upper)


def carlson_pair(x):
    """(lower, upper) at a = 2*sqrt(2): constants 6 and pi*(1 + 2*sqrt(2))/2."""
    arr = _check_open_unit(x)
    den = TWO_SQRT2 + np.sqrt(1.0 + arr)
    root = np.sqrt(1.0 - arr)
    lower = 6.0 * root / den
    upper = PI * (1.0 + TWO_SQRT2) * root / (2.0 * den)
    return _scalar_like(x, lower), _scalar_like(x, upper)


def sqrt3_lower(x):
    """Lower bound 8*[1 - 2/(1+sqrt(3))**2]*sqrt(1-x) / (1 + sqrt(3) + sqrt(1+x))."""
    arr = _check_open_unit(x)
    c = 8.0 * (1.0 - 2.0 / (ONE_PLUS_SQRT3 * ONE_PLUS_SQRT3))
    out = c * np.sqrt(1.0 - arr) / (ONE_PLUS_SQRT3 + np.sqrt(1.0 + arr))
    return _scalar_like(x, out)


def _check_gain_parameter(a) -> np.ndarray:
    arr = np.asarray(a, dtype=np.float64)
    if np.any(~np.isfinite(arr)) or np.any(arr <= A_STAR) or np.any(arr >= TWO_SQRT2):
        raise RegimeError("gain parameter must lie in the open interior-minimum interval")
    return arr


def lower_gain(a, x):
    """Middle-regime gain (1 - 2/a**2) / (a + sqrt(1+x)).

    Scaling this by 8*sqrt(1-x) yields the middle-regime lower bound, so
    maximizing over a in (A_STAR, 2*sqrt(2)) sharpens that bound pointwise.
    """
    a_arr = _check_gain_parameter(a)
    x_arr = _check_open_unit(x)
    out = (1.0 - 2.0 / (a_arr * a_arr)) / (a_arr + np.sqrt(1.0 + x_arr))
    if np.ndim(a) == 0 and np.ndim(x) == 0:
        return float(out)
    return out


def lower_gain_argmax(x):
    """Maximizer of the gain over a: 2*sqrt(2)*lambda_kernel(x), inside (1+sqrt(3), 2*sqrt(2))."""
    arr = _check_open_unit(x)
    out = TWO_SQRT2 * np.cos(np.arctan(np.sqrt((1.0 - arr) / (1.0 + arr))) / 3.0)
    return _scalar_like(x, out)


def lower_gain_max(x):
    """Attained maximum of the gain, as an independent closed form.

    (4*lam**2 - 1) / (4*lam**2 * (2*sqrt(2)*lam + sqrt(1+x))); must agree
    with lower_gain(lower_gain_argmax(x), x) via 1 - 2/a**2 =
    (4*lam**2 - 1)/(4*lam**2) at a = 2*sqrt(2)*lam.
    """
    arr = _check_open_unit(x)
    lam = np.cos(np.arctan(np.sqrt((1.0 - arr) / (1.0 + arr))) / 3.0)
    lam2 = lam * lam
    out = (4.0 * lam2 - 1.0) / (4.0 * lam2 * (TWO_SQRT2 * lam + np.sqrt(1.0 + arr)))
    return _scalar_like(x, out)


def best_lower(x):
    """Pointwise max of the lambda lower bound and the A_STAR lower bound."""
    lam = lambda_lower(x)
    pi2 = a_star_pair(x)[0]
    out = np.maximum(lam, pi2)
    return _scalar_like(x, out)


def best_pair(x: float) -> SharpBounds:
    """Assemble the combined sharp bracket for arccos at one abscissa."""
    lam = float(lambda_lower(x))
    pi2 = float(a_star_pair(x)[0])
    return SharpBounds(
        x=float(x),
        lower_lambda=lam,
        lower_pi2=pi2,
        lower_best=max(lam, pi2),
        upper_best=float(best_upper(x)),
    )
