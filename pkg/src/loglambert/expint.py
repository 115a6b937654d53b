"""Exponential integral Ei(x) (Cauchy principal value).

Classical two-regime evaluation:

* power series  Ei(x) = gamma + ln|x| + sum_{n>=1} x^n / (n * n!)
  for moderate |x| (summed in extended precision so the heavy cancellation
  on the negative axis does not erode the returned double),
* continued fraction for x <= -6 (via E1), and the divergent asymptotic
  series truncated at its smallest term for x > 40.

Both non-series regimes are plain float64; the series regime delegates the
summation to mpmath at a working precision sized to the cancellation.
"""

from __future__ import annotations

import math

from mpmath import mp

from .errors import ConvergenceError, DomainError

__all__ = ["ei", "EULER_GAMMA"]

#: Euler-Mascheroni constant to 20 digits.
EULER_GAMMA = 0.57721566490153286061

_LOG_DBL_MAX = 709.782712893384
_SERIES_NEG_CUTOFF = -6.0
_SERIES_POS_CUTOFF = 40.0


def _series(x: float) -> float:
    """Power series about 0, valid for any |x| <= ~40.

    The terms are summed with mpmath because for x < 0 they alternate and
    cancel down from magnitude ~e^|x| to the final value; the working
    precision is sized so the returned double is correctly rounded.
    """
    extra = int(1.2 * abs(x)) if x < 0.0 else 0
    with mp.workdps(28 + extra):
        xm = mp.mpf(x)
        total = mp.euler + mp.log(abs(xm))
        term = mp.mpf(1)
        for n in range(1, 400):
            term *= xm / n
            contrib = term / n
            total += contrib
            if abs(contrib) < mp.mpf("1e-40") * (1 + abs(total)):
                break
        else:  # pragma: no cover - series always converges well before 400
            raise ConvergenceError(f"Ei series did not converge at x={x!r}")
        return float(total)


def _continued_fraction(x: float) -> float:
    """Ei(x) = -E1(-x) for x < 0, E1 by modified-Lentz continued fraction."""
    t = -x
    scale = math.exp(-t) if t < 745.0 else 0.0
    if scale == 0.0:
        return -0.0
    tiny = 1e-300
    b = t + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 400):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        if c == 0.0:
            c = tiny
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return -h * scale
    raise ConvergenceError(f"Ei continued fraction stalled at x={x!r}")


def _asymptotic(x: float) -> float:
    """Large-x expansion e^x/x * sum k!/x^k, cut at the smallest term."""
    exponent = x - math.log(x)
    if exponent > _LOG_DBL_MAX:
        raise OverflowError(f"Ei({x!r}) exceeds the double range")
    total = 1.0
    term = 1.0
    for k in range(1, 200):
        nxt = term * k / x
        if nxt >= term:
            break
        term = nxt
        total += term
        if term < 1e-17 * total:
            break
    result = math.exp(exponent) * total
    if math.isinf(result):
        raise OverflowError(f"Ei({x!r}) exceeds the double range")
    return result


def ei(x: float) -> float:
    """Principal-value exponential integral Ei(x).

    Raises DomainError at the logarithmic singularity x = 0 and
    OverflowError once the result exceeds the double range (x > ~716).
    """
    if math.isnan(x):
        raise DomainError("Ei is undefined at NaN")
    if x == 0.0:
        raise DomainError("Ei has a logarithmic singularity at 0")
    if x < _SERIES_NEG_CUTOFF:
        return _continued_fraction(x)
    if x <= _SERIES_POS_CUTOFF:
        return _series(x)
    return _asymptotic(x)
