"""Brute-force reference implementations used only by the test suite.

Everything here is deliberately slow and simple, and shares no solution
code with the production paths it validates: inversion by plain bisection
(never Newton), Ei by principal-value quadrature (never the production
series/continued fraction), derivatives by central differences.  The only
shared ingredient is the forward map itself, which is the problem
statement rather than a solution method.
"""

from __future__ import annotations

import math
from typing import Callable

from .core import Params, evaluate, forward
from .errors import BracketError, IntegrationError

__all__ = ["bisect_invert", "quad_ei", "fd_derivative"]


def bisect_invert(p: Params, y_lo: float, y_hi: float, x: float) -> float:
    """Solve forward(p, y) = x by bisection on [y_lo, y_hi].

    The endpoints must straddle x and the forward map must be monotone on
    the interval; raises BracketError otherwise.
    """
    f_lo = forward(p, y_lo)
    f_hi = forward(p, y_hi)
    if (f_lo > x) == (f_hi > x) and f_lo != x and f_hi != x:
        raise BracketError(
            f"[{y_lo!r}, {y_hi!r}] does not straddle x={x!r} "
            f"(f values {f_lo!r}, {f_hi!r})"
        )
    lo, hi = y_lo, y_hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = forward(p, mid)
        if f_mid == x:
            return mid
        if (f_mid > x) == (f_lo > x):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _simpson(f: Callable[[float], float], a: float, b: float, tol: float) -> float:
    # Private adaptive Simpson; kept separate from any production quadrature.
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)

    def recurse(a, fa, b, fb, m, fm, whole, depth):
        if depth == 0:
            raise IntegrationError("oracle quadrature recursion exhausted")
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        if abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return recurse(a, fa, m, fm, lm, flm, left, depth - 1) + recurse(
            m, fm, b, fb, rm, frm, right, depth - 1
        )

    m = 0.5 * (a + b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return recurse(a, fa, b, fb, m, fm, whole, 55)


def quad_ei(x: float) -> float:
    """Ei(x) by principal-value quadrature.

    The singularity at t = 0 is removed by pairing e^t/t with e^(-t)/t
    (their PV sum is the smooth 2*sinh(t)/t); the tail to -infinity is cut
    where e^t is negligible.
    """
    if x == 0.0:
        raise IntegrationError("Ei quadrature undefined at 0")
    tol = 1e-13

    if x < 0.0:
        # Ei(x) = -int_{-x}^{inf} e^{-s}/s ds, truncated at negligible e^{-s}.
        s0 = -x
        s1 = s0 + 60.0 + 5.0 * math.log1p(s0)
        return -_simpson(lambda s: math.exp(-s) / s, s0, s1, tol * math.exp(-s0))

    a = min(x, 1.0) / 2.0

    def sinhc2(t: float) -> float:
        return 2.0 if t == 0.0 else (math.exp(t) - math.exp(-t)) / t

    pv_core = _simpson(sinhc2, 0.0, a, tol)
    left_tail = -_simpson(lambda s: math.exp(-s) / s, a, a + 80.0, tol * math.exp(-a))
    right = 0.0
    if x > a:
        right = _simpson(lambda t: math.exp(t) / t, a, x, tol * math.exp(x) / x)
    return pv_core + left_tail + right


def fd_derivative(p: Params, branch: int, x: float, h: float) -> float:
    """Central difference of the branch inversion, for derivative checks."""
    y_plus = evaluate(p, branch, x + h, tol=1e-13).y
    y_minus = evaluate(p, branch, x - h, tol=1e-13).y
    return (y_plus - y_minus) / (2.0 * h)
