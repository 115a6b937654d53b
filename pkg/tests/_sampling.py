"""Shared helpers for sampling branch domains in tests."""

import math


def interior_points(bi, n, lo_exp=-8.0, hi_exp=-0.02,
                    unbounded_lo_exp=-6.0, unbounded_hi_exp=10.0):
    """Log-spaced x values strictly inside a branch's x-domain.

    For bounded domains the offsets are 10**u fractions of the span
    measured from the seam-side (closed) endpoint, u in [lo_exp, hi_exp].
    For half-infinite domains the offsets are absolute, 10**u for
    u in [unbounded_lo_exp, unbounded_hi_exp].
    """
    lo, hi = bi.x_domain.lo, bi.x_domain.hi
    xs = []
    if math.isfinite(lo) and math.isfinite(hi):
        anchor, far = (lo, hi) if bi.x_domain.lo_closed else (hi, lo)
        span = far - anchor
        for i in range(n):
            u = lo_exp + (hi_exp - lo_exp) * i / max(n - 1, 1)
            xs.append(anchor + span * 10.0**u)
    else:
        anchor = lo if math.isfinite(lo) else hi
        sgn = 1.0 if math.isfinite(lo) else -1.0
        for i in range(n):
            u = unbounded_lo_exp + (unbounded_hi_exp - unbounded_lo_exp) \
                * i / max(n - 1, 1)
            xs.append(anchor + sgn * 10.0**u)
    return [x for x in xs if bi.x_domain.contains(x)]
