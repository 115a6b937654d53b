"""Multi-branch inversion of f(y) = (a*y*ln(b*y) + y + c) * e^y.

For fixed coefficients (a, b, c) with a != 0 and b != 0 the map f is defined
on the half-line where b*y > 0.  Its derivative

    f'(y) = [a*(y+1)*ln(b*y) + y + a + c + 1] * e^y

vanishes at the seam points delta solving a*(y+1)*ln(b*y) + y + a + c + 1 = 0:
one seam for b > 0, two (delta_2 < delta_1 < 0) for b < 0 in the supported
sign cases.  Between consecutive seams f is strictly monotone, so the inverse
splits into branches indexed 0, 1 (and 2 for b < 0), counted starting from
the branch whose y-range touches 0.

This module provides the branch catalog, a bracketed Newton/bisection
evaluator for the inverse on a chosen branch, the closed forms for the
inverse's derivative and antiderivative, the expansion of the inverse about
x = 0 (leading coefficients in closed form through the classical Lambert W,
higher ones by series reversion), and a large-x approximation.

All functions are pure; `Params` and the catalog records are immutable, and
the per-parameter catalog is memoised behind a thread-safe cache.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

from .errors import (
    ConvergenceError,
    DomainError,
    NoSolutionError,
    PrecisionError,
    SingularityError,
    UnsupportedCaseError,
)
from .expint import ei
from .lambertw import BRANCH_POINT, lambert_w

__all__ = [
    "Monotone",
    "Params",
    "Interval",
    "BranchInfo",
    "EvalResult",
    "forward",
    "forward_slope",
    "singular_residual",
    "singular_points",
    "branches",
    "evaluate",
    "derivative",
    "antiderivative",
    "taylor_first_order",
    "taylor_coefficients",
    "asymptotic",
]

_EPS = 2.220446049250313e-16


class Monotone(enum.Enum):
    """Direction of the map along a branch (same for f and its inverse)."""

    INCREASING = "increasing"
    DECREASING = "decreasing"


@dataclass(frozen=True)
class Params:
    """Coefficients of f(y) = (a*y*ln(b*y) + y + c) * e^y.

    a scales the logarithmic term, b scales the logarithm's argument and
    fixes the sign of admissible y (b*y > 0), c is the additive offset.
    a = 0 is rejected: the map then degenerates to (y + c)*e^y, whose
    inverse is the classical Lambert W composed with a shift.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"coefficient {name} must be finite, got {v!r}")
        if self.b == 0.0:
            raise DomainError("coefficient b must be nonzero")
        if self.a == 0.0:
            raise DomainError(
                "coefficient a must be nonzero (a = 0 reduces to the "
                "classical Lambert W case, which this package does not cover)"
            )


@dataclass(frozen=True)
class Interval:
    """Real interval with individually open/closed finite endpoints."""

    lo: float
    hi: float
    lo_closed: bool
    hi_closed: bool

    def contains(self, v: float) -> bool:
        if math.isnan(v):
            return False
        if v < self.lo or (v == self.lo and not self.lo_closed):
            return False
        if v > self.hi or (v == self.hi and not self.hi_closed):
            return False
        return True

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo:.17g}, {self.hi:.17g}{right}"


@dataclass(frozen=True)
class BranchInfo:
    """One monotone branch of the inverse map.

    x_domain is the image of y_range under f (endpoint limits open);
    seams lists the (delta, f(delta)) pairs bounding the branch.
    """

    index: int
    y_range: Interval
    x_domain: Interval
    monotone: Monotone
    seams: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class EvalResult:
    """Result of a branch inversion: y with |f(y) - x| = residual."""

    y: float
    residual: float
    iterations: int
    at_seam: bool = False


def forward(p: Params, y: float) -> float:
    """f(y) = (a*y*ln(b*y) + y + c) * e^y; requires b*y > 0."""
    by = p.b * y
    if not by > 0.0:
        raise DomainError(
            f"forward map needs b*y > 0; got b={p.b!r}, y={y!r}"
        )
    return (p.a * y * math.log(by) + y + p.c) * math.exp(y)


def forward_slope(p: Params, y: float) -> float:
    """f'(y) = [a*(y+1)*ln(b*y) + y + a + c + 1] * e^y."""
    return singular_residual(p, y) * math.exp(y)


def singular_residual(p: Params, y: float) -> float:
    """Left side of the seam equation a*(y+1)*ln(b*y) + y + a + c + 1 = 0.

    This is also e^{-y} * f'(y), so its zeros are the vertical-tangent
    points of the inverse.
    """
    by = p.b * y
    if not by > 0.0:
        raise DomainError(
            f"seam equation needs b*y > 0; got b={p.b!r}, y={y!r}"
        )
    return p.a * (y + 1.0) * math.log(by) + y + p.a + p.c + 1.0


def _seam_slope(p: Params, y: float) -> float:
    # d/dy of the seam equation's left side.
    return p.a * math.log(p.b * y) + p.a * (y + 1.0) / y + 1.0


def _forward_ext(p: Params, y: float) -> float:
    # forward() with overflow mapped to a signed infinity.
    by = p.b * y
    poly = p.a * y * math.log(by) + y + p.c
    try:
        return poly * math.exp(y)
    except OverflowError:
        return math.copysign(math.inf, poly)


def _slope_ext(p: Params, y: float) -> float:
    d = singular_residual(p, y)
    try:
        return d * math.exp(y)
    except OverflowError:
        return math.copysign(math.inf, d)


def _refine_root(p: Params, lo: float, hi: float) -> float:
    # Bisection to double-precision width, then Newton polish on the seam
    # equation.  lo/hi must straddle a sign change.
    flo = singular_residual(p, lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fmid = singular_residual(p, mid)
        if fmid == 0.0:
            lo = hi = mid
            break
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    for _ in range(3):
        r = singular_residual(p, root)
        dr = _seam_slope(p, root)
        if dr == 0.0 or not math.isfinite(dr):
            break
        step = r / dr
        nxt = root - step
        if not (p.b * nxt > 0.0):
            break
        root = nxt
        if abs(step) <= _EPS * abs(root):
            break
    return root


def singular_points(p: Params) -> list[float]:
    """All seam points delta (zeros of f' with b*delta > 0), ascending.

    Exactly one is expected for b > 0 and exactly two for b < 0; a
    NoSolutionError reports any other outcome.
    """
    sign = 1.0 if p.b > 0.0 else -1.0
    brackets: list[tuple[float, float]] = []

    n_grid = 3800
    lo_exp, hi_exp = -13.0, 6.0
    prev_t = 10.0 ** lo_exp
    prev_v = singular_residual(p, sign * prev_t)

    # Below the grid the seam equation is monotone in ln|y|, so a single
    # endpoint comparison catches any root with |y| < 1e-13.
    deep_t = 1e-290
    deep_v = singular_residual(p, sign * deep_t)
    if deep_v == 0.0:
        brackets.append((deep_t, deep_t))
    elif (deep_v > 0.0) != (prev_v > 0.0):
        lo_t, hi_t = deep_t, prev_t
        for _ in range(300):
            mid = math.sqrt(lo_t * hi_t)
            v = singular_residual(p, sign * mid)
            if v == 0.0:
                lo_t = hi_t = mid
                break
            if (v > 0.0) == (deep_v > 0.0):
                lo_t = mid
            else:
                hi_t = mid
        brackets.append((lo_t, hi_t))

    step = (hi_exp - lo_exp) / n_grid
    for i in range(1, n_grid + 1):
        t = 10.0 ** (lo_exp + i * step)
        v = singular_residual(p, sign * t)
        if v == 0.0:
            brackets.append((t, t))
        elif (v > 0.0) != (prev_v > 0.0):
            brackets.append((prev_t, t))
        prev_t, prev_v = t, v

    roots = []
    for lo_t, hi_t in brackets:
        if lo_t == hi_t:
            roots.append(sign * lo_t)
        else:
            ylo, yhi = sign * lo_t, sign * hi_t
            if ylo > yhi:
                ylo, yhi = yhi, ylo
            roots.append(_refine_root(p, ylo, yhi))
    roots.sort()

    deduped: list[float] = []
    for r in roots:
        if not deduped or abs(r - deduped[-1]) > 1e-10 * max(1.0, abs(r)):
            deduped.append(r)

    expected = 1 if p.b > 0.0 else 2
    if len(deduped) != expected:
        raise NoSolutionError(
            f"seam equation for a={p.a!r}, b={p.b!r}, c={p.c!r} has "
            f"{len(deduped)} root(s) on the admissible half-line, "
            f"expected {expected}"
        )
    return deduped


@functools.lru_cache(maxsize=128)
def _catalog(p: Params) -> tuple[BranchInfo, ...]:
    if p.b < 0.0:
        if p.a > 0.0 and abs(p.c) > p.a:
            raise UnsupportedCaseError(
                f"b < 0 with a > 0 requires |c| <= a; got a={p.a!r}, c={p.c!r}"
            )
        if p.a < 0.0 and p.c > abs(p.a):
            raise UnsupportedCaseError(
                f"b < 0 with a < 0 requires c <= |a|; got a={p.a!r}, c={p.c!r}"
            )

    deltas = singular_points(p)

    # Segments in y, ordered by branch index (index 0 touches y = 0).
    # Endpoint kinds: "seam" (attained), "zero" (limit f -> c), "inf".
    if p.b > 0.0:
        d = deltas[0]
        segments = [(("zero", 0.0), ("seam", d)), (("seam", d), ("inf", math.inf))]
    else:
        d2, d1 = deltas
        segments = [
            (("seam", d1), ("zero", 0.0)),
            (("seam", d2), ("seam", d1)),
            (("inf", -math.inf), ("seam", d2)),
        ]

    infos = []
    for index, (left, right) in enumerate(segments):
        (lkind, lval), (rkind, rval) = left, right
        if lkind == "zero" or rkind == "zero":
            seam_val = rval if lkind == "zero" else lval
            probe = seam_val / 2.0
        elif rkind == "inf":
            probe = lval + 1.0
        elif lkind == "inf":
            probe = rval - 1.0
        else:
            probe = 0.5 * (lval + rval)
        increasing = singular_residual(p, probe) > 0.0

        def x_at(kind: str, yval: float, other_end: bool) -> tuple[float, bool]:
            # Returns (x value, closed) for one y-endpoint; `other_end` marks
            # the right/upper endpoint so infinite limits get their sign from
            # the branch direction.
            if kind == "seam":
                return forward(p, yval), True
            if kind == "zero":
                return p.c, False
            if yval > 0:  # y -> +inf: f diverges with the sign of a
                return (math.inf if increasing == other_end else -math.inf), False
            return 0.0, False  # y -> -inf: f -> 0 (e^y wins)

        x_left = x_at(lkind, lval, other_end=False)
        x_right = x_at(rkind, rval, other_end=True)
        (xa, ca), (xb, cb) = sorted([x_left, x_right], key=lambda t: t[0])

        seams = tuple(
            (v, forward(p, v)) for k, v in (left, right) if k == "seam"
        )
        infos.append(
            BranchInfo(
                index=index,
                y_range=Interval(lval, rval, lkind == "seam", rkind == "seam"),
                x_domain=Interval(xa, xb, ca, cb),
                monotone=Monotone.INCREASING if increasing else Monotone.DECREASING,
                seams=seams,
            )
        )
    return tuple(infos)


def branches(p: Params) -> tuple[BranchInfo, ...]:
    """Full branch catalog for the given coefficients.

    Two branches for b > 0 and three for b < 0 (under the supported
    magnitude conditions); raises UnsupportedCaseError otherwise.
    """
    return _catalog(p)


def _branch_or_raise(p: Params, branch: int) -> BranchInfo:
    cat = _catalog(p)
    for bi in cat:
        if bi.index == branch:
            return bi
    raise DomainError(
        f"no branch {branch!r} for these coefficients; valid indices: "
        f"{[bi.index for bi in cat]}"
    )


def _bracket(p: Params, bi: BranchInfo, x: float) -> tuple[float, float, float, float]:
    # Produce finite y-endpoints (ylo < yhi) whose f values straddle x.
    yr = bi.y_range
    ends = []
    for yval, closed, is_left in ((yr.lo, yr.lo_closed, True), (yr.hi, yr.hi_closed, False)):
        if closed:
            ends.append((yval, _forward_ext(p, yval)))
            continue
        if yval == 0.0:
            seam = yr.hi if is_left else yr.lo
            other_f = _forward_ext(p, seam)
            v = seam / 2.0
            for _ in range(600):
                fv = _forward_ext(p, v)
                if (fv - x == 0.0) or ((fv > x) != (other_f > x)):
                    ends.append((v, fv))
                    break
                v *= 0.125
                if abs(v) < 1e-290:
                    raise ConvergenceError(
                        f"could not bracket x={x!r} toward the y->0 limit"
                    )
            else:
                raise ConvergenceError(
                    f"could not bracket x={x!r} toward the y->0 limit"
                )
        else:
            seam = yr.lo if math.isinf(yval) and yval > 0 else yr.hi
            other_f = _forward_ext(p, seam)
            direction = 1.0 if yval > 0 else -1.0
            stepsize = 1.0
            v = seam + direction
            for _ in range(80):
                fv = _forward_ext(p, v)
                if (fv - x == 0.0) or ((fv > x) != (other_f > x)):
                    ends.append((v, fv))
                    break
                stepsize *= 2.0
                v = seam + direction * stepsize
            else:
                raise ConvergenceError(
                    f"could not bracket x={x!r} toward y -> {yval!r}"
                )
    (y1, f1), (y2, f2) = ends
    if y1 > y2:
        y1, y2, f1, f2 = y2, y1, f2, f1
    return y1, y2, f1, f2


def evaluate(p: Params, branch: int, x: float, tol: float = 1e-12) -> EvalResult:
    """Invert f on one branch: find y in the branch with f(y) ~= x.

    The root is always bracketed between the branch endpoints (grown
    geometrically on unbounded sides); Newton steps are taken when they
    stay inside the bracket, bisection otherwise, until
    |f(y) - x| <= tol * max(1, |x|).  Deterministic for fixed inputs.
    """
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    if math.isnan(x):
        raise DomainError("x must not be NaN")
    bi = _branch_or_raise(p, branch)
    if not bi.x_domain.contains(x):
        raise DomainError(
            f"x={x!r} outside branch {branch} domain {bi.x_domain}"
        )
    for d, fx in bi.seams:
        if x == fx:
            return EvalResult(y=d, residual=abs(forward(p, d) - x),
                              iterations=0, at_seam=True)

    lo, hi, flo, fhi = _bracket(p, bi, x)
    increasing = fhi > flo
    scale = max(1.0, abs(x))

    y = 0.5 * (lo + hi)
    unbounded_above = math.isinf(bi.y_range.hi)
    if unbounded_above and abs(x) >= 1e3:
        try:
            seed = asymptotic(p, x)
            if lo < seed < hi:
                y = seed
        except (DomainError, OverflowError):
            pass

    best_y, best_res = y, math.inf
    for it in range(1, 201):
        fy = _forward_ext(p, y)
        r = fy - x
        if math.isfinite(fy) and abs(r) <= tol * scale:
            return EvalResult(y=y, residual=abs(r), iterations=it)
        if abs(r) < best_res:
            best_y, best_res = y, abs(r)
        if (fy > x) == increasing:
            hi = y
        else:
            lo = y
        step_done = False
        if math.isfinite(fy):
            fp = _slope_ext(p, y)
            if math.isfinite(fp) and fp != 0.0:
                cand = y - r / fp
                if lo < cand < hi:
                    y = cand
                    step_done = True
        if not step_done:
            y = 0.5 * (lo + hi)
        if hi - lo <= 4.0 * _EPS * max(1.0, abs(lo), abs(hi)):
            res = abs(_forward_ext(p, best_y) - x)
            if res <= tol * scale:
                return EvalResult(y=best_y, residual=res, iterations=it)
            break
    raise ConvergenceError(
        f"inversion stalled at residual {best_res!r} for x={x!r} "
        f"(tol {tol!r}, branch {branch})"
    )


def derivative(p: Params, y: float) -> float:
    """dW/dx of the inverse at x = f(y): e^{-y} / seam_equation_lhs(y).

    Raises SingularityError where the seam equation vanishes (vertical
    tangent of the inverse).
    """
    d = singular_residual(p, y)
    scale = (
        1.0
        + abs(p.a * (y + 1.0) * math.log(p.b * y))
        + abs(y)
        + abs(p.a + p.c + 1.0)
    )
    if abs(d) <= 1e-11 * scale:
        raise SingularityError(
            f"vertical tangent: seam equation is {d!r} at y={y!r}"
        )
    return math.exp(-y) / d


def antiderivative(p: Params, y: float) -> float:
    """Closed-form antiderivative F with dF/dx = y at x = f(y).

    F(y) = e^y * [a*(y^2-y+1)*ln(b*y) + y^2 + (c-1)*y + 1 + a - c]
           - a * Ei(y),
    integration constant zero.  The Ei coefficient -a is forced by the
    term-by-term integration; it is validated against quadrature in the
    test suite.
    """
    by = p.b * y
    if not by > 0.0:
        raise DomainError(
            f"antiderivative needs b*y > 0; got b={p.b!r}, y={y!r}"
        )
    bracket = (
        p.a * (y * y - y + 1.0) * math.log(by)
        + y * y
        + (p.c - 1.0) * y
        + 1.0
        + p.a
        - p.c
    )
    return math.exp(y) * bracket - p.a * ei(y)


def _expansion_argument(p: Params) -> float:
    # Argument handed to the classical W in the expansion-point formulas.
    return -p.b * p.c * math.exp(1.0 / p.a) / p.a


def taylor_first_order(p: Params) -> tuple[float, float]:
    """Constant and linear coefficients of the inverse about x = 0.

    a0 = (1/b) * exp(W(t) - 1/a) with t = -b*c*e^{1/a}/a is the point with
    f(a0) = 0; a1 = e^{-a0} / (a * (W(t) + 1)) = 1/f'(a0).  Raises
    DomainError when t < -1/e (no real expansion point) and
    SingularityError when W(t) = -1.
    """
    t = _expansion_argument(p)
    if t < BRANCH_POINT:
        raise DomainError(
            f"no real expansion point: W argument {t!r} below -1/e"
        )
    w = lambert_w(t)
    if w == -1.0:
        raise SingularityError("expansion point has f' = 0 (W(t) = -1)")
    a0 = math.exp(w - 1.0 / p.a) / p.b
    a1 = math.exp(-a0) / (p.a * (w + 1.0))
    return a0, a1


def _forward_series(p: Params, a0: float, n: int) -> list[float]:
    # Taylor coefficients of f about a0 through order n, from the exact
    # expansions of ln(b*(a0+s)) and e^{a0+s}.
    log_ba0 = math.log(p.b * a0)
    log_ser = [log_ba0] + [
        ((-1.0) ** (k + 1)) / (k * a0**k) for k in range(1, n + 1)
    ]
    inner = [0.0] * (n + 1)  # a*(a0+s)*ln(b*(a0+s)) + (a0+s) + c
    for k in range(n + 1):
        inner[k] += p.a * a0 * log_ser[k]
        if k >= 1:
            inner[k] += p.a * log_ser[k - 1]
    inner[0] += a0 + p.c
    if n >= 1:
        inner[1] += 1.0
    exp_ser = [math.exp(a0)]
    for k in range(1, n + 1):
        exp_ser.append(exp_ser[-1] / k)
    coeffs = [0.0] * (n + 1)
    for i in range(n + 1):
        if inner[i] == 0.0:
            continue
        for j in range(n + 1 - i):
            coeffs[i + j] += inner[i] * exp_ser[j]
    return coeffs


def _poly_mul(u: list[float], v: list[float], order: int) -> list[float]:
    out = [0.0] * (order + 1)
    for i, ui in enumerate(u):
        if ui == 0.0 or i > order:
            continue
        for j, vj in enumerate(v):
            if i + j > order:
                break
            out[i + j] += ui * vj
    return out


def _revert_series(c: list[float], n: int) -> list[float]:
    # Coefficients d of the inverse series given c (c[0] = 0, c[1] != 0).
    d = [0.0] * (n + 1)
    d[1] = 1.0 / c[1]
    for m in range(2, n + 1):
        s = [0.0] * (m + 1)
        for k in range(1, m):
            s[k] = d[k]
        total = [0.0] * (m + 1)
        power = s[:]
        for k in range(1, m + 1):
            if k > 1:
                power = _poly_mul(power, s, m)
            ck = c[k] if k < len(c) else 0.0
            if ck == 0.0:
                continue
            for idx in range(m + 1):
                total[idx] += ck * power[idx]
        d[m] = -total[m] / c[1]
    return d


def taylor_coefficients(p: Params, n: int) -> list[float]:
    """Series coefficients g_1..g_n of the inverse about x = 0.

    The inverse expands as a0 + sum_k g_k x^k / k!.  Coefficients come
    from reverting the forward Taylor series about the expansion point
    (whose own coefficients are exact closed forms), which is far better
    conditioned than iterated differentiation of the inversion-formula
    quotient.  g_1 agrees with the closed-form linear coefficient.
    """
    if not 1 <= n <= 8:
        raise DomainError(f"series order must be in 1..8, got {n!r}")
    a0, _ = taylor_first_order(p)
    c = _forward_series(p, a0, n)
    c[0] = 0.0  # analytically exact: f(a0) = 0
    if abs(c[1]) < 1e-8:
        raise PrecisionError(
            f"series reversion ill-conditioned: f'(a0) = {c[1]!r}"
        )
    d = _revert_series(c, n)
    return [d[k] * math.factorial(k) for k in range(1, n + 1)]


def asymptotic(p: Params, x: float) -> float:
    """Large-x approximation of the inverse through the classical W.

    With s = c/(a+1) and xi = x*e^s/(a+1):

        W(xi) - ln{ (e^s/(a+1)) * [a*ln(b*W(xi)) + 1] + (c/x)*e^{W(xi)} } - s

    Raises DomainError when a = -1, when xi is below -1/e, or when a
    logarithm argument is non-positive.
    """
    if p.a == -1.0:
        raise DomainError("approximation needs a != -1")
    if x == 0.0:
        raise DomainError("approximation needs x != 0")
    shift = p.c / (p.a + 1.0)
    xi = x * math.exp(shift) / (p.a + 1.0)
    if xi < BRANCH_POINT:
        raise DomainError(
            f"approximation undefined: W argument {xi!r} below -1/e"
        )
    w = lambert_w(xi)
    bw = p.b * w
    if not bw > 0.0:
        raise DomainError(f"approximation needs b*W(xi) > 0; got {bw!r}")
    if p.c == 0.0:
        tail = 0.0
    else:
        # (c/x) * e^w assembled in log space so huge w cannot overflow.
        t = w + math.log(abs(p.c)) - math.log(abs(x))
        tail = math.copysign(math.exp(t), p.c / x) if t <= 709.0 else \
            math.copysign(math.inf, p.c / x)
    brace = (math.exp(shift) / (p.a + 1.0)) * (p.a * math.log(bw) + 1.0) + tail
    if not brace > 0.0 or math.isinf(brace):
        raise DomainError(
            f"approximation undefined: log argument {brace!r} at x={x!r}"
        )
    return w - math.log(brace) - shift
