"""Maximum-entropy distributions of the three-parameter entropy.

Maximising S = k * sum p_i ln_qqr(1/p_i) under normalisation and a mean
value of the level variable epsilon_i (Lagrange multipliers alpha, beta)
leads, after the substitution u = exp(((1-q')/(1-q)) * (p^(q-1)-1)) and
y = ((1-r)/(1-q')) * u, to the forward map of `core` with the induced
coefficients, so each level's stationary probability is read off from a
branch inversion at

    x_i = (-1/(1-r) + alpha + beta*eps_i) * ((1-r)/(1-q')) * e^((1-r)/(1-q'))

(the positive exponent is forced by clearing e^(-(1-r)/(1-q')) from the
stationarity equation; the finite-difference stationarity residual is the
end-to-end validator and vanishes only with this sign)

via the unnormalised weight w_i = {a * ln(b * y_i) + 1}^(1/(q-1)) and
p_i = w_i / Z, Z = sum w_j.

alpha and beta are caller inputs.  Because x_i depends on alpha while Z
normalises again, the stationarity conditions hold exactly only when alpha
is tuned so that Z = 1; `solve_alpha` performs that tuning (secant
iteration).  Which inverse branch is physical is likewise not determined by
the stationarity conditions alone, so the branch is an explicit argument;
`suggest_branch` picks the branch a uniform distribution would land on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import Params, branches, evaluate, forward
from .errors import ConvergenceError, DomainError, IntegrationError
from .qcalculus import EntropyParams, ln_qqr

__all__ = [
    "EnsembleSpec",
    "DiscreteDistribution",
    "level_argument",
    "probability",
    "distribution",
    "suggest_branch",
    "solve_alpha",
    "pseudo_beta",
    "stationarity_residuals",
    "continuous_weight",
    "continuous_pdf",
]

_EVAL_TOL = 1e-13


@dataclass(frozen=True)
class EnsembleSpec:
    """Levels eps_i with Lagrange multipliers (alpha, beta) and the triple."""

    levels: tuple[float, ...]
    alpha: float
    beta: float
    ep: EntropyParams

    def __post_init__(self):
        if len(self.levels) == 0:
            raise DomainError("at least one level is required")
        for v in self.levels:
            if not math.isfinite(v):
                raise DomainError(f"levels must be finite, got {v!r}")
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise DomainError("alpha and beta must be finite")


@dataclass(frozen=True)
class DiscreteDistribution:
    """Normalised probabilities with the partition value and beta_r."""

    probs: tuple[float, ...]
    partition: float
    x_values: tuple[float, ...]
    beta_r: float


def _argument(ep: EntropyParams, alpha: float, beta: float, eps: float) -> float:
    cr = 1.0 - ep.r
    cqp = 1.0 - ep.q_prime
    ratio = cr / cqp
    return (-1.0 / cr + alpha + beta * eps) * ratio * math.exp(ratio)


def level_argument(spec: EnsembleSpec, i: int) -> float:
    """Inversion argument x_i for level i (see module docstring)."""
    return _argument(spec.ep, spec.alpha, spec.beta, spec.levels[i])


def _weight(ep: EntropyParams, params: Params, branch: int, x: float) -> float:
    # Unnormalised stationary weight {a*ln(b*y) + 1}^(1/(q-1)) at y solving
    # the forward map for x on the chosen branch.
    y = evaluate(params, branch, x, tol=_EVAL_TOL).y
    inner = params.b * y
    if not inner > 0.0:
        raise DomainError(f"weight undefined: log argument {inner!r}")
    brace = params.a * math.log(inner) + 1.0
    if not brace > 0.0:
        raise DomainError(
            f"weight undefined: brace {brace!r} non-positive at x={x!r} "
            f"(branch {branch} mismatch?)"
        )
    return math.exp(math.log(brace) / (ep.q - 1.0))


def suggest_branch(ep: EntropyParams, n_levels: int) -> int:
    """Branch whose y-range contains a uniform distribution's warm start."""
    params = ep.induced_params()
    p_uni = 1.0 / n_levels
    u = math.exp((1.0 - ep.q_prime) / (1.0 - ep.q) * (p_uni ** (ep.q - 1.0) - 1.0))
    y = (1.0 - ep.r) / (1.0 - ep.q_prime) * u
    for bi in branches(params):
        if bi.y_range.contains(y):
            return bi.index
    raise DomainError(
        f"uniform warm start y={y!r} lies on no branch for {params!r}"
    )


def _all_weights(spec: EnsembleSpec, branch: int) -> tuple[list[float], list[float]]:
    params = spec.ep.induced_params()
    xs, ws = [], []
    for i, eps in enumerate(spec.levels):
        x = _argument(spec.ep, spec.alpha, spec.beta, eps)
        try:
            w = _weight(spec.ep, params, branch, x)
        except DomainError as exc:
            raise DomainError(f"level {i} (eps={eps!r}): {exc}") from exc
        xs.append(x)
        ws.append(w)
    return xs, ws


def probability(spec: EnsembleSpec, i: int, branch: int | None = None) -> float:
    """Normalised stationary probability of level i on the given branch."""
    if branch is None:
        branch = suggest_branch(spec.ep, len(spec.levels))
    _, ws = _all_weights(spec, branch)
    return ws[i] / math.fsum(ws)


def pseudo_beta(spec: EnsembleSpec) -> float:
    """Effective inverse temperature beta / (1 - alpha*(1-r))."""
    denom = 1.0 - spec.alpha * (1.0 - spec.ep.r)
    if denom == 0.0:
        raise DomainError("pseudo temperature undefined: 1 - alpha*(1-r) = 0")
    return spec.beta / denom


def distribution(spec: EnsembleSpec, branch: int | None = None) -> DiscreteDistribution:
    """Full normalised distribution with partition value and beta_r."""
    if branch is None:
        branch = suggest_branch(spec.ep, len(spec.levels))
    xs, ws = _all_weights(spec, branch)
    z = math.fsum(ws)
    return DiscreteDistribution(
        probs=tuple(w / z for w in ws),
        partition=z,
        x_values=tuple(xs),
        beta_r=pseudo_beta(spec),
    )


def solve_alpha(
    levels: Sequence[float],
    beta: float,
    ep: EntropyParams,
    branch: int | None = None,
    tol: float = 1e-14,
    max_iter: int = 100,
) -> float:
    """alpha making the unnormalised weights sum to exactly 1 (Z = 1).

    With this alpha the normalisation is a no-op and the per-level
    stationarity conditions hold at the returned multipliers.  Secant
    iteration warm-started from the uniform distribution.
    """
    levels = tuple(levels)
    params = ep.induced_params()
    if branch is None:
        branch = suggest_branch(ep, len(levels))
    cr, cqp = 1.0 - ep.r, 1.0 - ep.q_prime
    ratio = cr / cqp

    # Uniform warm start: alpha reproducing the uniform weight at the mean level.
    p_uni = 1.0 / len(levels)
    u = math.exp(cqp / (1.0 - ep.q) * (p_uni ** (ep.q - 1.0) - 1.0))
    y_ws = ratio * u
    x_ws = forward(params, y_ws)
    mean_eps = math.fsum(levels) / len(levels)
    alpha = x_ws / (ratio * math.exp(ratio)) + 1.0 / cr - beta * mean_eps

    def excess(al: float) -> float:
        spec = EnsembleSpec(levels=levels, alpha=al, beta=beta, ep=ep)
        _, ws = _all_weights(spec, branch)
        return math.fsum(ws) - 1.0

    f0 = excess(alpha)
    if abs(f0) <= tol:
        return alpha
    step = 1e-4 * (1.0 + abs(alpha))
    a0, a1 = alpha, alpha + step
    f1 = None
    for _ in range(max_iter):
        if f1 is None:
            try:
                f1 = excess(a1)
            except DomainError:
                a1 = 0.5 * (a0 + a1)  # step left the admissible region
                continue
        if abs(f1) <= tol:
            return a1
        if f1 == f0:
            break
        a2 = a1 - f1 * (a1 - a0) / (f1 - f0)
        a0, f0 = a1, f1
        a1, f1 = a2, None
    raise ConvergenceError(
        f"normalisation solve for alpha stalled (last excess {f0!r})"
    )


def _entropy_sum(ep: EntropyParams, probs: Sequence[float]) -> float:
    # Entropy formula without the simplex validation, for finite differences.
    return ep.k * math.fsum(v * ln_qqr(ep, 1.0 / v) for v in probs if v > 0.0)


def stationarity_residuals(
    spec: EnsembleSpec, probs: Sequence[float], h: float = 1e-6
) -> list[float]:
    """Per-level residuals (1/k) dS/dp_i + alpha + beta*eps_i.

    dS/dp_i by central finite difference of the entropy sum.  All residuals
    vanish at a stationary point of the constrained functional; a common
    offset across levels indicates an alpha not tuned to Z = 1.
    """
    probs = list(probs)
    res = []
    for i, eps in enumerate(spec.levels):
        bumped = probs[:]
        bumped[i] = probs[i] + h
        s_plus = _entropy_sum(spec.ep, bumped)
        bumped[i] = probs[i] - h
        s_minus = _entropy_sum(spec.ep, bumped)
        ds = (s_plus - s_minus) / (2.0 * h)
        res.append(ds / spec.ep.k + spec.alpha + spec.beta * eps)
    return res


def continuous_weight(
    ep: EntropyParams, alpha: float, beta: float, branch: int, x: float
) -> float:
    """Unnormalised density at x for the quadratic level eps(x) = x**2."""
    params = ep.induced_params()
    return _weight(ep, params, branch, _argument(ep, alpha, beta, x * x))


def _adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, tol: float
) -> float:
    # Standard recursive Simpson with Richardson acceptance test.
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)

    def recurse(a, fa, b, fb, m, fm, whole, depth):
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        if depth <= 0:
            raise IntegrationError("adaptive Simpson recursion exhausted")
        if abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return recurse(a, fa, m, fm, lm, flm, left, depth - 1) + recurse(
            m, fm, b, fb, rm, frm, right, depth - 1
        )

    m = 0.5 * (a + b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return recurse(a, fa, b, fb, m, fm, whole, 60)


def continuous_pdf(
    ep: EntropyParams,
    alpha: float,
    beta: float,
    branch: int,
    x_grid: Sequence[float],
    tail_ratio: float = 1e-10,
) -> list[float]:
    """Normalised density values on x_grid for the quadratic level x**2.

    The normalising integral runs over [-L, L] with L grown from the grid
    edge until the unnormalised density there falls below `tail_ratio`
    times its peak; IntegrationError if that criterion cannot be met (it
    cannot when the weight decays only poly-logarithmically), DomainError
    if a grid point leaves the branch.
    """
    if len(x_grid) == 0:
        raise DomainError("x_grid must be non-empty")

    def g(x: float) -> float:
        return continuous_weight(ep, alpha, beta, branch, x)

    values = [g(x) for x in x_grid]

    edge = max(abs(x) for x in x_grid)
    peak = max(g(0.0), max(values))
    if peak <= 0.0:
        raise IntegrationError("density is identically zero on the grid")
    if edge > 0.0 and g(edge) > tail_ratio * peak:
        raise IntegrationError(
            f"grid too narrow: density at |x|={edge!r} exceeds "
            f"{tail_ratio!r} of its peak"
        )

    # Grow L beyond the grid until the tail is negligible for quadrature.
    L = edge if edge > 0.0 else 1.0
    good = L
    for _ in range(200):
        try:
            if g(L) <= 1e-2 * tail_ratio * peak:
                break
            good = L
            L *= 1.25
        except DomainError:
            # Walked past the support cut: shrink back toward the last
            # evaluable point.
            hi = L
            for _ in range(200):
                mid = 0.5 * (good + hi)
                if mid == good or mid == hi:
                    break
                try:
                    g(mid)
                    good = mid
                except DomainError:
                    hi = mid
            L = good
            break
    else:
        raise IntegrationError("tail criterion not met while growing the range")

    if g(L) > tail_ratio * peak:
        raise IntegrationError(
            f"tail criterion not met: density at |x|={L!r} exceeds "
            f"{tail_ratio!r} of its peak"
        )

    half = _adaptive_simpson(g, 0.0, L, tol=1e-13 * peak * max(L, 1.0))
    total = 2.0 * half
    if not total > 0.0:
        raise IntegrationError(f"normalisation integral {total!r} not positive")
    return [v / total for v in values]
