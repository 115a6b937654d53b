"""Deformed logarithms/exponentials and the three-parameter entropy.

The one-parameter deformation ln_q x = (x^(1-q) - 1)/(1-q) recovers ln x as
q -> 1; its inverse exp_q x = [1 + (1-q) x]^(1/(1-q)) recovers exp.  Chaining
the same deformation twice and three times gives the two- and
three-parameter logarithms

    ln_{q,q'}   x = ((exp((1-q') ln_q x)) - 1) / (1-q')
    ln_{q,q',r} x = ((exp((1-r) ln_{q,q'} x)) - 1) / (1-r)

and the entropy S = k * sum_i p_i * ln_{q,q',r}(1/p_i).  Each deformation
level collapses to the identity map on its argument as its parameter tends
to 1, which is how the limit chain q,q',r -> 1 recovers the Shannon form.

Deformation parameters within 1e-12 of 1 switch to the exact limit formulas
to avoid 0/0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import Params
from .errors import DomainError

__all__ = [
    "EntropyParams",
    "ln_q",
    "exp_q",
    "ln_qq",
    "ln_qqr",
    "entropy_qqr",
]

_LIMIT_TOL = 1e-12


@dataclass(frozen=True)
class EntropyParams:
    """Deformation triple (q, q_prime, r) and entropy scale k > 0.

    Values equal to 1 are allowed (the deformed maps then use their limit
    forms); `induced_params` requires all three to differ from 1.
    """

    q: float
    q_prime: float
    r: float
    k: float = 1.0

    def __post_init__(self):
        if not self.k > 0.0:
            raise DomainError(f"entropy scale k must be positive, got {self.k!r}")
        for name in ("q", "q_prime", "r", "k"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")

    def induced_params(self) -> Params:
        """Coefficients (a, b, c) of the forward map tied to this triple:

        a = (1-q)/(1-q'),  b = (1-q')/(1-r),  c = -1/(1-q').
        """
        cq, cqp, cr = 1.0 - self.q, 1.0 - self.q_prime, 1.0 - self.r
        if abs(cq) < _LIMIT_TOL or abs(cqp) < _LIMIT_TOL or abs(cr) < _LIMIT_TOL:
            raise DomainError(
                "induced coefficients need q, q_prime and r all away from 1"
            )
        return Params(a=cq / cqp, b=cqp / cr, c=-1.0 / cqp)


def _stretch(coeff: float, s: float) -> float:
    # (exp(coeff*s) - 1)/coeff, continuously extended to coeff = 0.
    if abs(coeff) < _LIMIT_TOL:
        return s
    return math.expm1(coeff * s) / coeff


def ln_q(q: float, x: float) -> float:
    """One-parameter logarithm (x^(1-q) - 1)/(1-q); ln x at q = 1."""
    if not x > 0.0:
        raise DomainError(f"ln_q needs x > 0, got {x!r}")
    return _stretch(1.0 - q, math.log(x))


def exp_q(q: float, x: float) -> float:
    """Inverse of ln_q: [1 + (1-q) x]^(1/(1-q)); exp(x) at q = 1."""
    cq = 1.0 - q
    if abs(cq) < _LIMIT_TOL:
        return math.exp(x)
    base = 1.0 + cq * x
    if not base > 0.0:
        raise DomainError(f"exp_q needs 1 + (1-q)*x > 0, got {base!r}")
    return math.exp(math.log1p(cq * x) / cq)


def ln_qq(q: float, q_prime: float, x: float) -> float:
    """Two-parameter logarithm: ln_q stretched once more by 1 - q'."""
    return _stretch(1.0 - q_prime, ln_q(q, x))


def ln_qqr(ep: EntropyParams, x: float) -> float:
    """Three-parameter logarithm: ln_{q,q'} stretched a third time by 1 - r.

    Strictly increasing in x; 0 at x = 1; recovers ln_{q,q'} as r -> 1 and
    plain ln as all three parameters tend to 1.  Overflow in the nested
    exponentials propagates as OverflowError.
    """
    return _stretch(1.0 - ep.r, ln_qq(ep.q, ep.q_prime, x))


def entropy_qqr(ep: EntropyParams, p: Sequence[float]) -> float:
    """Entropy k * sum_i p_i * ln_qqr(1/p_i) of a probability vector.

    Zero entries contribute nothing (p*ln(1/p) -> 0); the vector must be
    non-negative and sum to 1 within 1e-12.
    """
    total = 0.0
    for v in p:
        if v < 0.0 or not math.isfinite(v):
            raise DomainError(f"probabilities must be finite and >= 0, got {v!r}")
        total += v
    if abs(total - 1.0) > 1e-12:
        raise DomainError(f"probabilities sum to {total!r}, not 1")
    acc = 0.0
    for v in p:
        if v > 0.0:
            acc += v * ln_qqr(ep, 1.0 / v)
    return ep.k * acc
