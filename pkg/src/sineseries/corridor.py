"""Elementary polynomial bounds for S_2(t) = sum_n sin(t/n^2).

Splitting the series at n = N and Taylor-sandwiching the tail with
x - x^3/6 <= sin x <= x - x^3/6 + x^5/120 (x >= 0) gives, for every N >= 0,

    -N + A2(N) t - B2(N) t^3          <=  S_2(t),
    +N + A2(N) t - B2(N) t^3 + C2(N) t^5  >=  S_2(t),

with tail constants A2 = sum_{n>N} n^-2, B2 = (1/6) sum_{n>N} n^-6,
C2 = (1/120) sum_{n>N} n^-10.  Taking the pointwise max/min over
0 <= N <= N* yields an upward-tilted corridor that contains the graph of
S_2 on (0, 120] already at N* = 7.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .special import zeta_tail

__all__ = [
    "CorridorCoeffs",
    "corridor_coeffs",
    "early_lower_bound",
    "lower_bound",
    "upper_bound",
]


@dataclass(frozen=True)
class CorridorCoeffs:
    """Tail constants of the split-at-N polynomial bounds for S_2."""

    n: int
    a2: float
    b2: float
    c2: float


def corridor_coeffs(n: int) -> CorridorCoeffs:
    """Tail constants for split point ``n`` (0 <= n <= 64).

    Evaluated as zeta tail sums, which is algebraically identical to
    pi-power closed forms minus partial sums but avoids cancellation.
    """
    if not (0 <= n <= 64):
        raise DomainError("corridor split point must satisfy 0 <= n <= 64")
    return CorridorCoeffs(
        n,
        zeta_tail(2.0, n),
        zeta_tail(6.0, n) / 6.0,
        zeta_tail(10.0, n) / 120.0,
    )


def early_lower_bound(t: float) -> float:
    """Piecewise-cubic lower bound on the tail past n = ceil(sqrt(t)).

    For t > 0:  t/(ceil(sqrt t)+1) - (1/30) t^3 / ceil(sqrt t)^5,
    a lower bound on sum_{n > ceil(sqrt t)} sin(t/n^2).
    """
    if not (t > 0.0 and math.isfinite(t)):
        raise DomainError("early_lower_bound requires t > 0")
    m = math.ceil(math.sqrt(t))
    return t / (m + 1.0) - t**3 / (30.0 * m**5)


def _members(t: float, n_star: int, quintic: bool) -> list[float]:
    if n_star < 0:
        raise DomainError("n_star must be >= 0")
    if not (t >= 0.0 and math.isfinite(t)):
        raise DomainError("t must be finite and >= 0")
    out = []
    for n in range(n_star + 1):
        c = corridor_coeffs(n)
        poly = c.a2 * t - c.b2 * t**3
        if quintic:
            out.append(n + poly + c.c2 * t**5)
        else:
            out.append(-n + poly)
    return out


def lower_bound(t: float, n_star: int) -> float:
    """max over 0 <= N <= n_star of  -N + A2(N) t - B2(N) t^3."""
    return max(_members(t, n_star, quintic=False))


def upper_bound(t: float, n_star: int) -> float:
    """min over 0 <= N <= n_star of  N + A2(N) t - B2(N) t^3 + C2(N) t^5.

    The first sum of the split is bounded above by +N (each sine <= 1);
    published statements of this family sometimes carry a sign slip on N,
    but only +N makes the quintic member an upper bound.
    """
    return min(_members(t, n_star, quintic=True))
