"""Mellin-side description of the series: the kernel
Q_p(s) = zeta(p s) Gamma(-s) sin(-pi s / 2), its small-t Taylor expansion,
and a truncated-contour diagnostic for the fluctuation.

All kernel APIs use the rescaled variable s (the Mellin variable divided
by p), in which the fundamental strip is (1/p, 1).  The kernel is evaluated
through the reflection identity

    Gamma(-s) sin(-pi s/2) = pi / (2 cos(pi s/2) Gamma(1+s)),

which makes the removable point s = 0 (value zeta(0) pi/2 = -pi/4) and the
removable even integers explicit, and leaves genuine poles only at the odd
integers (cosine zeros) and at s = 1/p (zeta pole).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._summation import compensated_sum
from .errors import DomainError, PoleError
from .series import EvalResult, partial_sum  # noqa: F401  (partial_sum re-used in tests)
from .special import gamma, zeta, zeta_real

__all__ = ["MellinKernel", "kernel_value", "taylor_eval", "contour_fluctuation"]


@dataclass(frozen=True)
class MellinKernel:
    """Kernel parameters; the fundamental strip is (1/p, 1) in s = (Mellin)/p."""

    p: float

    def __post_init__(self):
        if self.p <= 1.0:
            raise DomainError("kernel requires p > 1")

    @property
    def fundamental_strip(self) -> tuple[float, float]:
        return (1.0 / self.p, 1.0)

    def value(self, sigma: complex) -> complex:
        return kernel_value(self.p, sigma)


def _near_odd_integer(x: float, tol: float = 1e-300) -> int | None:
    n = round(x)
    if n % 2 == 1 and abs(x - n) <= tol:
        return int(n)
    return None


def kernel_value(p: float, sigma: complex) -> complex:
    """zeta(p*sigma) * Gamma(-sigma) * sin(-pi*sigma/2) with removable points
    patched; poles raise :class:`PoleError` naming the offending factor."""
    if p <= 1.0:
        raise DomainError("requires p > 1")
    s = complex(sigma)
    if s.imag == 0.0:
        if s.real == 1.0 / p:
            raise PoleError(
                "kernel pole (zeta factor) at sigma = 1/p", location=1.0 / p, factor="zeta"
            )
        odd = _near_odd_integer(s.real)
        if odd is not None and odd >= 1:
            raise PoleError(
                f"kernel pole (Gamma factor) at sigma = {odd}", location=odd, factor="gamma"
            )
    zfac = zeta(p * s)
    if s.real > -0.5:
        return zfac * math.pi / (2.0 * cmath.cos(0.5 * math.pi * s) * gamma(1.0 + s))
    return zfac * gamma(-s) * cmath.sin(-0.5 * math.pi * s)


def taylor_eval(p: float, t: float, abs_tol: float = 1e-12) -> EvalResult:
    """Small-t evaluation of the series by its Taylor expansion

        sum_k (-1)^k zeta(p(2k+1)) t^(2k+1) / (2k+1)!

    Truncation stops once the term bound zeta(p) |t|^(2k+1)/(2k+1)! falls
    below ``abs_tol`` with 2k+1 > |t| (zeta(p(2k+1)) <= zeta(p) for all k).
    The reported bound adds the cancellation noise of the largest term, so
    it degrades honestly for |t| beyond ~30.
    """
    if p <= 1.0:
        raise DomainError("requires p > 1")
    if abs_tol <= 0.0:
        raise DomainError("abs_tol must be positive")
    t = float(t)
    if not math.isfinite(t):
        raise DomainError("t must be finite")
    if t == 0.0:
        return EvalResult(0.0, 0.0, 0, "taylor")
    sign = 1.0 if t > 0 else -1.0
    ta = abs(t)
    z_p = zeta_real(p)
    terms = []
    largest = 0.0
    k = 0
    t_pow = ta
    fact = 1.0
    while True:
        term = zeta_real(p * (2 * k + 1)) * t_pow / fact
        terms.append(term if k % 2 == 0 else -term)
        largest = max(largest, term)
        k += 1
        t_pow *= ta * ta
        fact *= (2.0 * k) * (2.0 * k + 1.0)
        bound_next = z_p * t_pow / fact
        if bound_next < abs_tol and (2 * k + 1) > ta:
            break
        if k > 200:
            raise DomainError("Taylor expansion failed to terminate")
    value = compensated_sum(terms)
    eps = float(np.finfo(float).eps)
    err = bound_next + eps * (largest * len(terms) + abs(value))
    return EvalResult(sign * value, err, k, "taylor")


def contour_fluctuation(kernel: MellinKernel, t: float, v_max: float, panels: int) -> float:
    """Truncated symmetric contour integral on the strip boundary:

        (1/2 pi) * integral_{-v_max}^{v_max} t^{iv} Q_p(iv) dv,

    folded onto [0, v_max] by the kernel's conjugate symmetry.

    DIAGNOSTIC ONLY: the untruncated object is a tempered distribution, so
    no pointwise convergence rate to the fluctuation is asserted; callers
    should record the truncated value together with v_max.
    """
    if t <= 0.0:
        raise DomainError("requires t > 0")
    if v_max <= 0.0:
        raise DomainError("requires v_max > 0")
    if panels < 1:
        raise DomainError("panels must be >= 1")
    nodes, weights = np.polynomial.legendre.leggauss(12)
    edges = np.linspace(0.0, v_max, panels + 1)
    log_t = math.log(t)
    total = []
    for a, b in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (a + b)
        half = 0.5 * (b - a)
        vs = mid + half * nodes
        vals = np.array(
            [
                (cmath.exp(1j * v * log_t) * kernel_value(kernel.p, 1j * v)).real
                for v in vs
            ]
        )
        total.append(half * float(np.dot(weights, vals)))
    return compensated_sum(total) / math.pi
