"""Euler's constant, the limit of R(x), and the offset between Li conventions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath
import numpy as np

from .config import ApproxConfig
from .errors import ConfigError, PrecisionError, TableExhaustedError
from .quadrature import principal_value_li
from .sieve import PrimeTable, mobius_table

EULER_GAMMA = 0.57721566490153286060  # 20 digits; float keeps ~17
EULER_GAMMA_STR = "0.57721566490153286060651209008240243"
LIMIT_CONSTANT_REPORTED = -1.33258227573322087

_EPS = np.finfo(float).eps

# B_2 .. B_14
_BERNOULLI = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
              Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6)]


def gamma_euler_maclaurin(n: int = 10) -> float:
    """Euler's constant from H_n - log n with the Euler-Maclaurin correction.

    gamma = H_n - log n - 1/(2n) + sum_k B_2k / (2k n^2k); the first omitted
    term is below 1e-17 for n = 10.
    """
    h = sum(Fraction(1, j) for j in range(1, n + 1)) - Fraction(1, 2 * n)
    h += sum(b / (2 * (i + 1) * Fraction(n) ** (2 * (i + 1))) for i, b in enumerate(_BERNOULLI))
    return float(h) - math.log(n)


class Certified(NamedTuple):
    value: float
    radius: float

    @property
    def lower(self) -> float:
        return self.value - self.radius

    @property
    def upper(self) -> float:
        return self.value + self.radius

    def contains(self, v: float) -> bool:
        return self.lower <= v <= self.upper


def integer_tail_bound(cutoff: int) -> float:
    """Upper bound for sum_{n > cutoff} log n / (n (n - 1)).

    The summand is decreasing on [2, inf), so the sum is below the integral from
    ``cutoff``; with 1/(t(t-1)) <= c/(c-1) / t**2 for t >= c that integral is
    at most (log c + 1) / (c - 1).
    """
    return (math.log(cutoff) + 1.0) / (cutoff - 1)


def limit_constant(primes: PrimeTable, cfg: ApproxConfig, tol: float | None = None) -> Certified:
    """lim R(x) = -gamma - sum_p log p / (p (p - 1)) with a certified radius.

    The prime sum is taken directly over p <= cfg.prime_sum_cutoff; the rest
    lies in [0, integer_tail_bound(cutoff)].  Raises PrecisionError when the
    radius exceeds ``tol``.
    """
    cutoff = cfg.prime_sum_cutoff
    if cutoff > primes.limit:
        raise TableExhaustedError(f"prime_sum_cutoff {cutoff} exceeds table limit {primes.limit}")
    n = int(np.searchsorted(primes.primes, cutoff, side="right"))
    p = primes.primes[:n].astype(np.float64)
    terms = primes.logs[:n] / (p * (p - 1.0))
    partial = math.fsum(terms.tolist())
    tail = integer_tail_bound(cutoff)
    # log, product, subtraction and division each contribute at most 1 ulp per term
    rounding = 8 * _EPS * (partial + EULER_GAMMA) + 1e-20
    upper = -EULER_GAMMA - partial
    lower = upper - tail
    out = Certified((upper + lower) / 2, float(tail / 2 + rounding))
    if tol is not None and out.radius > tol:
        raise PrecisionError(
            f"limit constant radius {out.radius:.3e} exceeds tolerance {tol:.3e}; "
            f"raise prime_sum_cutoff above {cutoff}", out.radius)
    return out


def limit_constant_accelerated(terms: int = 70, dps: int = 40) -> Certified:
    """Same constant via sum_{k>=2} sum_p log p / p**k = sum_{N>=2} mu(N) zeta'(N)/zeta(N).

    The identity follows from -zeta'/zeta(s) = sum_k P(ks) with
    P(s) = sum_p log p p**-s, by Moebius inversion; |zeta'/zeta(N)| <= 3 * 2**-N
    bounds the truncated tail.
    """
    if terms < 4:
        raise ConfigError("accelerated path needs at least 4 terms")
    mu = mobius_table(terms)
    with mpmath.workdps(dps):
        s = mpmath.mpf(0)
        for N in range(2, terms + 1):
            if mu[N]:
                s += mu[N] * mpmath.zeta(N, 1, 1) / mpmath.zeta(N)
        value = -mpmath.mpf(EULER_GAMMA_STR) - s
        tail = 6 * mpmath.mpf(2) ** (-terms)
        return Certified(float(value), float(tail) + float(_EPS) * abs(float(value)))


@dataclass(frozen=True)
class Constants:
    gamma: float
    r_limit: float
    r_limit_radius: float
    li_offset: float
    li_offset_radius: float


def li_offset(cfg: ApproxConfig) -> Certified:
    """Principal-value Li minus the Li taken from 2, i.e. li(2)."""
    val, err = principal_value_li(2.0, cfg.quad_tol)
    return Certified(val, max(err, cfg.quad_tol))


def compute_constants(cfg: ApproxConfig | None = None, primes: PrimeTable | None = None) -> Constants:
    """Constants for the regular parts.

    With a prime table reaching ``cfg.prime_sum_cutoff`` the limit constant is
    the direct certified sum; otherwise the accelerated zeta path is used.
    """
    cfg = cfg or ApproxConfig()
    if primes is not None and primes.limit >= cfg.prime_sum_cutoff:
        lc = limit_constant(primes, cfg)
    else:
        lc = limit_constant_accelerated()
    off = li_offset(cfg)
    return Constants(EULER_GAMMA, lc.value, lc.radius, off.value, off.radius)
