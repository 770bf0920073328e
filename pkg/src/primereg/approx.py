"""Smooth approximations to the prime counting functions and their regular parts.

All Moebius-weighted k-series stop at K(x) = floor(log2 x): beyond it x**(1/k) < 2.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .config import ApproxConfig
from .constants import EULER_GAMMA, Constants
from .errors import ConfigError, DomainError
from .exact import psi_exact
from .quadrature import integrate_geometric, inv_log, principal_value_li
from .sieve import MobiusTable, PrimeTable

LEGENDRE_A = 1.08366


def root_count(x: float) -> int:
    """Largest n with 2**n <= x, or 0 for x < 2 (exact, no log rounding)."""
    if x < 2:
        return 0
    return math.frexp(x)[1] - 1


def _mu_upto(K: int, mobius: MobiusTable, cfg: ApproxConfig) -> list[int]:
    if K > cfg.mobius_cutoff or K > mobius.limit:
        raise ConfigError(
            f"need mu(n) for n <= {K}; mobius_cutoff={cfg.mobius_cutoff}, table limit={mobius.limit}")
    return [0] + [mobius[n] for n in range(1, K + 1)]


def _root(x: float, k: int) -> float:
    # x**(1/k) can land a hair below 2 when x == 2**k
    return max(2.0, x ** (1.0 / k))


def li_lower2(x: float, cfg: ApproxConfig) -> float:
    """Integral of 1/log t from 2 to x."""
    if not x >= 2:
        raise DomainError(f"li_lower2 needs x >= 2, got {x}")
    return integrate_geometric(inv_log, 2.0, x, cfg.quad_tol)[0]


def li_pv(x: float, cfg: ApproxConfig) -> float:
    """Principal-value logarithmic integral from 0."""
    if not x > 1:
        raise DomainError(f"li_pv needs x > 1, got {x}")
    return principal_value_li(x, cfg.quad_tol)[0]


def ri(x: float, mobius: MobiusTable, cfg: ApproxConfig) -> float:
    """Riemann's approximation sum_{n<=K(x)} mu(n)/n Li(x**(1/n)), Li from 2."""
    if not x >= 2:
        raise DomainError(f"ri needs x >= 2, got {x}")
    K = root_count(x)
    mu = _mu_upto(K, mobius, cfg)
    return math.fsum(mu[n] / n * li_lower2(_root(x, n), cfg) for n in range(1, K + 1) if mu[n])


def legendre_approx(x: float, A: float = LEGENDRE_A) -> float:
    if not x > 0 or math.log(x) <= A:
        raise DomainError(f"legendre_approx needs log x > A = {A}, got x = {x}")
    return x / (math.log(x) - A)


def pnt_approx(x: float) -> float:
    if not x > 1:
        raise DomainError(f"pnt_approx needs x > 1, got {x}")
    return x / math.log(x)


def _series(x: float, K: int, mu: list[int], term, magnitude, cfg: ApproxConfig, start: int) -> float:
    out = []
    for k in range(start, K + 1):
        # magnitudes decrease in k: the K - k + 1 remaining terms are bounded by
        # that many copies of this one
        if (K - k + 1) * magnitude(k) < cfg.series_tol:
            break
        if mu[k]:
            out.append(mu[k] * term(k))
    return math.fsum(out)


def R_reg(x: float, mobius: MobiusTable, constants: Constants, cfg: ApproxConfig) -> float:
    """r_limit + (1/x) sum_{k=2}^{K} mu(k)/(1-k) x**(1/k).

    Like every k-series here, the sum stops early once the remaining tail is
    bounded below ``cfg.series_tol``.
    """
    if not x >= 2:
        raise DomainError(f"R_reg needs x >= 2, got {x}")
    K = root_count(x)
    mu = _mu_upto(K, mobius, cfg)
    mag = lambda k: x ** (1.0 / k) / ((k - 1) * x)
    s = _series(x, K, mu, lambda k: -mag(k), mag, cfg, start=2)
    return constants.r_limit + s


def R_reg_prime_power_form(x: float, primes: PrimeTable) -> float:
    """-gamma - sum over prime powers p**k <= x with k >= 2 of log p / p**k."""
    if not x >= 2:
        raise DomainError(f"R_reg_prime_power_form needs x >= 2, got {x}")
    values, bases, exps = primes.powers
    terms = []
    for v, p in zip(values.tolist(), bases.tolist()):
        if v > x:
            break
        if v != p:
            terms.append(math.log(p) / v)
    return -EULER_GAMMA - math.fsum(terms)


def theta_reg(x: float, mobius: MobiusTable, cfg: ApproxConfig) -> float:
    """sum_{k=1}^{K} mu(k) x**(1/k); 0 below 1 and the single term x on [1, 2)."""
    if x < 1:
        return 0.0
    K = max(1, root_count(x))
    mu = _mu_upto(K, mobius, cfg)
    mag = lambda k: x ** (1.0 / k)
    return _series(x, K, mu, mag, mag, cfg, start=1)


def psi_reg(x: float) -> float:
    if x < 0:
        raise DomainError(f"psi_reg needs x >= 0, got {x}")
    return x


def dpi_reg(x: float, mobius: MobiusTable, cfg: ApproxConfig) -> float:
    """Ramanujan's derivative of the regular part of pi."""
    if not x > 2:
        raise DomainError(f"dpi_reg needs x > 2, got {x}")
    K = root_count(x)
    mu = _mu_upto(K, mobius, cfg)
    scale = x * math.log(x)
    mag = lambda k: x ** (1.0 / k) / (k * scale)
    return _series(x, K, mu, mag, mag, cfg, start=1)


def dR_reg(x: float, mobius: MobiusTable, cfg: ApproxConfig) -> float:
    if not x > 2:
        raise DomainError(f"dR_reg needs x > 2, got {x}")
    K = root_count(x)
    mu = _mu_upto(K, mobius, cfg)
    mag = lambda k: x ** (1.0 / k - 2.0) / k
    return _series(x, K, mu, mag, mag, cfg, start=2)


def dtheta_reg(x: float, mobius: MobiusTable, cfg: ApproxConfig) -> float:
    if not x > 2:
        raise DomainError(f"dtheta_reg needs x > 2, got {x}")
    K = root_count(x)
    mu = _mu_upto(K, mobius, cfg)
    mag = lambda k: x ** (1.0 / k) / (k * x)
    return _series(x, K, mu, mag, mag, cfg, start=1)


def ramanujan_coefficients(K: int, mobius: MobiusTable) -> list[Fraction]:
    """Exact coefficients mu(k)/k, k = 1..K, of x**(1/k) in the derivative series."""
    return [Fraction(mobius[k], k) for k in range(1, K + 1)]


def euler_product_partial(s: float, primes: PrimeTable, nterms: int) -> tuple[float, float]:
    """(sum_{n<=nterms} n**-s, 1 / prod_{p<=limit} (1 - p**-s))."""
    if not s > 1:
        raise DomainError(f"Euler product needs s > 1, got {s}")
    partial = math.fsum(n ** -s for n in range(1, nterms + 1))
    log_prod = math.fsum(math.log1p(-(p ** -s)) for p in primes.primes.tolist())
    return partial, math.exp(-log_prod)


def psi_pnt_ratio(x: float, primes: PrimeTable) -> float:
    """|psi(x) - x| / x, the relative size of the oscillatory part of psi."""
    return abs(psi_exact(x, primes) - x) / x


def regular_part_coefficients(K: int, mobius: MobiusTable) -> dict[str, list[Fraction]]:
    """Exact series coefficients of the regular parts for k = 1..K.

    ri:        mu(n)/n     multiplying Li(x**(1/n))
    R_reg:     mu(k)/(1-k) multiplying x**(1/k - 1)   (k >= 2; entry k = 1 is 0)
    theta_reg: mu(k)       multiplying x**(1/k)
    """
    mu = [mobius[k] for k in range(1, K + 1)]
    return {
        "ri": [Fraction(m, k) for k, m in enumerate(mu, 1)],
        "R_reg": [Fraction(0)] + [Fraction(m, 1 - k) for k, m in enumerate(mu[1:], 2)],
        "theta_reg": [Fraction(m) for m in mu],
    }
