"""Exact prime counting functions and their jump (step-series) representation.

Every function here is a right-continuous step function of a real argument:
the value at a jump position includes that jump.
"""

from __future__ import annotations

import math
import weakref
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DomainError, TableExhaustedError
from .sieve import PrimeTable

KINDS = ("pi", "theta", "psi", "r")


@dataclass(frozen=True, eq=False)
class StepSeries:
    """Jumps ``(positions[i], increments[i])`` of a counting function."""

    kind: str
    positions: np.ndarray
    increments: np.ndarray
    limit: float = field(default=math.inf)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown step-series kind {self.kind!r}")
        if len(self.positions) != len(self.increments):
            raise ValueError("positions and increments differ in length")
        if len(self.positions) > 1 and not np.all(np.diff(self.positions) > 0):
            raise ValueError("positions must be strictly increasing")

    def __len__(self) -> int:
        return len(self.positions)

    @cached_property
    def cumulative(self) -> np.ndarray:
        # np.cumsum accumulates left to right, so cumulative[i] is bit-identical
        # to the naive ascending sum of the first i + 1 increments
        out = np.cumsum(self.increments)
        out.flags.writeable = False
        return out

    def count(self, x: float) -> int:
        """Number of jumps at positions <= x."""
        return int(np.searchsorted(self.positions, x, side="right"))

    def value(self, x: float, compensated: bool = False) -> float:
        n = self.count(x)
        if n == 0:
            return 0.0
        if compensated:
            return math.fsum(self.increments[:n].tolist())
        return float(self.cumulative[n - 1])

    def values(self, xs) -> np.ndarray:
        """Vectorised right-continuous evaluation."""
        idx = np.searchsorted(self.positions, np.asarray(xs, dtype=np.float64), side="right")
        padded = np.concatenate(([0.0], self.cumulative))
        return padded[idx]

    def truncated(self, limit: float) -> "StepSeries":
        n = self.count(limit)
        return StepSeries(self.kind, self.positions[:n], self.increments[:n], limit)


_FULL: "weakref.WeakKeyDictionary[PrimeTable, dict[str, StepSeries]]" = weakref.WeakKeyDictionary()


def _full_series(kind: str, primes: PrimeTable) -> StepSeries:
    cache = _FULL.setdefault(primes, {})
    if kind not in cache:
        if kind == "pi":
            pos, inc = primes.primes, np.ones(len(primes))
        elif kind == "theta":
            pos, inc = primes.primes, primes.logs
        elif kind == "r":
            pos, inc = primes.primes, primes.logs / primes.primes
        elif kind == "psi":
            values, bases, _ = primes.powers
            pos, inc = values, np.log(bases.astype(np.float64))
        else:
            raise DomainError(f"unknown step-series kind {kind!r}")
        cache[kind] = StepSeries(kind, pos.astype(np.float64), inc, float(primes.limit))
    return cache[kind]


def _check_range(x: float, primes: PrimeTable) -> None:
    if math.isnan(x) or x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    if x > primes.limit:
        raise TableExhaustedError(f"x = {x} exceeds prime table limit {primes.limit}")


def step_series(kind: str, limit: float, primes: PrimeTable) -> StepSeries:
    """Jump series of ``kind`` restricted to positions <= limit."""
    if kind not in KINDS:
        raise DomainError(f"unknown step-series kind {kind!r}")
    if limit > primes.limit:
        raise TableExhaustedError(f"series limit {limit} exceeds table limit {primes.limit}")
    return _full_series(kind, primes).truncated(limit)


def pi_exact(x: float, primes: PrimeTable) -> int:
    """Number of primes <= x."""
    _check_range(x, primes)
    return int(np.searchsorted(primes.primes, x, side="right"))


def theta_exact(x: float, primes: PrimeTable, compensated: bool = False) -> float:
    _check_range(x, primes)
    return _full_series("theta", primes).value(x, compensated)


def psi_exact(x: float, primes: PrimeTable, compensated: bool = False) -> float:
    """Sum of log p over prime powers p**k <= x."""
    _check_range(x, primes)
    return _full_series("psi", primes).value(x, compensated)


def r_exact(x: float, primes: PrimeTable, compensated: bool = False) -> float:
    _check_range(x, primes)
    return _full_series("r", primes).value(x, compensated)


def R_exact(x: float, primes: PrimeTable, compensated: bool = False) -> float:
    """Sum of log p / p over p <= x, minus log x."""
    if x < 2:
        raise DomainError(f"R(x) is evaluated from x = 2, got {x}")
    return r_exact(x, primes, compensated) - math.log(x)


def integer_root(n: int, k: int) -> int:
    """Largest integer m with m**k <= n (n >= 0, k >= 1)."""
    if n < 0 or k < 1:
        raise DomainError("integer_root needs n >= 0, k >= 1")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    m = int(round(n ** (1.0 / k)))
    while m**k > n:
        m -= 1
    while (m + 1) ** k <= n:
        m += 1
    return m


def root_floor(x: float, k: int) -> int:
    """floor(x**(1/k)) computed without floating rounding at perfect powers.

    Step functions with integer jump positions only see floor of their argument,
    so this is the safe way to evaluate f(x**(1/k)).
    """
    return integer_root(math.floor(x), k)
