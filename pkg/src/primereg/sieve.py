"""Segmented sieves for primes, prime powers and the Moebius function."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np

from .errors import DomainError, TableExhaustedError

DEFAULT_SEGMENT_SIZE = 1 << 16  # odd candidates per segment


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """All primes in ``[2, limit]`` in ascending order (int64, read-only)."""

    limit: int
    primes: np.ndarray

    def __post_init__(self):
        self.primes.flags.writeable = False

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes.tolist())

    @cached_property
    def logs(self) -> np.ndarray:
        out = np.log(self.primes.astype(np.float64))
        out.flags.writeable = False
        return out

    @cached_property
    def powers(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(values, bases, exponents)`` of every prime power <= limit, sorted by value."""
        return _prime_power_arrays(self, self.limit)


@dataclass(frozen=True, eq=False)
class MobiusTable:
    """mu(n) for 1 <= n <= limit; ``values[0]`` is an unused 0."""

    limit: int
    values: np.ndarray

    def __post_init__(self):
        self.values.flags.writeable = False

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise TableExhaustedError(f"mu({n}) outside table [1, {self.limit}]")
        return int(self.values[n])


class PrimePower(NamedTuple):
    p: int
    k: int
    value: int


def simple_sieve(limit: int) -> np.ndarray:
    """Monolithic Eratosthenes sieve; reference path for the segmented one."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    is_prime[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if is_prime[p]:
            is_prime[p * p :: 2 * p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _segment(lo: int, hi: int, base: list[int]) -> np.ndarray:
    # lo is odd; the mask covers lo, lo+2, ... < hi
    mask = np.ones((hi - lo + 1) // 2, dtype=bool)
    for p in base:
        pp = p * p
        if pp >= hi:
            break
        start = max(pp, -(-lo // p) * p)
        if not start & 1:
            start += p
        mask[(start - lo) // 2 :: p] = False
    return lo + 2 * np.flatnonzero(mask).astype(np.int64)


def sieve_primes(limit: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> PrimeTable:
    """Primes up to ``limit`` via an odd-only segmented sieve.

    Working memory is one boolean segment of ``segment_size`` entries plus the
    base primes below sqrt(limit); only the output grows with ``limit``.
    """
    limit = int(limit)
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    if segment_size < 1:
        raise DomainError("segment_size must be positive")
    base = simple_sieve(math.isqrt(limit))[1:].tolist()
    chunks = [np.array([2], dtype=np.int64)]
    span = 2 * segment_size
    lo = 3
    while lo <= limit:
        hi = min(lo + span, limit + 1)
        chunks.append(_segment(lo, hi, base))
        lo += span
    return PrimeTable(limit, np.concatenate(chunks))


def smallest_prime_factors(limit: int, primes: PrimeTable | None = None) -> np.ndarray:
    """spf[n] for 0 <= n <= limit (spf[0] = spf[1] = 0)."""
    dtype = np.int32 if limit < 2**31 else np.int64
    spf = np.zeros(limit + 1, dtype=dtype)
    if limit < 2:
        return spf
    root = math.isqrt(limit)
    if primes is not None and primes.limit >= root:
        small = primes.primes[: np.searchsorted(primes.primes, root, side="right")]
    else:
        small = simple_sieve(root)
    for p in small.tolist():
        block = spf[p * p :: p]
        block[block == 0] = p
    n = np.arange(limit + 1, dtype=dtype)
    unset = spf == 0
    spf[unset] = n[unset]
    spf[:2] = 0
    return spf


def mobius_table(limit: int, primes: PrimeTable | None = None) -> MobiusTable:
    """Moebius function from a smallest-prime-factor sieve.

    mu(n) = 0 if spf(n) divides n / spf(n), else -mu(n / spf(n)).  Since
    n / spf(n) <= n / 2, the recurrence is evaluated in doubling blocks.
    """
    limit = int(limit)
    if limit < 1:
        raise DomainError(f"Moebius limit must be >= 1, got {limit}")
    mu = np.zeros(limit + 1, dtype=np.int8)
    mu[1] = 1
    spf = smallest_prime_factors(limit, primes)
    lo = 2
    while lo <= limit:
        hi = min(2 * lo, limit + 1)
        n = np.arange(lo, hi, dtype=np.int64)
        p = spf[lo:hi].astype(np.int64)
        m = n // p
        mu[lo:hi] = np.where(m % p == 0, 0, -mu[m])
        lo = hi
    return MobiusTable(limit, mu)


def _prime_power_arrays(table: PrimeTable, limit: int):
    if limit > table.limit:
        raise TableExhaustedError(f"prime powers to {limit} need primes to {limit}")
    primes = table.primes[: np.searchsorted(table.primes, limit, side="right")]
    values, bases, exps = [primes], [primes], [np.ones(len(primes), dtype=np.int64)]
    extra = []
    for p in primes[: np.searchsorted(primes, math.isqrt(limit), side="right")].tolist():
        q, k = p * p, 2
        while q <= limit:
            extra.append((q, p, k))
            q *= p
            k += 1
    if extra:
        arr = np.array(extra, dtype=np.int64)
        values.append(arr[:, 0])
        bases.append(arr[:, 1])
        exps.append(arr[:, 2])
    values = np.concatenate(values)
    order = np.argsort(values, kind="stable")
    out = (values[order], np.concatenate(bases)[order], np.concatenate(exps)[order])
    for a in out:
        a.flags.writeable = False
    return out


def prime_powers(limit: int, primes: PrimeTable | None = None) -> Iterator[PrimePower]:
    """Yield every ``(p, k, p**k)`` with ``p**k <= limit`` in increasing order."""
    limit = int(limit)
    if limit < 2:
        raise DomainError(f"prime power limit must be >= 2, got {limit}")
    table = primes if primes is not None else sieve_primes(limit)
    values, bases, exps = (
        table.powers if limit == table.limit else _prime_power_arrays(table, limit)
    )
    for v, p, k in zip(values.tolist(), bases.tolist(), exps.tolist()):
        yield PrimePower(p, k, v)
