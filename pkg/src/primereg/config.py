"""Truncation and tolerance settings for series and quadrature."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError


@dataclass(frozen=True)
class ApproxConfig:
    quad_tol: float = 1e-10        # absolute, per quadrature call
    mobius_cutoff: int = 64        # largest n in Moebius-weighted sums
    prime_sum_cutoff: int = 10**7  # largest prime summed directly for the limit constant
    series_tol: float = 1e-16      # drop k-series terms smaller than this

    def __post_init__(self):
        if not self.quad_tol > 0:
            raise ConfigError(f"quad_tol must be > 0, got {self.quad_tol}")
        if self.mobius_cutoff < 1:
            raise ConfigError(f"mobius_cutoff must be >= 1, got {self.mobius_cutoff}")
        if self.prime_sum_cutoff < 2:
            raise ConfigError(f"prime_sum_cutoff must be >= 2, got {self.prime_sum_cutoff}")
        if not self.series_tol > 0:
            raise ConfigError(f"series_tol must be > 0, got {self.series_tol}")
