"""Exact prime counting functions, their regular parts, and identity checks."""

from .analysis import (IDENTITIES, Decomposition, IdentityReport, Tables, check_eq11,
                       check_eq12, check_eq21, check_eq28, decompose, derivative_identity_check,
                       stieltjes_integral, vonkoch_ratio, vonkoch_sweep)
from .approx import (dpi_reg, dR_reg, dtheta_reg, euler_product_partial, legendre_approx,
                     li_lower2, li_pv, pnt_approx, psi_reg, R_reg, ri, theta_reg)
from .config import ApproxConfig
from .constants import Constants, compute_constants, limit_constant, limit_constant_accelerated
from .errors import ConfigError, DomainError, PrecisionError, TableExhaustedError
from .exact import StepSeries, R_exact, pi_exact, psi_exact, r_exact, step_series, theta_exact
from .sieve import MobiusTable, PrimePower, PrimeTable, mobius_table, prime_powers, sieve_primes

__version__ = "0.1.0"
