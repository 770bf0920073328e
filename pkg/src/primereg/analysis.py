"""Regular/oscillatory decomposition and numerical checks of the identities.

Stieltjes integrals against step functions are evaluated exactly, plateau by
plateau, so identity residuals measure floating rounding and quadrature error
only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import approx
from .config import ApproxConfig
from .constants import Constants, compute_constants
from .errors import DomainError
from .exact import R_exact, StepSeries, pi_exact, psi_exact, root_floor, step_series, theta_exact
from .quadrature import integrate_geometric
from .sieve import DEFAULT_SEGMENT_SIZE, MobiusTable, PrimeTable, mobius_table, sieve_primes

ORIGIN = 2.0

WEIGHTS = {
    "one": lambda y: np.ones_like(y),
    "y/log y": lambda y: y / np.log(y),
    "1/log y": lambda y: 1.0 / np.log(y),
}


@dataclass(frozen=True, eq=False)
class Tables:
    """Everything the checks need: primes, mu, constants and truncation config."""

    primes: PrimeTable
    mobius: MobiusTable
    constants: Constants
    cfg: ApproxConfig

    @classmethod
    def build(cls, limit: float, cfg: ApproxConfig | None = None,
              segment_size: int = DEFAULT_SEGMENT_SIZE) -> "Tables":
        cfg = cfg or ApproxConfig()
        primes = sieve_primes(max(2, math.ceil(limit)), segment_size)
        mobius = mobius_table(cfg.mobius_cutoff, primes)
        return cls(primes, mobius, compute_constants(cfg), cfg)


@dataclass(frozen=True)
class Decomposition:
    kind: str
    x: float
    exact: float
    regular: float
    oscillatory: float


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    x: float
    lhs: float
    rhs: float
    residual: float
    tolerance_used: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance_used

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{self.identity} x={self.x:.16e} lhs={self.lhs:.16e} rhs={self.rhs:.16e} "
                f"residual={self.residual:.3e} tol={self.tolerance_used:.1e} {verdict}")


def _report(identity: str, x: float, lhs: float, rhs: float, tol: float) -> IdentityReport:
    return IdentityReport(identity, x, lhs, rhs, abs(lhs - rhs), tol)


def decompose(kind: str, x: float, tables: Tables) -> Decomposition:
    """Split an exact function into regular part + oscillatory remainder."""
    t = tables
    if kind == "pi":
        exact, regular = float(pi_exact(x, t.primes)), approx.ri(x, t.mobius, t.cfg)
    elif kind == "R":
        exact, regular = R_exact(x, t.primes), approx.R_reg(x, t.mobius, t.constants, t.cfg)
    elif kind == "theta":
        exact, regular = theta_exact(x, t.primes), approx.theta_reg(x, t.mobius, t.cfg)
    elif kind == "psi":
        exact, regular = psi_exact(x, t.primes), approx.psi_reg(x)
    else:
        raise DomainError(f"cannot decompose {kind!r}; expected pi, R, theta or psi")
    return Decomposition(kind, x, exact, regular, exact - regular)


def stieltjes_integral(series: StepSeries, weight: str, a: float, b: float,
                       by_parts: bool = False) -> float:
    """Exact Stieltjes integral over [a, b] involving a step function S.

    by_parts=False:  int w(y) dS(y) = sum of w(position) * increment
    by_parts=True:   int S(y) dw(y) = sum over plateaus of S * (w(right) - w(left))

    Jumps at b count, jumps at a do not, except at the origin a = 2, where the
    integral starts just below 2 and the jump at 2 is included.
    """
    if weight not in WEIGHTS:
        raise DomainError(f"unsupported weight {weight!r}; choose from {sorted(WEIGHTS)}")
    if a < ORIGIN or b > series.limit:
        raise DomainError(f"need 2 <= a <= b <= {series.limit}, got [{a}, {b}]")
    if b < a:
        raise DomainError(f"empty interval [{a}, {b}]")
    if a == b:
        return 0.0
    w = WEIGHTS[weight]
    pos = series.positions
    side = "left" if a == ORIGIN else "right"
    lo = int(np.searchsorted(pos, a, side=side))
    hi = int(np.searchsorted(pos, b, side="right"))
    if not by_parts:
        return math.fsum((w(pos[lo:hi]) * series.increments[lo:hi]).tolist())
    # plateau breakpoints strictly inside (a, b)
    inner = pos[int(np.searchsorted(pos, a, side="right")):int(np.searchsorted(pos, b, side="left"))]
    bps = np.concatenate(([a], inner, [b]))
    levels = series.values(bps[:-1])
    wv = w(bps)
    return math.fsum((levels * np.diff(wv)).tolist())


def _log_weight_integral(x: float, tol: float) -> float:
    # int_2^x log y d(y / log y) = int_2^x (1 - 1/log y) dy
    return integrate_geometric(lambda y: 1.0 - 1.0 / np.log(y), ORIGIN, x, tol)[0]


def _need(x: float, lo: float = ORIGIN) -> None:
    if not x >= lo:
        raise DomainError(f"identity checks need x >= {lo}, got {x}")


def check_eq11(x: float, tables: Tables, tol: float = 1e-6) -> IdentityReport:
    """pi(x) = r(x) x/log x - int_2^x r(y) d(y/log y)."""
    _need(x)
    r = step_series("r", x, tables.primes)
    lhs = float(pi_exact(x, tables.primes))
    rhs = r.value(x) * x / math.log(x) - stieltjes_integral(r, "y/log y", ORIGIN, x, by_parts=True)
    return _report("eq11", x, lhs, rhs, tol)


def check_eq12(x: float, tables: Tables, tol: float = 1e-6) -> IdentityReport:
    """pi(x) = Li(x) + R(x) x/log x - int_2^x R(y) d(y/log y) + 2, Li taken from 2.

    The R integral is split into the exact r(y) part minus the smooth
    log y part, which is integrated by quadrature.
    """
    _need(x)
    t = tables
    r = step_series("r", x, t.primes)
    lhs = float(pi_exact(x, t.primes))
    r_part = stieltjes_integral(r, "y/log y", ORIGIN, x, by_parts=True)
    R_integral = r_part - _log_weight_integral(x, t.cfg.quad_tol)
    li = approx.li_lower2(x, t.cfg)
    rhs = li + R_exact(x, t.primes) * x / math.log(x) - R_integral + 2.0
    return _report("eq12", x, lhs, rhs, tol)


def check_eq21(x: float, tables: Tables, tol: float = 1e-6) -> IdentityReport:
    """pi(x) = theta(x)/log x - int_2^x theta(y) d(1/log y)."""
    _need(x)
    th = step_series("theta", x, tables.primes)
    lhs = float(pi_exact(x, tables.primes))
    rhs = th.value(x) / math.log(x) - stieltjes_integral(th, "1/log y", ORIGIN, x, by_parts=True)
    return _report("eq21", x, lhs, rhs, tol)


def check_eq28(x: float, tables: Tables, tol: float = 1e-8) -> IdentityReport:
    """theta(x) = sum_{k<=K(x)} mu(k) psi(x**(1/k))."""
    _need(x)
    t = tables
    K = approx.root_count(x)
    lhs = theta_exact(x, t.primes)
    terms = [t.mobius[k] * psi_exact(root_floor(x, k), t.primes)
             for k in range(1, K + 1) if t.mobius[k]]
    return _report("eq28", x, lhs, math.fsum(terms), tol)


def vonkoch_ratio(x: float, tables: Tables, convention: str = "lower2") -> float:
    """|pi(x) - Li(x)| / (sqrt(x) log x)."""
    if not x >= 3:
        raise DomainError(f"von Koch ratio needs x >= 3, got {x}")
    if convention == "lower2":
        li = approx.li_lower2(x, tables.cfg)
    elif convention == "pv":
        li = approx.li_pv(x, tables.cfg)
    else:
        raise DomainError(f"unknown Li convention {convention!r}")
    return abs(pi_exact(x, tables.primes) - li) / (math.sqrt(x) * math.log(x))


def check_eq8a(x: float, tables: Tables, tol: float = 1.0) -> IdentityReport:
    """von Koch ratio reported as a residual against 0; passes when <= tol."""
    return _report("eq8a", x, vonkoch_ratio(x, tables), 0.0, tol)


IDENTITIES = {
    "eq8a": check_eq8a,
    "eq11": check_eq11,
    "eq12": check_eq12,
    "eq21": check_eq21,
    "eq28": check_eq28,
}


@dataclass
class VonKochSweep:
    grid: np.ndarray
    ratios: np.ndarray

    @property
    def max_ratio(self) -> float:
        return float(np.max(self.ratios))

    @property
    def argmax(self) -> float:
        return float(self.grid[int(np.argmax(self.ratios))])


def vonkoch_sweep(tables: Tables, x_min: float, x_max: float, points: int) -> VonKochSweep:
    grid = np.geomspace(x_min, x_max, points)
    return VonKochSweep(grid, np.array([vonkoch_ratio(float(x), tables) for x in grid]))


def fd_step(x: float) -> float:
    """Central-difference step scaled to x."""
    return x * 1e-4


def central_difference(f, x: float, h: float) -> float:
    return (f(x + h) - f(x - h)) / (2 * h)


@dataclass
class DerivativeReport:
    x: float
    h: float
    eq14_coefficients_equal: bool
    eq23_coefficients_equal: bool
    fd_relative: dict[str, float] = field(default_factory=dict)
    identity_relative: dict[str, float] = field(default_factory=dict)

    def worst(self) -> float:
        return max([*self.fd_relative.values(), *self.identity_relative.values()])


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b)


def derivative_coefficients(K: int, mobius: MobiusTable) -> dict[str, list[Fraction]]:
    """Coefficients of the differentiated regular parts, obtained term by term.

    Each list is indexed by k = 1..K and multiplies:
      dpi:     x**(1/k) / (x log x)   from d/dx Li(x**(1/k)) = x**(1/k) / (x log x)
      eq14:    the same basis, built from 1/log x + x R_reg'(x) / log x
      dtheta:  x**(1/k) / x           from d/dx x**(1/k) = x**(1/k) / (k x)
      eq23:    the same basis, built from pi_reg'(x) log x
    """
    c = approx.regular_part_coefficients(K, mobius)
    dpi = list(c["ri"])
    # x**(1/k - 1) -> (1/k - 1) x**(1/k - 2); times x / log x moves it onto the dpi basis
    dR = [a * (Fraction(1, k) - 1) for k, a in enumerate(c["R_reg"], 1)]
    eq14 = [Fraction(1) + dR[0]] + dR[1:]
    dtheta = [m * Fraction(1, k) for k, m in enumerate(c["theta_reg"], 1)]
    eq23 = list(dpi)  # multiplying by log x maps x**(1/k)/(x log x) onto x**(1/k)/x
    return {"dpi": dpi, "eq14": eq14, "dtheta": dtheta, "eq23": eq23}


def derivative_identity_check(x: float, h: float, tables: Tables) -> DerivativeReport:
    """Derivative relations between regular parts, algebraically and numerically."""
    if not x > 2 or not h > 0 or x - h <= 2:
        raise DomainError(f"need x - h > 2 and h > 0, got x={x}, h={h}")
    t = tables
    mu, cfg = t.mobius, t.cfg
    coeffs = derivative_coefficients(approx.root_count(x), mu)
    dpi = approx.dpi_reg(x, mu, cfg)
    dR = approx.dR_reg(x, mu, cfg)
    dth = approx.dtheta_reg(x, mu, cfg)
    lx = math.log(x)
    fd = {
        "dpi_reg": _rel(central_difference(lambda y: approx.ri(y, mu, cfg), x, h), dpi),
        "dR_reg": _rel(central_difference(lambda y: approx.R_reg(y, mu, t.constants, cfg), x, h), dR),
        "dtheta_reg": _rel(central_difference(lambda y: approx.theta_reg(y, mu, cfg), x, h), dth),
    }
    ident = {
        "eq14": _rel(1.0 / lx + x * dR / lx, dpi),
        "eq23": _rel(dpi * lx, dth),
    }
    return DerivativeReport(x, h, coeffs["dpi"] == coeffs["eq14"],
                            coeffs["dtheta"] == coeffs["eq23"], fd, ident)
