"""Command-line front end: ``tabulate``, ``check`` and ``constants``.

Exit codes: 0 success, 1 a check failed or precision unattainable,
2 usage error, 3 resource exhaustion.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass, field
from decimal import ROUND_DOWN, Decimal

import numpy as np

from . import approx
from .analysis import IDENTITIES, Tables, decompose, vonkoch_ratio
from .config import ApproxConfig
from .constants import EULER_GAMMA, limit_constant, limit_constant_accelerated, li_offset
from .errors import ConfigError, DomainError, PrecisionError
from .exact import psi_exact, theta_exact
from .sieve import sieve_primes

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

COLUMNS = ("x", "pi", "li", "ri", "legendre", "x_over_logx", "pi_osc", "theta", "theta_reg",
           "theta_osc", "psi", "psi_osc", "R", "R_reg", "R_osc", "vonkoch_ratio")


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    points: int
    spacing: str = "log"

    def __post_init__(self):
        if not 2 <= self.x_min < self.x_max:
            raise ConfigError(f"grid needs 2 <= xmin < xmax, got [{self.x_min}, {self.x_max}]")
        if self.points < 2:
            raise ConfigError(f"grid needs at least 2 points, got {self.points}")
        if self.spacing not in ("lin", "log"):
            raise ConfigError(f"spacing must be lin or log, got {self.spacing!r}")

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.x_min, self.x_max, self.points)
        return np.linspace(self.x_min, self.x_max, self.points)


@dataclass(frozen=True)
class RunConfig:
    grid: GridSpec
    approx: ApproxConfig
    functions: tuple[str, ...] = COLUMNS[1:]
    fmt: str = "csv"
    out: str | None = None
    sieve_limit: int | None = None
    legendre_a: float = approx.LEGENDRE_A

    def __post_init__(self):
        if not self.functions:
            raise ConfigError("select at least one function")
        unknown = set(self.functions) - set(COLUMNS[1:])
        if unknown:
            raise ConfigError(f"unknown functions: {', '.join(sorted(unknown))}")
        if self.fmt not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {self.fmt!r}")


def sample_row(x: float, tables: Tables, legendre_a: float = approx.LEGENDRE_A) -> dict:
    """Exact, regular and oscillatory values of every tracked function at x."""
    t = tables
    pi = decompose("pi", x, t)
    theta = decompose("theta", x, t)
    psi = decompose("psi", x, t)
    R = decompose("R", x, t)
    try:
        legendre = approx.legendre_approx(x, legendre_a)
    except DomainError:
        legendre = math.nan
    return {
        "x": x,
        "pi": int(pi.exact),
        "li": approx.li_lower2(x, t.cfg),
        "ri": pi.regular,
        "legendre": legendre,
        "x_over_logx": approx.pnt_approx(x),
        "pi_osc": pi.oscillatory,
        "theta": theta.exact,
        "theta_reg": theta.regular,
        "theta_osc": theta.oscillatory,
        "psi": psi.exact,
        "psi_osc": psi.oscillatory,
        "R": R.exact,
        "R_reg": R.regular,
        "R_osc": R.oscillatory,
        "vonkoch_ratio": vonkoch_ratio(x, t) if x >= 3 else math.nan,
    }


def fmt_value(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{v:.16e}"


def _memory_ok(limit: int) -> bool:
    try:
        avail = os.sysconf("SC_AVPHYS_PAGES") * os.sysconf("SC_PAGE_SIZE")
    except (ValueError, OSError):
        return True
    # primes (int64) plus float copies for logs and cumulative sums
    need = 40 * limit / max(1.0, math.log(limit)) + 8 * limit / 64
    return need < avail


def _build_tables(limit: int, cfg: ApproxConfig) -> Tables:
    if not _memory_ok(limit):
        raise MemoryError(f"sieve limit {limit} does not fit in available memory")
    return Tables.build(limit, cfg)


def _approx_config(args, x_max: float) -> ApproxConfig:
    return ApproxConfig(quad_tol=args.quad_tol,
                        mobius_cutoff=max(approx.root_count(x_max) + 1, 1))


def cmd_tabulate(run: RunConfig) -> int:
    grid = run.grid.values()
    limit = run.sieve_limit or math.ceil(run.grid.x_max)
    if limit < run.grid.x_max:
        raise ConfigError(f"sieve limit {limit} is below xmax {run.grid.x_max}")
    tables = _build_tables(limit, run.approx)
    cols = ["x"] + [c for c in COLUMNS[1:] if c in run.functions]
    rows = []
    for x in grid.tolist():
        row = sample_row(x, tables, run.legendre_a)
        rows.append({c: row[c] for c in cols})
    stream = open(run.out, "w", encoding="utf-8", newline="") if run.out else sys.stdout
    try:
        if run.fmt == "csv":
            w = csv.writer(stream, lineterminator="\n")
            w.writerow(cols)
            for row in rows:
                w.writerow([fmt_value(row[c]) for c in cols])
        else:
            out = [{c: (None if isinstance(v, float) and math.isnan(v) else
                        (int(v) if c == "pi" else float(fmt_value(v))))
                    for c, v in row.items()} for row in rows]
            json.dump(out, stream, indent=1)
            stream.write("\n")
    finally:
        if run.out:
            stream.close()
    return EXIT_OK


def cmd_check(identity: str, xs: list[float], tol: float, quad_tol: float = 1e-10,
              sieve_limit: int | None = None) -> int:
    if identity not in IDENTITIES:
        print(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}", file=sys.stderr)
        return EXIT_USAGE
    if not xs:
        print("no x values given", file=sys.stderr)
        return EXIT_USAGE
    x_max = max(xs)
    cfg = ApproxConfig(quad_tol=quad_tol, mobius_cutoff=approx.root_count(x_max) + 1)
    tables = _build_tables(sieve_limit or math.ceil(x_max), cfg)
    ok = True
    for x in xs:
        rep = IDENTITIES[identity](x, tables, tol)
        print(rep.line())
        ok &= rep.passed
    return EXIT_OK if ok else EXIT_FAIL


def certified_digits(value: float, radius: float) -> int:
    """Largest digit count whose truncated prefix is shared by the whole interval."""
    lo, hi = value - radius, value + radius
    best = 0
    for d in range(1, 18):
        if truncate_digits(lo, d) != truncate_digits(hi, d):
            break
        best = d
    return best


def truncate_digits(value: float, digits: int) -> str:
    """First ``digits`` significant digits of ``value``, truncated (not rounded)."""
    if digits <= 0:
        return "?"
    d = Decimal(repr(value))
    quantum = Decimal(1).scaleb(d.adjusted() - digits + 1)
    return str(d.quantize(quantum, rounding=ROUND_DOWN))


def cmd_constants(digits: int, prime_sum_cutoff: int = 10**7, accelerated: bool = False,
                  quad_tol: float = 1e-10) -> int:
    if not 1 <= digits <= 15:
        print(f"digits must be in [1, 15], got {digits}", file=sys.stderr)
        return EXIT_USAGE
    cfg = ApproxConfig(quad_tol=quad_tol, prime_sum_cutoff=prime_sum_cutoff)
    if accelerated:
        lc = limit_constant_accelerated()
    else:
        if not _memory_ok(prime_sum_cutoff):
            raise MemoryError(f"prime_sum_cutoff {prime_sum_cutoff} does not fit in memory")
        lc = limit_constant(sieve_primes(prime_sum_cutoff), cfg)
    off = li_offset(cfg)
    r_digits = certified_digits(lc.value, lc.radius)
    off_digits = certified_digits(off.value, off.radius)
    print(f"gamma     = {truncate_digits(EULER_GAMMA, digits)}")
    shown = min(digits, r_digits)
    print(f"r_limit   = {truncate_digits(lc.value, shown)} "
          f"(value {lc.value:.16e} +/- {lc.radius:.3e})")
    print(f"li_offset = {truncate_digits(off.value, min(digits, off_digits))} "
          f"(value {off.value:.16e} +/- {off.radius:.3e})")
    if digits > r_digits:
        print(f"r_limit certified to {r_digits} digits only, {digits} requested; "
              f"increase --prime-sum-cutoff or use --accelerated", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="primereg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    t = sub.add_parser("tabulate", help="tabulate exact, regular and oscillatory parts on a grid")
    t.add_argument("--xmin", type=float, default=10.0)
    t.add_argument("--xmax", type=float, default=1e6)
    t.add_argument("--points", type=int, default=20)
    t.add_argument("--spacing", choices=("lin", "log"), default="log")
    t.add_argument("--functions", default=",".join(COLUMNS[1:]),
                   help="comma-separated subset of: " + ",".join(COLUMNS[1:]))
    t.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    t.add_argument("--out")
    t.add_argument("--sieve-limit", type=int)
    t.add_argument("--quad-tol", type=float, default=1e-10)
    t.add_argument("--legendre-a", type=float, default=approx.LEGENDRE_A)

    c = sub.add_parser("check", help="check an identity at one or more x")
    c.add_argument("identity", help="one of " + ", ".join(IDENTITIES))
    c.add_argument("x", type=float, nargs="+")
    c.add_argument("--tol", type=float, default=1e-6)
    c.add_argument("--sieve-limit", type=int)
    c.add_argument("--quad-tol", type=float, default=1e-10)

    k = sub.add_parser("constants", help="print gamma, lim R(x) and the Li offset")
    k.add_argument("--digits", type=int, default=10)
    k.add_argument("--prime-sum-cutoff", type=int, default=10**7)
    k.add_argument("--accelerated", action="store_true",
                   help="use the zeta'/zeta series instead of the direct prime sum")
    k.add_argument("--quad-tol", type=float, default=1e-10)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.verb == "tabulate":
            functions = tuple(f.strip() for f in args.functions.split(",") if f.strip())
            grid = GridSpec(args.xmin, args.xmax, args.points, args.spacing)
            run = RunConfig(grid, _approx_config(args, args.xmax), functions, args.fmt,
                            args.out, args.sieve_limit, args.legendre_a)
            return cmd_tabulate(run)
        if args.verb == "check":
            return cmd_check(args.identity, args.x, args.tol, args.quad_tol, args.sieve_limit)
        return cmd_constants(args.digits, args.prime_sum_cutoff, args.accelerated, args.quad_tol)
    except MemoryError as exc:
        print(f"resource exhausted: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ConfigError, DomainError, PrecisionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
