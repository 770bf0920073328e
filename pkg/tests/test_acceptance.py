"""Acceptance gate: one test per exit criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the criterion
lines inline; they are also collected into the terminal summary.
"""

import math
import time

import numpy as np
import pytest

from oracles import mobius_td, prime_powers_double_loop, primes_td
from primereg import approx
from primereg.analysis import (Tables, check_eq12, check_eq21, check_eq28, decompose,
                               derivative_coefficients, derivative_identity_check, fd_step,
                               vonkoch_sweep)
from primereg.cli import main
from primereg.config import ApproxConfig
from primereg.constants import (LIMIT_CONSTANT_REPORTED, limit_constant,
                                limit_constant_accelerated)
from primereg.exact import pi_exact, psi_exact, r_exact, theta_exact
from primereg.sieve import mobius_table, sieve_primes

RESULTS = []


def record(tag, ok, detail):
    line = f"[{tag}] {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_ac01_limit_constant(capsys):
    t0 = time.perf_counter()
    code = main(["constants", "--digits", "6", "--prime-sum-cutoff", str(10**8)])
    elapsed = time.perf_counter() - t0
    out = capsys.readouterr().out
    cfg = ApproxConfig(prime_sum_cutoff=10**8)
    direct = limit_constant(sieve_primes(10**8), cfg)
    acc = limit_constant_accelerated()
    shown = next(l for l in out.splitlines() if l.startswith("r_limit")).split("=")[1].split()[0]
    ok = (code == 0 and shown.startswith("-1.33258") and direct.contains(LIMIT_CONSTANT_REPORTED)
          and direct.radius <= 1e-6 and elapsed <= 120
          and abs(acc.value - LIMIT_CONSTANT_REPORTED) <= 1e-12
          and direct.lower - acc.radius <= acc.value <= direct.upper + acc.radius)
    with capsys.disabled():
        record("AC-1", ok, f"lim R = {direct.value:.12f} +/- {direct.radius:.2e} (cutoff 1e8, "
               f"cmd {elapsed:.1f}s); accelerated {acc.value:.17f}, "
               f"|acc - reported| = {abs(acc.value - LIMIT_CONSTANT_REPORTED):.1e}")


@pytest.fixture(scope="module")
def li_offsets():
    cfg = ApproxConfig()
    grid = np.geomspace(10, 1e6, 10)
    return np.array([approx.li_pv(x, cfg) - approx.li_lower2(x, cfg) for x in grid])


def test_ac02a_li_offset_constant(li_offsets):
    spread = float(li_offsets.max() - li_offsets.min())
    record("AC-2a", spread <= 1e-8, f"Li_pv - Li_2 spread over 10-point grid = {spread:.2e} (<= 1e-8)")


def test_ac02b_li_offset_rounds_to_104(li_offsets):
    value = float(li_offsets.mean())
    rounded = float(f"{value:.3g}")
    record("AC-2b", rounded == 1.04,
           f"Li offset = {value:.12f}; rounded to 3 significant digits = {rounded} (criterion: 1.04)")


def _identity(tag, check, tol, tables):
    t0 = time.perf_counter()
    reps = [check(x, tables, tol) for x in (1e2, 1e4, 1e6)]
    elapsed = time.perf_counter() - t0
    worst = max(r.residual for r in reps)
    return reps, worst, elapsed


def test_ac03_eq12():
    t0 = time.perf_counter()
    tables = Tables.build(10**6)
    reps, worst, _ = _identity("AC-3", check_eq12, 1e-6, tables)
    elapsed = time.perf_counter() - t0
    record("AC-3", all(r.passed for r in reps) and elapsed <= 30,
           f"eq12 max residual {worst:.2e} (<= 1e-6) at x in {{1e2,1e4,1e6}}, {elapsed:.2f}s (<= 30s)")


def test_ac04_eq21(tables_1e6):
    reps, worst, _ = _identity("AC-4", check_eq21, 1e-6, tables_1e6)
    record("AC-4", all(r.passed for r in reps), f"eq21 max residual {worst:.2e} (<= 1e-6)")


def test_ac05_eq28(tables_1e6):
    reps, worst, _ = _identity("AC-5", check_eq28, 1e-8, tables_1e6)
    record("AC-5", all(r.passed for r in reps), f"eq28 max residual {worst:.2e} (<= 1e-8)")


def test_ac06_ri_beats_li(tables_1e8):
    t = tables_1e8
    parts = []
    ok = True
    for x in (1e3, 1e4, 1e5, 1e6, 1e7):
        pi = pi_exact(x, t.primes)
        e_ri = abs(approx.ri(x, t.mobius, t.cfg) - pi)
        e_li = abs(approx.li_lower2(x, t.cfg) - pi)
        ok &= e_ri < e_li
        parts.append(f"{x:.0e}: {e_ri:.2f}<{e_li:.2f}")
    record("AC-6", ok, "|Ri - pi| < |Li - pi|  " + ", ".join(parts))


def test_ac07_legendre_a1(tables_1e8):
    x = 1e8
    pi = pi_exact(x, tables_1e8.primes)
    e1 = abs(approx.legendre_approx(x, 1.0) - pi)
    e2 = abs(approx.legendre_approx(x, approx.LEGENDRE_A) - pi)
    record("AC-7", e1 < e2, f"pi(1e8) = {pi}; |L(A=1) - pi| = {e1:.1f} vs |L(A=1.08366) - pi| = {e2:.1f}")


def test_ac08_vonkoch(tables_1e8):
    sweep = vonkoch_sweep(tables_1e8, 1e2, 1e7, 50)
    m = sweep.max_ratio
    record("AC-8", math.isfinite(m) and m < 1,
           f"max |pi - Li| / (sqrt(x) log x) over 50-point grid [1e2, 1e7] = {m:.4f} at x = {sweep.argmax:.4g}")


def test_ac09_derivatives(tables_1e6):
    worst = 0.0
    algebra = True
    for x in (1e2, 1e3, 1e4):
        rep = derivative_identity_check(x, fd_step(x), tables_1e6)
        worst = max(worst, *rep.fd_relative.values())
        algebra &= rep.eq14_coefficients_equal and rep.eq23_coefficients_equal
    for K in range(1, 64):
        c = derivative_coefficients(K, tables_1e6.mobius)
        algebra &= c["dpi"] == c["eq14"] and c["dtheta"] == c["eq23"]
    record("AC-9", algebra and worst <= 1e-6,
           f"max FD relative deviation {worst:.2e} (<= 1e-6); eq14/eq23 coefficient lists equal: {algebra}")


def test_ac10_decomposition(tables_1e8):
    t = tables_1e8
    grid = np.geomspace(2, 1e8, 50)
    additive = all(
        d.exact - d.regular - d.oscillatory == 0.0
        for kind in ("pi", "R", "theta", "psi") for d in (decompose(kind, float(x), t) for x in grid)
    )
    big = abs(decompose("psi", 1e8, t).oscillatory) / 1e8
    small = abs(decompose("psi", 1e4, t).oscillatory) / 1e4
    record("AC-10", additive and big < small,
           f"exact - reg - osc == 0 on 200 evaluations: {additive}; "
           f"|psi_osc|/x: {big:.2e} at 1e8 < {small:.2e} at 1e4")


def _running(values):
    """Naive left-to-right partial sums, prefixed with 0.0."""
    out, s = [0.0], 0.0
    for v in values:
        s += v
        out.append(s)
    return out


def test_ac11_oracles():
    N = 10**4
    td = primes_td(N)
    table = sieve_primes(N)
    ok = table.primes.tolist() == td
    mu = mobius_table(N)
    ok &= all(mu[n] == mobius_td(n) for n in range(1, N + 1))
    pw_values = prime_powers_double_loop(N)
    pw_bases = [next(p for p in td if _is_power_of(q, p)) for q in pw_values]
    theta_run = _running(math.log(p) for p in td)
    r_run = _running(math.log(p) / p for p in td)
    psi_run = _running(math.log(p) for p in pw_bases)
    mismatches = 0
    for x in np.arange(0, N + 0.5, 0.5):
        n = sum(1 for p in td if p <= x)
        m = sum(1 for q in pw_values if q <= x)
        mismatches += (pi_exact(x, table) != n
                       or theta_exact(x, table) != theta_run[n]
                       or r_exact(x, table) != r_run[n]
                       or psi_exact(x, table) != psi_run[m])
    ok &= mismatches == 0
    record("AC-11", ok, f"sieve, Moebius, pi/theta/psi/r vs brute force on [0, 1e4] step 0.5: "
           f"{mismatches} mismatches")


def _is_power_of(q, p):
    while q % p == 0:
        q //= p
    return q == 1
