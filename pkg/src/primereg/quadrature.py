"""Quadrature for the logarithmic integral in both conventions."""

from __future__ import annotations

import math
import warnings

import numpy as np
from scipy import integrate

# per-piece relative floor; QUADPACK refuses to aim below ~50 * machine eps
_EPSREL = 5e-14


def inv_log(t):
    return 1.0 / np.log(t)


def adaptive(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Adaptive Gauss-Kronrod on [a, b]; returns (value, error estimate)."""
    if a == b:
        return 0.0, 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(f, a, b, epsabs=tol, epsrel=_EPSREL, limit=200)
    return val, err


def geometric_pieces(a: float, b: float, ratio: float = 2.0) -> list[float]:
    """Breakpoints a, a*ratio, a*ratio**2, ..., b."""
    pts = [a]
    while pts[-1] * ratio < b:
        pts.append(pts[-1] * ratio)
    pts.append(b)
    return pts


def integrate_geometric(f, a: float, b: float, tol: float, ratio: float = 2.0) -> tuple[float, float]:
    """Integrate ``f`` over [a, b] on geometrically growing panels.

    The integrands here vary on a scale proportional to t, so each panel of a
    geometric partition is resolved by a handful of Kronrod rules.
    """
    if b < a:
        raise ValueError("integrate_geometric needs a <= b")
    if a == b:
        return 0.0, 0.0
    pts = geometric_pieces(a, b, ratio)
    share = tol / (len(pts) - 1)
    vals, errs = zip(*(adaptive(f, lo, hi, share) for lo, hi in zip(pts, pts[1:])))
    return math.fsum(vals), math.fsum(errs)


def richardson_odd(values: list[float], ratio: float = 2.0) -> tuple[float, float]:
    """Extrapolate ``values[j] = F(eps0 / ratio**j)`` to eps -> 0.

    Assumes F(eps) = L + a1*eps + a3*eps**3 + a5*eps**5 + ..., i.e. only odd
    powers, which holds for symmetric excision around a simple pole.
    Returns (estimate, |difference of the two best estimates|).
    """
    table = [list(values)]
    power = 1
    while len(table[-1]) > 1:
        prev = table[-1]
        c = ratio**power
        table.append([(c * prev[j + 1] - prev[j]) / (c - 1) for j in range(len(prev) - 1)])
        power += 2
    best = table[-1][0]
    second = table[-2][-1]
    return best, abs(best - second)


_PV_SPLIT = 1.5


def _pv_core(eps: float, upper: float, tol: float) -> float:
    left, _ = adaptive(inv_log, 0.0, 1.0 - eps, tol)
    right, _ = adaptive(inv_log, 1.0 + eps, upper, tol)
    return left + right


def principal_value_li(x: float, tol: float, eps0: float = 0.05, levels: int = 5) -> tuple[float, float]:
    """PV of int_0^x dt / log t with symmetric excision of (1 - eps, 1 + eps).

    The excised integrals are extrapolated to eps -> 0; the remainder beyond
    ``_PV_SPLIT`` is integrated directly.  Returns (value, error estimate).
    """
    upper = min(x, _PV_SPLIT)
    eps0 = min(eps0, (upper - 1.0) / 2)
    seq = [_pv_core(eps0 / 2**j, upper, tol * 1e-3) for j in range(levels)]
    core, core_err = richardson_odd(seq)
    if x <= _PV_SPLIT:
        return core, core_err
    tail, tail_err = integrate_geometric(inv_log, _PV_SPLIT, x, tol, ratio=3.0)
    return core + tail, core_err + tail_err
