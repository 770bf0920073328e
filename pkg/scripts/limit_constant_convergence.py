"""Certified intervals for lim R(x) as the direct prime-sum cutoff grows.

    python scripts/limit_constant_convergence.py --max-exp 8
"""

import argparse
import time

from primereg.config import ApproxConfig
from primereg.constants import LIMIT_CONSTANT_REPORTED, limit_constant, limit_constant_accelerated
from primereg.sieve import sieve_primes


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-exp", type=int, default=8)
    args = ap.parse_args()

    t0 = time.perf_counter()
    primes = sieve_primes(10**args.max_exp)
    print(f"sieved {len(primes)} primes in {time.perf_counter() - t0:.1f}s")
    acc = limit_constant_accelerated()
    print(f"{'cutoff':>8} {'lower':>20} {'upper':>20} {'radius':>10}  contains reported")
    for e in range(2, args.max_exp + 1):
        lc = limit_constant(primes, ApproxConfig(prime_sum_cutoff=10**e))
        print(f"{'1e%d' % e:>8} {lc.lower:20.15f} {lc.upper:20.15f} {lc.radius:10.2e}  "
              f"{lc.contains(LIMIT_CONSTANT_REPORTED)}")
    print(f"accelerated: {acc.value:.17f} +/- {acc.radius:.1e}")


if __name__ == "__main__":
    main()
