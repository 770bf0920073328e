"""Print exact vs regular parts of pi, theta, psi and R at powers of ten.

    python scripts/regular_parts_table.py --max-exp 7
"""

import argparse

from primereg import approx
from primereg.analysis import Tables, decompose


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-exp", type=int, default=7)
    args = ap.parse_args()
    tables = Tables.build(10**args.max_exp)

    print(f"{'x':>6} {'pi':>9} {'pi-Ri':>9} {'pi-Li':>9} {'pi-Leg':>9} "
          f"{'theta_osc/x':>12} {'psi_osc/x':>12} {'R_osc':>11}")
    for e in range(2, args.max_exp + 1):
        x = float(10**e)
        pi = decompose("pi", x, tables)
        li = approx.li_lower2(x, tables.cfg)
        leg = approx.legendre_approx(x)
        th, ps, R = (decompose(k, x, tables) for k in ("theta", "psi", "R"))
        print(f"{'1e%d' % e:>6} {int(pi.exact):9d} {pi.oscillatory:9.2f} {pi.exact - li:9.2f} "
              f"{pi.exact - leg:9.1f} {th.oscillatory / x:12.3e} {ps.oscillatory / x:12.3e} "
              f"{R.oscillatory:11.3e}")


if __name__ == "__main__":
    main()
