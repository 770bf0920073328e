"""Residuals of the exact identities and the von Koch ratio on a log grid.

    python scripts/identity_sweep.py --xmax 1e7 --points 30
"""

import argparse

import numpy as np

from primereg.analysis import IDENTITIES, Tables, vonkoch_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--xmax", type=float, default=1e6)
    ap.add_argument("--points", type=int, default=25)
    args = ap.parse_args()
    tables = Tables.build(args.xmax)
    grid = np.geomspace(3, args.xmax, args.points)

    names = [k for k in IDENTITIES if k != "eq8a"]
    print(f"{'x':>12} " + " ".join(f"{n:>10}" for n in names))
    for x in grid:
        res = [IDENTITIES[n](float(x), tables).residual for n in names]
        print(f"{x:12.4e} " + " ".join(f"{r:10.2e}" for r in res))
    sweep = vonkoch_sweep(tables, 1e2, args.xmax, 50)
    print(f"max von Koch ratio on [1e2, {args.xmax:.0e}]: {sweep.max_ratio:.4f} at x = {sweep.argmax:.4g}")


if __name__ == "__main__":
    main()
