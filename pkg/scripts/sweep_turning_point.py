#!/usr/bin/env python3
"""Scan the turning-point neighborhood and emit a CSV profile.

The default window brackets y = 1 - alpha^2 symmetrically at width 10 Delta,
where Delta = alpha^(4/3) / r^(2/3 - delta) is the regime half-width.

Usage: python scripts/sweep_turning_point.py --r 100 --alpha 0.1 [--steps 201]
"""

import argparse
import sys

from hypasym.cli import RunConfig, cmd_sweep
from hypasym.zetamap import DEFAULT_DELTA, regime_width


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=float, default=100.0)
    ap.add_argument("--alpha", type=float, default=0.1)
    ap.add_argument("--steps", type=int, default=201)
    ap.add_argument("--delta", type=float, default=DEFAULT_DELTA)
    ap.add_argument("--halfwidths", type=float, default=10.0,
                    help="window half-size in units of the regime width")
    args = ap.parse_args()

    turn = 1.0 - args.alpha * args.alpha
    w = regime_width(args.r, args.alpha, args.delta) * args.halfwidths
    y_min = max(turn - w, 1e-6)
    y_max = min(turn + w, 1.0 - 1e-9)
    cfg = RunConfig("sweep", args.r, args.alpha, delta=args.delta)
    return cmd_sweep(cfg, y_min, y_max, args.steps, True, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
