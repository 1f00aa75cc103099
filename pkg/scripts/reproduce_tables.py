#!/usr/bin/env python3
"""Regenerate the six reference tables and time each case.

Usage: python scripts/reproduce_tables.py [--digits N] [--output text|csv]
"""

import argparse
import sys
import time

from hypasym.cli import TABLE_CASES, cmd_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=60)
    ap.add_argument("--output", choices=("text", "csv"), default="text")
    args = ap.parse_args()
    total = 0.0
    for case in sorted(TABLE_CASES):
        t0 = time.time()
        cmd_table([case], args.digits, args.output, sys.stdout)
        dt = time.time() - t0
        total += dt
        print(f"  [case {case} took {dt:.2f}s]", file=sys.stderr)
    print(f"total: {total:.2f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
