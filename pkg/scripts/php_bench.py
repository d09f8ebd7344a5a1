#!/usr/bin/env python3
"""Run the pigeonhole benchmark sweep and print a TSV table.

Every unsat witness run verifies the whole evidence pipeline: model eval or
DPLL check, translation to resolution, resolution check, and the size bound.

Usage: python scripts/php_bench.py [--php-max K] [--mode witness|decide|both]
"""

import argparse
import sys

from dpllkit.bench import TSV_HEADER, run_php_bench


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--php-max", type=int, default=5,
                    help="largest k for PHP(k,k) and PHP(k+1,k) (default 5)")
    ap.add_argument("--mode", choices=("witness", "decide", "both"), default="both")
    args = ap.parse_args(argv)

    modes = ("witness", "decide") if args.mode == "both" else (args.mode,)
    print(TSV_HEADER)
    for record in run_php_bench(args.php_max, modes):
        print(record.to_tsv(), flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
