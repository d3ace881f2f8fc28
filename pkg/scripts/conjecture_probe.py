"""Probe the k+1 line bound: search every candidate with up to k+2 lines.

    python3 scripts/conjecture_probe.py --k-min 3 --k-max 7
"""

import argparse
import time

from arrangements.enumeration import verify_conjecture


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-min", type=int, default=3)
    ap.add_argument("--k-max", type=int, default=7)
    ap.add_argument("--extra-lines", type=int, default=2, help="search up to k + this many lines")
    args = ap.parse_args()
    for k in range(args.k_min, args.k_max + 1):
        t0 = time.perf_counter()
        rep = verify_conjecture(k, k + args.extra_lines)
        print(rep)
        print(f"({time.perf_counter() - t0:.2f}s)\n")


if __name__ == "__main__":
    main()
