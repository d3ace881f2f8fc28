"""Regenerate the committed catalog: catalog/k<k>/ for k = 2..7.

Each directory holds one arrangement file, one analysis report and one SVG
per incidence class, plus catalog_summary.txt.

    python3 scripts/regenerate_catalog.py [--out catalog] [--k-max 7]
"""

import argparse
import time
from pathlib import Path

from arrangements.cli import write_catalog
from arrangements.enumeration import enumerate_arrangements

ROOT = Path(__file__).resolve().parent.parent


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(ROOT / "catalog"))
    ap.add_argument("--k-min", type=int, default=2)
    ap.add_argument("--k-max", type=int, default=7)
    args = ap.parse_args()
    for k in range(args.k_min, args.k_max + 1):
        t0 = time.perf_counter()
        cat = enumerate_arrangements(k)
        write_catalog(cat, Path(args.out) / f"k{k}", svg=True)
        print(
            f"k={k}: {len(cat.entries)} entries, {len(cat.refuted)} refuted, "
            f"{len(cat.undecided)} undecided ({time.perf_counter() - t0:.2f}s)"
        )


if __name__ == "__main__":
    main()
