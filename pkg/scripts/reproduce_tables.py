"""Recompute the four reference tables and report any cell that differs.

    python scripts/reproduce_tables.py                # auto method per cell
    python scripts/reproduce_tables.py --method oracle
"""

from __future__ import annotations

import argparse
import sys
import time

from rmghw.cli import table_pretty
from rmghw.tables import FIXTURES, check_fixture, fixture_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*", default=sorted(FIXTURES))
    ap.add_argument("--method", choices=("auto", "formula", "oracle", "footprint"), default="auto")
    args = ap.parse_args()

    failed = 0
    for name in args.names:
        t0 = time.time()
        rows = fixture_table(name, args.method)
        bad = check_fixture(name, rows)
        print(f"## {name}  ({time.time() - t0:.2f}s, {'ok' if not bad else f'{len(bad)} mismatches'})")
        print(table_pretty(rows))
        for line in bad:
            print("  mismatch:", line)
        failed += bool(bad)
    return 2 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
