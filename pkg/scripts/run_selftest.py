#!/usr/bin/env python3
"""Cross-validation sweep: run every invariant suite exhaustively for n = 1..N.

Each suite pits one implementation route against an independent one (for
example, configuration-based arrow protection against mutate-and-compare
irreversibility, or the intrinsic validator against brute-force class
representatives).  Any violation is printed; the sweep exits nonzero if one
appears.  n = 4 takes seconds; n = 5 minutes (use --jobs and expect the
directed-agreement and protection suites to dominate).
"""

from __future__ import annotations

import argparse
import sys
import time

from cgk.census import ALL_PROPERTIES, cross_validate


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument(
        "--properties",
        nargs="*",
        default=None,
        metavar="NAME",
        help=f"subset of: {', '.join(ALL_PROPERTIES)}",
    )
    args = parser.parse_args()

    failed = False
    for n in range(1, args.max_n + 1):
        start = time.monotonic()
        report = cross_validate(n, properties=args.properties, jobs=args.jobs)
        status = "ok" if report.ok else f"{len(report.violations)} VIOLATIONS"
        print(f"n={n}: {status} ({time.monotonic() - start:.1f}s)")
        for name, count in report.checked:
            print(f"    {name}: {count} checks")
        for violation in report.violations:
            failed = True
            print(f"    {violation.prop}: {violation.subject}: {violation.detail}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
