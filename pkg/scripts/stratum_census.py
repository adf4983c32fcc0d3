#!/usr/bin/env python3
"""Census of Rauzy classes by stratum and component.

Enumerates every irreducible table up to a chosen number of symbols,
partitions them into classes, and tabulates class counts and sizes per
(stratum, component) pair, checking the expected count structure as it
goes.  Useful for eyeballing how the table grows::

    python scripts/stratum_census.py --max-d 6 --kind both
"""
import argparse
import sys
import time

from rauzy import PermKind, verify_main_theorem


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-d", type=int, default=6)
    parser.add_argument("--min-d", type=int, default=2)
    parser.add_argument("--kind", choices=["iet", "quad", "both"], default="both")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    kinds = {
        "iet": [PermKind.IET],
        "quad": [PermKind.QUADRATIC],
        "both": [PermKind.IET, PermKind.QUADRATIC],
    }[args.kind]

    all_ok = True
    for kind in kinds:
        for d in range(args.min_d, args.max_d + 1):
            start = time.perf_counter()
            report = verify_main_theorem(d, kind, workers=args.workers)
            elapsed = time.perf_counter() - start
            print(f"== {kind.value} d={d}  ({elapsed:.1f}s)")
            for g in report.groups:
                status = "ok" if g.ok else "FAIL"
                print(
                    f"  {g.stratum.text:>22} {g.label.value:>17}"
                    f"  classes={g.class_count} (r={g.r})"
                    f"  sizes={list(g.class_sizes)} {status}"
                )
            if not report.passed:
                all_ok = False
                print("  !! count structure violated")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
