"""Measure projector size and build cost as the strand count grows.

Prints one row per m: canonical term count, wall-clock build time, and
the rank of the weight map (2 for extremal, m+1 for Jones-Wenzl).

Usage: python3 scripts/projector_growth.py [--max M] [--kind extremal|jw]
"""

import argparse
import time

from atlq import extremal, jones_wenzl, phi


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--max", type=int, default=6)
    parser.add_argument("--kind", choices=["extremal", "jw"], default="extremal")
    args = parser.parse_args()
    build = extremal if args.kind == "extremal" else jones_wenzl

    print(f"{'m':>3} {'terms':>8} {'build s':>9} {'phi s':>8} {'rank':>5}")
    for m in range(1, args.max + 1):
        t0 = time.perf_counter()
        proj = build(m)
        t1 = time.perf_counter()
        rank = phi(proj).rank()
        t2 = time.perf_counter()
        print(
            f"{m:>3} {len(proj.terms):>8} {t1 - t0:>9.3f} "
            f"{t2 - t1:>8.3f} {rank:>5}"
        )


if __name__ == "__main__":
    main()
