"""Print h0 distributions of theta characteristics on hyperelliptic curves, with enumeration timings.

    python scripts/hyperelliptic_table.py --max-genus 10
"""

import argparse
import time

from thetafloer.hyperelliptic import distribution, distribution_by_enumeration


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--max-genus", type=int, default=8)
    a = ap.parse_args()
    for g in range(2, a.max_genus + 1):
        t0 = time.perf_counter()
        enum = distribution_by_enumeration(g)
        dt = time.perf_counter() - t0
        agree = "ok" if enum == distribution(g) else "MISMATCH"
        row = " ".join(f"{h}:{c}" for h, c in sorted(enum.items()))
        print(f"g={g:<2} {row:<50} {agree} {dt:.3f}s")


if __name__ == "__main__":
    main()
