"""Sweep signed order-5 ramification data and tabulate the local Floer modules.

    python scripts/order5_sweep.py --max 4
"""

import argparse
from dataclasses import dataclass

from thetafloer.acceptance import order5_rotations
from thetafloer.gspin import character, solve_spectrum, spectrum_from_signed
from thetafloer.homology import closed_form, local_homology


@dataclass(frozen=True)
class SweepConfig:
    max_mult: int = 4
    weight: int = 2


def sweep(cfg: SweepConfig):
    rng = [x for x in range(-cfg.max_mult, cfg.max_mult + 1) if x]
    for m in rng:
        for n in rng:
            p, q = -m - 2 * n, 2 * m - n
            r = order5_rotations(p, q)
            s = spectrum_from_signed(5, solve_spectrum(character(r)))
            dec = local_homology(s, cfg.weight)
            cf = closed_form(s)
            yield m, n, p, q, s, dec, cf


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--max", type=int, default=SweepConfig.max_mult)
    ap.add_argument("--weight", type=int, default=SweepConfig.weight)
    a = ap.parse_args()
    print(f"{'m':>3} {'n':>3} {'p':>4} {'q':>4}  spectrum                 lengths    c_L")
    for m, n, p, q, s, dec, cf in sweep(SweepConfig(a.max, a.weight)):
        spec = ", ".join(f"({r},{k})" for r, k in s.entries)
        print(f"{m:>3} {n:>3} {p:>4} {q:>4}  {spec:<24} {str(dec.cyclic_lengths):<10} {cf.c_L}")


if __name__ == "__main__":
    main()
