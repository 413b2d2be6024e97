"""Compare chain-level homology with the closed form on random spectra and report timing.

    python scripts/random_crosscheck.py --n 1000 --seed 0
"""

import argparse
import random
import time
from dataclasses import dataclass

from thetafloer.acceptance import random_spectrum
from thetafloer.homology import cross_check


@dataclass(frozen=True)
class CrossCheckConfig:
    n: int = 500
    seed: int = 0
    max_k: int = 6
    max_m: int = 5
    weight: int = 2


def run(cfg: CrossCheckConfig) -> list:
    rng = random.Random(cfg.seed)
    bad = []
    for _ in range(cfg.n):
        s = random_spectrum(rng, cfg.max_k, cfg.max_m)
        rep = cross_check(s, weight=cfg.weight, strict=False)
        if not rep.passed:
            bad.append((s, {k: v for k, v in rep.checks.items() if not v}))
    return bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    for f in ("n", "seed", "max_k", "max_m", "weight"):
        ap.add_argument(f"--{f.replace('_', '-')}", type=int, default=getattr(CrossCheckConfig, f))
    cfg = CrossCheckConfig(**vars(ap.parse_args()))
    t0 = time.perf_counter()
    bad = run(cfg)
    dt = time.perf_counter() - t0
    print(f"{cfg.n} spectra, {len(bad)} mismatches, {dt:.1f}s ({1000 * dt / cfg.n:.1f} ms each)")
    for s, checks in bad[:10]:
        print("  ", s.entries, checks)


if __name__ == "__main__":
    main()
