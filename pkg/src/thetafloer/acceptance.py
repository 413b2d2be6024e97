"""Exit criteria, runnable from pytest (tests/test_acceptance.py) and ``thetafloer selftest``.

Every check is exact; no tolerances are involved.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Iterator

from .errors import NonIntegralMultiplicity
from .exactnum import root_power
from .gspin import (
    SignedEigen,
    Spectrum,
    character,
    character_of_spectrum,
    local_term,
    solve_spectrum,
    spectrum_from_signed,
)
from .homology import (
    EVEN,
    ODD,
    closed_form,
    local_homology,
    plain_homology,
)
from .hyperelliptic import distribution_by_enumeration
from .surface import RamificationData
from .torsion import alexander_torus_knot, check_turaev, torsion_sum

PRIMES = (3, 5, 7, 11, 13, 17, 19, 23)


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}  {self.detail}"


@dataclass
class Options:
    truncation: int | None = None
    weight: Fraction = Fraction(2)


# -- input generators, shared so the torsion criterion can revisit every spectrum --


def random_spectrum(rng: random.Random, max_k=6, max_m=5, denominators=(3, 5, 7, 11, 13)) -> Spectrum:
    k = rng.randint(0, max_k)
    pool = sorted({Fraction(a, d) for d in denominators for a in range(1, d)})
    absr = rng.sample(pool, k)
    return Spectrum.from_pairs((r * rng.choice((1, -1)), rng.randint(1, max_m)) for r in absr)


def random_spectra(seed: int, n: int, **kw) -> list[Spectrum]:
    rng = random.Random(seed)
    return [random_spectrum(rng, **kw) for _ in range(n)]


def order3_rotations(n_plus: int, n_minus: int) -> RamificationData:
    return RamificationData(3, (1,) * n_plus + (2,) * n_minus)


def order5_rotations(p: int, q: int) -> RamificationData:
    """p (signed) points of rotation 2pi/5, q (signed) of rotation 4pi/5."""
    rots = (1 if p > 0 else 4,) * abs(p) + (2 if q > 0 else 3,) * abs(q)
    return RamificationData(5, rots)


def worked_example_spectra(max_m=5) -> Iterator[tuple[str, Spectrum]]:
    r1, r2 = Fraction(1, 3), Fraction(2, 3)
    for m1 in range(1, max_m + 1):
        yield "single", Spectrum.from_pairs([(r1, m1)])
        yield "single-conj", Spectrum.from_pairs([(-r1, m1)])
        for m2 in range(1, max_m + 1):
            yield "same-sign", Spectrum.from_pairs([(r1, m1), (r2, m2)])
            yield "rising", Spectrum.from_pairs([(-r1, m1), (r2, m2)])
            yield "falling", Spectrum.from_pairs([(r1, m1), (-r2, m2)])


def order5_spectra() -> Iterator[tuple[int, int, Spectrum]]:
    for m in range(-4, 5):
        for n in range(-4, 5):
            if m and n:
                eig = solve_spectrum(character(order5_rotations(-m - 2 * n, 2 * m - n)))
                yield m, n, spectrum_from_signed(5, eig)


# -- criteria --------------------------------------------------------------


def crit_order3(opt: Options) -> CriterionResult:
    bad = []
    checked = 0
    for n_plus in range(13):
        for n_minus in range(13 - n_plus):
            r = order3_rotations(n_plus, n_minus)
            diff = n_plus - n_minus
            if diff % 3:
                try:
                    solve_spectrum(character(r))
                    bad.append((n_plus, n_minus, "no error"))
                except NonIntegralMultiplicity:
                    pass
                continue
            s = spectrum_from_signed(3, solve_spectrum(character(r)))
            loc = local_homology(s, opt.weight, opt.truncation)
            n = abs(diff) // 3
            want = [n] if n else []
            if loc.cyclic_lengths != want or loc.towers:
                bad.append((n_plus, n_minus, loc.cyclic_lengths))
            checked += 1
    return CriterionResult("order3_cyclic_length", not bad, {"divisible_cases": checked, "failures": bad})


def crit_order5_basis(opt: Options) -> CriterionResult:
    a = root_power(5, 1) - root_power(5, 4)
    b = root_power(5, 2) - root_power(5, 3)
    first = local_term(5, 1) == a * Fraction(-1, 5) + b * Fraction(-2, 5)
    second = local_term(5, 2) == a * Fraction(2, 5) + b * Fraction(-1, 5)
    return CriterionResult("order5_basis_expansion", first and second, {"rotation_1": first, "rotation_2": second})


def crit_order5_realization(opt: Options) -> CriterionResult:
    bad = []
    for m, n, s in order5_spectra():
        r_a, r_b = Fraction(2, 5) * (1 if m > 0 else -1), Fraction(4, 5) * (1 if n > 0 else -1)
        if s != Spectrum.from_pairs([(r_a, abs(m)), (r_b, abs(n))], order=5):
            bad.append((m, n, "spectrum"))
            continue
        loc = local_homology(s, opt.weight, opt.truncation)
        if (m > 0) == (n > 0):
            ok = loc.cyclic_lengths == [abs(m) + abs(n)]
        else:
            ok = loc.cyclic_lengths == sorted([abs(m), abs(n)])
            tops = {c.top for c in loc.cyclic}
            bottoms = {c.bottom for c in loc.cyclic}
            # r_1 < 0 < r_2 aligns tops; r_1 > 0 > r_2 aligns bottoms
            ok = ok and (len(tops) == 1 if m < 0 else len(bottoms) == 1)
        if not ok:
            bad.append((m, n, [(c.length, str(c.top)) for c in loc.cyclic]))
    return CriterionResult("order5_realization", not bad, {"failures": bad})


def _odd_bottom_shift(plain) -> Fraction:
    """Shift putting the odd tower's bottom at 0, the layout used in the worked examples."""
    (odd,) = [t for t in plain.towers if t.parity == ODD]
    return -odd.bottom


def crit_worked_examples(opt: Options) -> CriterionResult:
    bad = []
    for name, s in worked_example_spectra():
        ms = [m for _, m in s.entries]
        big, small = max(ms), min(ms)
        delta = closed_form(s).Delta_L
        plain = plain_homology(s, opt.truncation)
        loc = local_homology(s, opt.weight, opt.truncation)
        towers = sorted((t.bottom, t.parity) for t in plain.towers)
        ok = towers == sorted([(Fraction(-1), ODD), (Fraction(-2 * delta), EVEN)])
        if name in ("single", "single-conj", "same-sign"):
            ok = ok and delta == sum(ms) and not plain.cyclic and loc.cyclic_lengths == [sum(ms)]
        else:
            ok = ok and delta == big and [c.length for c in plain.cyclic] == [small]
            ok = ok and loc.cyclic_lengths == sorted([big, small])
            even_bottom = Fraction(-2 * delta)
            if name == "rising":
                shift = _odd_bottom_shift(plain)
                ok = ok and plain.cyclic[0].top + shift == -1
                ok = ok and even_bottom + shift == 1 - 2 * big
                ok = ok and len({c.top for c in loc.cyclic}) == 1
            else:
                ok = ok and plain.cyclic[0].bottom == even_bottom
                ok = ok and len({c.bottom for c in loc.cyclic}) == 1
        if not ok:
            bad.append((name, [str(r) for r, _ in s.entries], ms))
    return CriterionResult("worked_examples", not bad, {"failures": bad})


def crit_rank_laws(opt: Options, n: int = 500) -> CriterionResult:
    bad = []
    rng = random.Random(7)
    for idx, s in enumerate(random_spectra(2, n)):
        cf = closed_form(s)
        loc = local_homology(s, opt.weight, opt.truncation)
        plain = plain_homology(s, opt.truncation)
        ok = (
            loc.dimension == cf.h0
            and len(loc.cyclic) == cf.local_rank
            and len(plain.cyclic) == cf.reduced_rank
            and all(c.parity == EVEN for c in loc.cyclic)
        )
        base_n = opt.truncation or s.total_multiplicity + 2
        ok = ok and local_homology(s, opt.weight, base_n + 3) == loc
        ok = ok and plain_homology(s, base_n + 3) == plain
        for w in (2, 3, 5):
            if w != opt.weight:
                ok = ok and local_homology(s, w, opt.truncation) == loc
        n_edges = max(4 * s.k, 2)
        ok = ok and local_homology(s, opt.weight, opt.truncation, rng.randrange(n_edges)) == loc
        if not ok:
            bad.append(idx)
    return CriterionResult("rank_and_grading_laws", not bad, {"spectra": n, "failures": bad})


def crit_hyperelliptic(opt: Options) -> CriterionResult:
    bad = []
    timings = {}
    for g in range(2, 9):
        t0 = time.perf_counter()
        dist = distribution_by_enumeration(g)
        timings[g] = round(time.perf_counter() - t0, 3)
        want = {0: comb(2 * g + 1, g)}
        for w in range(1, g + 1, 2):
            want[(w + 1) // 2] = comb(2 * g + 2, g - w)
        if dist != want or sum(dist.values()) != 4**g:
            bad.append(g)
    ok = not bad and timings[8] < 10
    return CriterionResult("hyperelliptic_counts", ok, {"failures": bad, "seconds_g8": timings[8]})


def crit_roundtrip(opt: Options) -> CriterionResult:
    rng = random.Random(11)
    bad = []
    for d in PRIMES:
        half = (d - 1) // 2
        for _ in range(100):
            ns = [rng.randint(-10, 10) for _ in range(half)]
            eig = [SignedEigen(j, n) for j, n in enumerate(ns, start=1) if n]
            if solve_spectrum(character_of_spectrum(d, eig)) != eig:
                bad.append((d, ns))
    return CriterionResult("solver_roundtrip", not bad, {"failures": bad})


def suite_spectra() -> Iterator[Spectrum]:
    """Every spectrum exercised by the other criteria."""
    for n_plus in range(13):
        for n_minus in range(13 - n_plus):
            if (n_plus - n_minus) % 3 == 0:
                yield spectrum_from_signed(3, solve_spectrum(character(order3_rotations(n_plus, n_minus))))
    for _, _, s in order5_spectra():
        yield s
    for _, s in worked_example_spectra():
        yield s
    yield from random_spectra(2, 500)
    for s in random_spectra(3, 200):
        yield s
        yield s.negated()


def crit_torsion(opt: Options) -> CriterionResult:
    a = alexander_torus_knot(2, 3)
    trefoil = a.coeffs == (-1, 1) and torsion_sum(a) == 1
    degrees_ok = all(
        alexander_torus_knot(p, q).degree == (p - 1) * (q - 1) // 2
        for p in range(2, 11)
        for q in range(2, 11)
        if gcd(p, q) == 1
    )
    seen = set()
    bad = []
    for s in suite_spectra():
        if s.entries in seen:
            continue
        seen.add(s.entries)
        if check_turaev(s, opt.weight) != s.total_multiplicity:
            bad.append(s.entries)
    ok = trefoil and degrees_ok and not bad
    return CriterionResult(
        "torsion", ok, {"trefoil": trefoil, "degrees": degrees_ok, "spectra_checked": len(seen), "failures": bad}
    )


def crit_negation(opt: Options) -> CriterionResult:
    bad = []
    for idx, s in enumerate(random_spectra(3, 200)):
        a = local_homology(s, opt.weight, opt.truncation).cyclic_lengths
        b = local_homology(s.negated(), opt.weight, opt.truncation).cyclic_lengths
        if a != b:
            bad.append(idx)
    return CriterionResult("negation_symmetry", not bad, {"failures": bad})


CRITERIA: dict[str, Callable[[Options], CriterionResult]] = {
    "order3_cyclic_length": crit_order3,
    "order5_basis_expansion": crit_order5_basis,
    "order5_realization": crit_order5_realization,
    "worked_examples": crit_worked_examples,
    "rank_and_grading_laws": crit_rank_laws,
    "hyperelliptic_counts": crit_hyperelliptic,
    "solver_roundtrip": crit_roundtrip,
    "torsion": crit_torsion,
    "negation_symmetry": crit_negation,
}


def run_all(truncation: int | None = None, weight=2) -> list[CriterionResult]:
    opt = Options(truncation, Fraction(weight))
    return [fn(opt) for fn in CRITERIA.values()]
