"""Theta characteristics of a hyperelliptic curve via subsets of Weierstrass points.

A theta characteristic corresponds to a subset T of the 2g+2 Weierstrass
points with |T| = g+1 mod 2, up to complement.  We store the smaller of T
and its complement (the one containing point 1 when |T| = g+1); then
h^0 = (g + 1 - |T|) / 2.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import GenusOutOfRange, InputError
from .floer import LocalSystem
from .gspin import Spectrum
from .homology import GradedModuleDecomp, local_homology, plain_homology

MAX_GENUS = 12


def _check_genus(g: int) -> None:
    if not isinstance(g, int) or not 2 <= g <= MAX_GENUS:
        raise GenusOutOfRange(f"genus must be in 2..{MAX_GENUS}, got {g!r}")


def canonical_subset(g: int, subset) -> tuple[int, ...]:
    n = 2 * g + 2
    t = frozenset(subset)
    if not t <= set(range(1, n + 1)):
        raise InputError(f"subset {sorted(t)} not inside 1..{n}")
    if len(t) % 2 != (g + 1) % 2:
        raise InputError(f"|T| = {len(t)} has the wrong parity for genus {g}")
    comp = frozenset(range(1, n + 1)) - t
    if len(comp) < len(t) or (len(comp) == len(t) and 1 in comp):
        t = comp
    return tuple(sorted(t))


@dataclass(frozen=True)
class ThetaClass:
    genus: int
    subset: tuple[int, ...]

    def __post_init__(self):
        _check_genus(self.genus)
        canon = canonical_subset(self.genus, self.subset)
        if canon != tuple(sorted(self.subset)):
            raise InputError(f"{self.subset} is not the canonical representative {canon}")
        object.__setattr__(self, "subset", canon)

    @classmethod
    def of(cls, g: int, subset) -> ThetaClass:
        return cls(g, canonical_subset(g, subset))


def enumerate_classes(g: int) -> list[ThetaClass]:
    _check_genus(g)
    n = 2 * g + 2
    out = []
    for size in range(g + 1, -1, -2):
        for t in combinations(range(1, n + 1), size):
            if size == g + 1 and 1 not in t:
                continue
            out.append(ThetaClass(g, t))
    return out


def h0(t: ThetaClass) -> int:
    return (t.genus + 1 - len(t.subset)) // 2


def distribution(g: int) -> dict[int, int]:
    """Count of theta characteristics by h^0.

    Only subset sizes matter, so this counts binomially rather than listing.
    """
    _check_genus(g)
    from math import comb

    n = 2 * g + 2
    out: Counter = Counter()
    for size in range(g + 1, -1, -2):
        cnt = comb(n, size) // (2 if size == g + 1 else 1)
        out[(g + 1 - size) // 2] += cnt
    return dict(sorted(out.items()))


def distribution_by_enumeration(g: int) -> dict[int, int]:
    return dict(sorted(Counter(h0(t) for t in enumerate_classes(g)).items()))


def spectrum_of_class(t: ThetaClass) -> Spectrum:
    """The lift acts on H^0(L) as multiplication by i, i.e. r = 1/2."""
    m = h0(t)
    return Spectrum(((Fraction(1, 2), m),) if m else (), order=2)


def floer_of_class(t: ThetaClass, ls: LocalSystem | None = None) -> GradedModuleDecomp:
    ls = ls or LocalSystem.trivial()
    s = spectrum_of_class(t)
    if ls.is_generic:
        return local_homology(s, ls.weight)
    return plain_homology(s)
