"""G-spin character of the odd-order lift and the spectrum it determines.

The local contribution of a fixed point with rotation angle theta is
(i/2) csc(theta~), theta~ being the half angle with d * theta~ in 2 pi Z.
Writing theta~ = 2 pi c / d, the identity

    (i/2) csc(2 pi c / d) = -1 / (zeta^c - zeta^-c)

keeps the whole computation inside Q(zeta_d).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import Inconsistent, InputError, NonIntegralMultiplicity, NotAntiSymmetric
from .exactnum import CyclotomicNumber, check_order, conjugate, invert, root_power
from .linalg import solve
from .surface import RamificationData


@dataclass(frozen=True)
class SignedEigen:
    """n > 0: eigenvalue zeta^index with multiplicity n; n < 0: zeta^-index with multiplicity -n."""

    index: int
    n: int

    def __post_init__(self):
        if self.n == 0:
            raise InputError("signed multiplicity must be nonzero")


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues exp(i pi r) with multiplicities m, sorted by increasing |r|.

    ``order`` records where the spectrum came from (d, or 2 for the
    hyperelliptic involution, 0 when entered by hand).
    """

    entries: tuple[tuple[Fraction, int], ...]
    order: int = 0

    def __post_init__(self):
        entries = tuple((Fraction(r), int(m)) for r, m in self.entries)
        object.__setattr__(self, "entries", entries)
        prev = Fraction(0)
        for r, m in entries:
            if not 0 < abs(r) < 1:
                raise InputError(f"eigenvalue exponent {r} must satisfy 0 < |r| < 1")
            if m < 1:
                raise InputError(f"multiplicity {m} must be positive")
            if abs(r) <= prev:
                raise InputError("entries must have strictly increasing, distinct |r| (no conjugate pairs)")
            prev = abs(r)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple], order: int = 0) -> Spectrum:
        return cls(tuple(sorted(((Fraction(r), int(m)) for r, m in pairs), key=lambda e: abs(e[0]))), order)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def negated(self) -> Spectrum:
        return Spectrum(tuple((-r, m) for r, m in self.entries), self.order)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def _half_angle_index(d: int, e: int) -> int:
    b = e if e % 2 == 0 else e + d
    return b // 2


def local_term(d: int, e: int) -> CyclotomicNumber:
    check_order(d)
    if not 1 <= e <= d - 1:
        raise InputError(f"rotation exponent {e} not in 1..{d - 1}")
    c = _half_angle_index(d, e)
    return -invert(root_power(d, c) - root_power(d, -c))


def character(r: RamificationData) -> CyclotomicNumber:
    d = r.order
    chi = CyclotomicNumber.zero(d)
    cache: dict[int, CyclotomicNumber] = {}
    for e in r.rotations:
        if e not in cache:
            cache[e] = local_term(d, e)
        chi = chi + cache[e]
    return chi


def sine_basis(d: int) -> list[CyclotomicNumber]:
    """zeta^j - zeta^-j for j = 1..(d-1)/2."""
    return [root_power(d, j) - root_power(d, -j) for j in range(1, (d - 1) // 2 + 1)]


def solve_spectrum(chi: CyclotomicNumber) -> list[SignedEigen]:
    """Unique integers n_j with chi = sum n_j (zeta^j - zeta^-j); zeros dropped."""
    d = chi.order
    if conjugate(chi) != -chi:
        raise NotAntiSymmetric(f"character {chi!r} is not purely imaginary")
    basis = sine_basis(d)
    # all d-1 coordinate rows, an overdetermined but consistent system
    a = [[b.coeffs[i] for b in basis] for i in range(d - 1)]
    x = solve(a, chi.coeffs)
    if x is None:
        raise Inconsistent("character lies outside the span of zeta^j - zeta^-j")
    out = []
    for j, n in enumerate(x, start=1):
        if n.denominator != 1:
            raise NonIntegralMultiplicity(
                f"coefficient of zeta^{j} - zeta^-{j} is {n}; ramification data does not realize a spin action"
            )
        if n:
            out.append(SignedEigen(j, int(n)))
    return out


def spectrum_from_signed(d: int, eigens: Sequence[SignedEigen]) -> Spectrum:
    indices = [e.index for e in eigens]
    if len(set(indices)) != len(indices):
        raise InputError(f"repeated eigen index in {indices}")
    pairs = []
    for e in eigens:
        if not 1 <= e.index <= (d - 1) // 2:
            raise InputError(f"eigen index {e.index} not in 1..{(d - 1) // 2}")
        r0 = Fraction(2 * e.index, d)
        if r0 >= 1:
            r0 -= 2
        pairs.append((r0, e.n) if e.n > 0 else (-r0, -e.n))
    return Spectrum.from_pairs(pairs, order=d)


def character_of_spectrum(d: int, eigens: Sequence[SignedEigen]) -> CyclotomicNumber:
    chi = CyclotomicNumber.zero(d)
    for e in eigens:
        chi = chi + (root_power(d, e.index) - root_power(d, -e.index)) * e.n
    return chi
