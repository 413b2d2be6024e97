"""Alexander polynomials of torus knots and the Euler-characteristic identity."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InputError, MismatchDetected, NotCoprime
from .gspin import Spectrum
from .homology import euler_characteristic, local_homology


@dataclass(frozen=True)
class SymmetricLaurent:
    """a_0 + sum_{i>0} a_i (T^i + T^-i)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(a) for a in self.coeffs) or (0,)
        if len(c) > 1 and c[-1] == 0:
            raise InputError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def full(self) -> list[int]:
        """Coefficients of T^-D .. T^D."""
        return list(reversed(self.coeffs[1:])) + list(self.coeffs)


def _mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _one_minus_t(n: int) -> list[int]:
    return [1] + [0] * (n - 1) + [-1]


def _divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Integer polynomial long division (ascending coefficients), remainder must vanish."""
    num = list(num)
    lead = den[-1]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c, rem = divmod(num[i + len(den) - 1], lead)
        if rem:
            raise ArithmeticError("non-integral quotient")
        q[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("division left a remainder")
    return q


def alexander_torus_knot(p: int, q: int) -> SymmetricLaurent:
    if p < 2 or q < 2:
        raise InputError("torus knot parameters must be at least 2")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")
    num = _mul(_one_minus_t(1), _one_minus_t(p * q))
    den = _mul(_one_minus_t(p), _one_minus_t(q))
    poly = _divide_exact(num, den)
    top = (p - 1) * (q - 1) // 2
    assert len(poly) == 2 * top + 1
    return SymmetricLaurent(tuple(poly[top:]))


def torsion_sum(s: SymmetricLaurent) -> int:
    return sum(i * a for i, a in enumerate(s.coeffs) if i > 0)


def check_turaev(s: Spectrum, weight=2) -> int:
    """Euler characteristic of the local-system homology; must equal h^0."""
    chi = euler_characteristic(local_homology(s, weight))
    if chi != s.total_multiplicity:
        raise MismatchDetected(f"Euler characteristic {chi} != h^0 = {s.total_multiplicity}")
    return chi
