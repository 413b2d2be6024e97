"""Exact arithmetic in the cyclotomic field Q(zeta_d), d an odd prime.

Elements are stored in the power basis 1, zeta, ..., zeta^(d-2), so the
only reduction rule needed is zeta^(d-1) = -(1 + zeta + ... + zeta^(d-2)).
Rationals are plain ``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DivisionByZero, InputError, OrderMismatch
from .linalg import solve


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def check_order(d: int) -> int:
    if not isinstance(d, int) or d < 3 or d % 2 == 0 or not is_prime(d):
        raise InputError(f"order must be an odd prime, got {d!r}")
    return d


def _reduce(d: int, poly: dict[int, Fraction] | list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce sum c_e zeta^e (any integer exponents) to power-basis coefficients."""
    full = [Fraction(0)] * d
    items = poly.items() if isinstance(poly, dict) else enumerate(poly)
    for e, c in items:
        full[e % d] += c
    top = full[d - 1]
    return tuple(c - top for c in full[: d - 1])


@dataclass(frozen=True)
class CyclotomicNumber:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order - 1:
            raise InputError(
                f"expected {self.order - 1} coefficients for order {self.order}, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, d: int, coeffs: Iterable) -> CyclotomicNumber:
        return cls(check_order(d), tuple(Fraction(c) for c in coeffs))

    @classmethod
    def zero(cls, d: int) -> CyclotomicNumber:
        return cls(d, (Fraction(0),) * (d - 1))

    @classmethod
    def rational(cls, d: int, q) -> CyclotomicNumber:
        return cls(d, (Fraction(q),) + (Fraction(0),) * (d - 2))

    def _check(self, other: CyclotomicNumber) -> None:
        if not isinstance(other, CyclotomicNumber):
            raise TypeError(f"cannot combine CyclotomicNumber with {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def _coerce(self, other) -> CyclotomicNumber:
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.order, other)
        self._check(other)
        return other

    def __add__(self, other) -> CyclotomicNumber:
        other = self._coerce(other)
        return CyclotomicNumber(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> CyclotomicNumber:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CyclotomicNumber:
        return self._coerce(other) - self

    def __mul__(self, other) -> CyclotomicNumber:
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, tuple(a * other for a in self.coeffs))
        self._check(other)
        d = self.order
        prod = [Fraction(0)] * (2 * d - 3)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        return CyclotomicNumber(d, _reduce(d, prod))

    __rmul__ = __mul__

    def __truediv__(self, other) -> CyclotomicNumber:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        return self * invert(other)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"CyclotomicNumber({self.order}, ({terms}))"

    def __complex__(self) -> complex:
        # debug-only; nothing in the pipeline relies on this
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z**e for e, c in enumerate(self.coeffs))


def root_power(d: int, e: int) -> CyclotomicNumber:
    """zeta^e in the power basis."""
    check_order(d)
    return CyclotomicNumber(d, _reduce(d, {e: Fraction(1)}))


def add(x: CyclotomicNumber, y: CyclotomicNumber) -> CyclotomicNumber:
    return x + y


def sub(x: CyclotomicNumber, y: CyclotomicNumber) -> CyclotomicNumber:
    return x - y


def mul(x: CyclotomicNumber, y: CyclotomicNumber) -> CyclotomicNumber:
    return x * y


def multiplication_matrix(x: CyclotomicNumber) -> list[list[Fraction]]:
    """Matrix (rows = output coefficients) of y -> x*y in the power basis."""
    d = x.order
    cols = [(x * root_power(d, j)).coeffs for j in range(d - 1)]
    return [[cols[j][i] for j in range(d - 1)] for i in range(d - 1)]


def invert(x: CyclotomicNumber) -> CyclotomicNumber:
    """Multiplicative inverse, by solving the (d-1)x(d-1) system x*y = 1."""
    if x.is_zero():
        raise DivisionByZero("cannot invert zero")
    d = x.order
    one = root_power(d, 0).coeffs
    y = solve(multiplication_matrix(x), one)
    return CyclotomicNumber(d, tuple(y))


def conjugate(x: CyclotomicNumber) -> CyclotomicNumber:
    """Image under zeta -> zeta^-1."""
    d = x.order
    return CyclotomicNumber(d, _reduce(d, {-e: c for e, c in enumerate(x.coeffs)}))
