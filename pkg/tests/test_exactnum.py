import cmath
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from thetafloer.errors import DivisionByZero, InputError, OrderMismatch
from thetafloer.exactnum import CyclotomicNumber, add, conjugate, invert, mul, root_power, sub

from strategies import PRIMES, cyclotomic


def cn(d, *c):
    return CyclotomicNumber.from_coeffs(d, c)


def sympy_reduce(d, poly_coeffs):
    """Reduce a polynomial in zeta modulo the d-th cyclotomic polynomial via sympy."""
    z = sympy.Symbol("z")
    p = sum(sympy.Rational(c.numerator, c.denominator) * z**i for i, c in enumerate(poly_coeffs))
    r = sympy.Poly(sympy.rem(p, sympy.cyclotomic_poly(d, z), z), z)
    out = [F(0)] * (d - 1)
    for (i,), c in r.terms():
        out[i] = F(int(c.p), int(c.q))
    return tuple(out)


def test_root_power_examples():
    assert root_power(3, 0).coeffs == (1, 0)
    assert root_power(3, 2).coeffs == (-1, -1)
    assert root_power(5, 7).coeffs == (0, 0, 1, 0)
    assert root_power(7, -1) == root_power(7, 6)


def test_arithmetic_examples():
    x = cn(3, 1, 2)
    assert mul(x, x).coeffs == (-3, 0)
    z = root_power(5, 1)
    assert add(z, conjugate(z)).coeffs == (-1, 0, -1, -1)
    assert invert(x).coeffs == (F(-1, 3), F(-2, 3))
    assert invert(cn(3, 2, 0)).coeffs == (F(1, 2), 0)
    assert conjugate(z).coeffs == (-1, -1, -1, -1)


def test_order_mismatch_and_zero():
    with pytest.raises(OrderMismatch):
        add(root_power(3, 1), root_power(5, 1))
    with pytest.raises(DivisionByZero):
        invert(CyclotomicNumber.zero(7))
    with pytest.raises(InputError):
        root_power(9, 1)


@pytest.mark.parametrize("d", PRIMES)
def test_roots_of_unity_invert(d):
    for e in range(d):
        assert invert(root_power(d, e)) == root_power(d, -e)


@given(cyclotomic(), st.data())
def test_mul_matches_sympy(x, data):
    y = data.draw(cyclotomic(x.order))
    full = [F(0)] * (2 * x.order)
    for i, a in enumerate(x.coeffs):
        for j, b in enumerate(y.coeffs):
            full[i + j] += a * b
    assert mul(x, y).coeffs == sympy_reduce(x.order, full)


@given(cyclotomic())
def test_field_axioms(x):
    d = x.order
    one = root_power(d, 0)
    assert mul(x, one) == x
    assert sub(x, x).is_zero
    assert conjugate(conjugate(x)) == x
    if not x.is_zero:
        assert mul(x, invert(x)) == one


@given(cyclotomic())
def test_complex_embedding_agrees(x):
    d = x.order
    zeta = cmath.exp(2j * cmath.pi / d)
    approx = sum(float(c) * zeta**i for i, c in enumerate(x.coeffs))
    assert abs(complex(x) - approx) < 1e-9
    assert abs(complex(conjugate(x)) - approx.conjugate()) < 1e-9


@given(st.sampled_from(PRIMES), st.fractions(-5, 5, max_denominator=7))
def test_rationals_fixed_by_conjugation(d, q):
    r = CyclotomicNumber.rational(d, q)
    assert conjugate(r) == r
