from fractions import Fraction as F
from math import gcd

import pytest
import sympy
from hypothesis import given

from thetafloer.errors import NotCoprime
from thetafloer.torsion import SymmetricLaurent, alexander_torus_knot, check_turaev, torsion_sum

from conftest import spec
from strategies import spectra


def sympy_alexander(p, q):
    t = sympy.Symbol("t")
    num = (1 - t) * (1 - t ** (p * q))
    quo, rem = sympy.div(sympy.Poly(num, t), sympy.Poly((1 - t**p) * (1 - t**q), t))
    assert rem.is_zero
    return [int(c) for c in reversed(quo.all_coeffs())]


def test_examples():
    a = alexander_torus_knot(2, 3)
    assert a.coeffs == (-1, 1) and a.full() == [1, -1, 1]
    assert torsion_sum(a) == 1
    a = alexander_torus_knot(2, 5)
    assert a.coeffs == (1, -1, 1)
    assert torsion_sum(a) == 1
    assert torsion_sum(SymmetricLaurent((1,))) == 0
    with pytest.raises(NotCoprime):
        alexander_torus_knot(2, 2)


@pytest.mark.parametrize("p", range(2, 11))
def test_against_sympy(p):
    for q in range(2, 11):
        if gcd(p, q) != 1:
            continue
        a = alexander_torus_knot(p, q)
        assert a.full() == sympy_alexander(p, q)
        assert a.degree == (p - 1) * (q - 1) // 2


def test_turaev_examples():
    assert check_turaev(spec(("2/5", 1), ("4/5", 1))) == 2
    assert check_turaev(spec()) == 0


@given(spectra())
def test_turaev_property(s):
    assert check_turaev(s, weight=F(7, 2)) == s.total_multiplicity
