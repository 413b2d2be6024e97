import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetafloer.errors import NonIntegralMultiplicity, NotAntiSymmetric
from thetafloer.exactnum import CyclotomicNumber, conjugate, root_power
from thetafloer.gspin import (
    SignedEigen,
    Spectrum,
    character,
    character_of_spectrum,
    local_term,
    solve_spectrum,
    spectrum_from_signed,
)
from thetafloer.surface import RamificationData

from strategies import PRIMES


def half_angle_oracle(d, e):
    """Fixed-point contribution (i/2) csc(pi b / d), b the even representative of e mod 2d."""
    b = e if e % 2 == 0 else e + d
    return 1j / (2 * math.sin(math.pi * b / d))


def sin_basis(d, j):
    return root_power(d, j) - root_power(d, -j)


def test_local_term_examples():
    assert local_term(3, 1).coeffs == (F(-1, 3), F(-2, 3))
    assert local_term(3, 2).coeffs == (F(1, 3), F(2, 3))
    expected = sin_basis(5, 1) * F(-1, 5) - sin_basis(5, 2) * F(2, 5)
    assert local_term(5, 1) == expected
    assert local_term(5, 1).coeffs == (F(-1, 5), F(-2, 5), F(-3, 5), F(1, 5))


@pytest.mark.parametrize("d", PRIMES)
def test_local_term_numerically(d):
    for e in range(1, d):
        z = complex(local_term(d, e))
        assert abs(z - half_angle_oracle(d, e)) < 1e-9
        assert abs(z.real) < 1e-9
        # purely imaginary, and the opposite rotation flips it
        assert conjugate(local_term(d, e)) == -local_term(d, e)
        assert local_term(d, d - e) == -local_term(d, e)


def test_character_examples():
    assert character(RamificationData(3, (1,) * 6)).coeffs == (-2, -4)
    assert character(RamificationData(3, (1, 2))).is_zero
    chi = character(RamificationData(5, (4, 4, 4, 2)))
    assert chi == local_term(5, 4) * 3 + local_term(5, 2)


def test_solve_examples():
    chi = sin_basis(3, 1) * -2
    assert solve_spectrum(chi) == [SignedEigen(1, -2)]
    assert solve_spectrum(CyclotomicNumber.zero(5)) == []
    with pytest.raises(NotAntiSymmetric):
        solve_spectrum(root_power(5, 1) + root_power(5, -1))
    with pytest.raises(NonIntegralMultiplicity):
        solve_spectrum(character(RamificationData(3, (1, 1))))


def test_spectrum_from_signed_examples():
    assert spectrum_from_signed(3, [SignedEigen(1, -2)]) == Spectrum.from_pairs([(F(-2, 3), 2)], order=3)
    s = spectrum_from_signed(5, [SignedEigen(1, 3), SignedEigen(2, 4)])
    assert s.entries == ((F(2, 5), 3), (F(4, 5), 4))
    assert spectrum_from_signed(5, [SignedEigen(2, -1)]).entries == ((F(-4, 5), 1),)
    assert character_of_spectrum(3, [SignedEigen(1, -2)]) == sin_basis(3, 1) * -2
    assert character_of_spectrum(5, []).is_zero


@given(st.sampled_from(PRIMES), st.data())
def test_roundtrip_property(d, data):
    ns = data.draw(st.lists(st.integers(-6, 6), min_size=(d - 1) // 2, max_size=(d - 1) // 2))
    eigens = [SignedEigen(j + 1, n) for j, n in enumerate(ns) if n]
    chi = character_of_spectrum(d, eigens)
    assert conjugate(chi) == -chi
    assert solve_spectrum(chi) == eigens


@given(st.sampled_from((3, 5, 7)), st.lists(st.integers(1, 6), min_size=3, max_size=9))
def test_character_is_trace_like(d, rots):
    """The character of realizable data is anti-symmetric and matches the sum of local terms numerically."""
    rots = [r % d or 1 for r in rots]
    chi = character(RamificationData(d, tuple(rots)))
    assert conjugate(chi) == -chi
    total = sum(half_angle_oracle(d, e) for e in rots)
    assert abs(complex(chi) - total) < 1e-8


def test_random_large_prime_roundtrip():
    rng = random.Random(5)
    for d in (17, 19, 23):
        eigens = [SignedEigen(j, n) for j in range(1, (d + 1) // 2) if (n := rng.randint(-4, 4))]
        assert solve_spectrum(character_of_spectrum(d, eigens)) == eigens
