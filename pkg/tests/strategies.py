"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from thetafloer.exactnum import CyclotomicNumber
from thetafloer.gspin import Spectrum

PRIMES = (3, 5, 7, 11, 13)


@st.composite
def cyclotomic(draw, d=None, lo=-6, hi=6):
    d = d or draw(st.sampled_from(PRIMES))
    coeffs = draw(st.lists(st.fractions(lo, hi, max_denominator=4), min_size=d - 1, max_size=d - 1))
    return CyclotomicNumber.from_coeffs(d, coeffs)


@st.composite
def spectra(draw, max_k=4, max_m=4):
    den = draw(st.sampled_from((3, 5, 7, 11, 13)))
    nums = draw(st.lists(st.integers(1, den - 1), min_size=0, max_size=max_k, unique=True))
    pairs = []
    for n in nums:
        sign = draw(st.sampled_from((1, -1)))
        pairs.append((Fraction(sign * n, den), draw(st.integers(1, max_m))))
    return Spectrum.from_pairs(pairs)
