import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetafloer.errors import NoFixedPoints, TooFewBranchPoints
from thetafloer.surface import (
    CyclicCurve,
    LowGenusWarning,
    RamificationData,
    genus,
    ramification_from_curve,
    validate_realizable,
)


def rotations(d, mults):
    return ramification_from_curve(CyclicCurve(d, tuple(mults))).rotations


def test_curve_examples():
    assert rotations(3, (1, 1, 1, 1, 1)) == (1,) * 6
    assert sorted(rotations(5, (1, 2))) == [1, 3, 3]
    assert rotations(3, (3, 1, 1, 1)) == (1, 1, 1)
    with pytest.raises(NoFixedPoints):
        ramification_from_curve(CyclicCurve(3, (3, 6)))


def test_genus_examples():
    assert genus(RamificationData(3, (1,) * 6)) == 4
    assert genus(RamificationData(5, (1, 3, 3))) == 2
    with pytest.warns(LowGenusWarning):
        assert genus(RamificationData(3, (1, 1, 1))) == 1
    with pytest.raises(TooFewBranchPoints):
        genus(RamificationData(3, (1, 2)))


def test_realizability_examples():
    assert validate_realizable(RamificationData(3, (1,) * 6))[0]
    assert validate_realizable(RamificationData(5, (4, 4, 4, 2)))[0]
    ok, why = validate_realizable(RamificationData(3, (1, 1)))
    assert not ok and why


@given(st.sampled_from((3, 5, 7, 11)), st.lists(st.integers(1, 30), min_size=1, max_size=8))
def test_curves_are_realizable(d, mults):
    if all(m % d == 0 for m in mults):
        return
    r = ramification_from_curve(CyclicCurve(d, tuple(mults)))
    assert validate_realizable(r)[0]
    # Riemann-Hurwitz with B branch points
    if len(r.rotations) >= 3:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", LowGenusWarning)
            assert 2 * genus(r) - 2 == d * (-2) + len(r.rotations) * (d - 1)
