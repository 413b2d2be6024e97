from fractions import Fraction

import pytest
from hypothesis import settings

from thetafloer.gspin import Spectrum

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

F = Fraction


def spec(*pairs) -> Spectrum:
    """Spectrum from (r, m) pairs written as ("2/5", 3)."""
    return Spectrum.from_pairs([(F(r), m) for r, m in pairs])


@pytest.fixture
def sign_change():
    return spec(("-2/5", 1), ("4/5", 2))
