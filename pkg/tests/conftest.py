import pytest
from hypothesis import settings

from strategies import P

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@pytest.fixture
def degree9_poly():
    # 10 + 8x - 3x^2 - 5x^3 + 2x^5 + 7x^8 + x^9
    return P(10, 8, -3, -5, 0, 2, 0, 0, 7, 1)
