import os
import sys

import pytest

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from exponents import CharExponents  # noqa: E402


@pytest.fixture
def example_one():
    """Two variables, two characteristic exponents, lct 13/22."""
    return CharExponents.of(2, ("1/3", "1/3"), ("7/6", "2/3"))


@pytest.fixture
def example_two():
    """Three variables, l_1 < l_2, lct 14/33."""
    return CharExponents.of(3, ("1/2", "1/2", "0"), ("2/3", "2/3", "11/3"))


@pytest.fixture
def invertible():
    """lambda_1 = (1/n_1, 0)."""
    return CharExponents.of(2, ("1/2", "0"), ("3/2", "1/2"))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: corpus-scale runs; deselect with -m 'not slow'")
