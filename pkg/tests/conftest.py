import sys

import pytest

sys.set_int_max_str_digits(0)

from yvlab.coeff_theory import RatioTable, ratio_table
from yvlab.schur_det import HkFamily, hk_family
from yvlab.yv_engine import YvSequenceCache


@pytest.fixture(scope="session")
def cache1() -> YvSequenceCache:
    """Shared a=1 sequence cache; tests extend it as far as they need."""
    return YvSequenceCache(1)


@pytest.fixture(scope="session")
def ratio7() -> RatioTable:
    return ratio_table(7)


@pytest.fixture(scope="session")
def fam39() -> HkFamily:
    """h-family large enough for the n <= 20 staircase matrices."""
    return hk_family(39)
