import itertools

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def small_multisets(lo: int = 2, hi: int = 10, max_s: int = 4, max_twos: int = 1):
    """Every sorted multiset with entries in [lo, hi], 1 <= s <= max_s."""
    for s in range(1, max_s + 1):
        for combo in itertools.combinations_with_replacement(range(lo, hi + 1), s):
            if combo.count(2) <= max_twos:
                yield list(combo)


@pytest.fixture(scope="session")
def sweep():
    return list(small_multisets())
