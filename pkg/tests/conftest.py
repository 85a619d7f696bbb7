from itertools import combinations

import pytest


def subset_count(n, k):
    """Brute-force C(n, k) by listing k-subsets of an n-set."""
    if k < 0:
        return 0
    return sum(1 for _ in combinations(range(n), k))


@pytest.fixture
def small_params():
    return [(v, d) for v in range(3, 13) for d in range(2, min(8, v - 1) + 1)]
