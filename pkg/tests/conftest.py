import numpy as np
import pytest

from qmatroid.fixtures import m6, m6_dual
from qmatroid.matroid import uniform
from qmatroid.representable import random_representable


def random_test_matroids():
    """Twenty seeded representable q-matroids on F_2^4 and F_2^5."""
    out = []
    rng = np.random.default_rng(2024)
    for seed in range(20):
        n = 4 if seed % 2 == 0 else 5
        k = int(rng.integers(1, n + 1))
        m = int(rng.integers(2, 4))
        out.append(random_representable(2, n, k, m, seed))
    return out


def uniform_test_matroids():
    return [uniform(k, n, 2) for n in range(1, 6) for k in range(n + 1)]


@pytest.fixture(scope="session")
def M6():
    return m6()


@pytest.fixture(scope="session")
def M6_dual():
    return m6_dual()
