import numpy as np
import pytest

from fockshift import (
    ConstantWeights,
    FinitePerturbationWeights,
    PeriodicWeights,
    ScaledWeights,
    TwoLetterRunWeights,
)
from fockshift.weights import table_from_strings


@pytest.fixture(scope="session")
def unweighted():
    return ConstantWeights(2, 1.0)


@pytest.fixture(scope="session")
def scaled23():
    return ScaledWeights(2, (2.0, 3.0))


@pytest.fixture(scope="session")
def periodic_example():
    # 2-periodic subclass with a = b = 1 and c = d = e = f = 2
    return PeriodicWeights(
        2, 2, table_from_strings({"1:e": 1, "2:e": 1, "1:1": 2, "2:1": 2, "1:2": 2, "2:2": 2})
    )


@pytest.fixture(scope="session")
def run_weights_bounded():
    # m = 0.81, c = 0.9 = sqrt(m): the commutant ratio supremum equals 1
    return TwoLetterRunWeights(0.81, 0.9)


@pytest.fixture(scope="session")
def run_weights_diverging():
    return TwoLetterRunWeights(4.0, 1.0)


def random_finite_perturbation(seed: int, n: int = 2, cutoff: int = 2) -> FinitePerturbationWeights:
    from fockshift import BasisEnumeration

    rng = np.random.default_rng(seed)
    basis = BasisEnumeration(n, cutoff)
    table = {
        (i, w): float(rng.uniform(0.5, 2.0))
        for w in basis.words()
        for i in range(1, n + 1)
    }
    tail = tuple(float(rng.uniform(0.5, 2.0)) for _ in range(n))
    return FinitePerturbationWeights(n, cutoff, table, tail)


@pytest.fixture(scope="session")
def finite_perturbation():
    return random_finite_perturbation(12345)
