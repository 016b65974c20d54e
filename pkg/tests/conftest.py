"""Shared fixtures: exhaustive small populations and the seeded random pool."""

import pytest

from onesperner import enumerate_sperner, is_one_sperner, random_one_sperner


@pytest.fixture(scope="session")
def enumerated_by_n():
    """Every antichain over n labelled vertices, for n = 0..5."""
    return {n: list(enumerate_sperner(n)) for n in range(6)}


@pytest.fixture(scope="session")
def enumerated_one_sperner(enumerated_by_n):
    return [
        h for hs in enumerated_by_n.values() for h in hs if is_one_sperner(h)
    ]


@pytest.fixture(scope="session")
def random_population():
    """1000 seeded random gluing-tree instances with 0 to 14 vertices."""
    return [random_one_sperner(seed % 15, seed=seed) for seed in range(1000)]
