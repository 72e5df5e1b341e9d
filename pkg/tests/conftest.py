"""Shared graph populations.

Exhaustive enumeration through n = 4, seeded samples of 500 graphs each for
n = 5 and n = 6.  Session scope so the expensive lists are built once.
"""

import pytest

from mixedrandic import population


@pytest.fixture(scope="session")
def exhaustive_population():
    graphs = []
    for n in (2, 3, 4):
        graphs.extend(population(n))
    return graphs


@pytest.fixture(scope="session")
def sampled_population():
    return population(5) + population(6)


@pytest.fixture(scope="session")
def full_population(exhaustive_population, sampled_population):
    return exhaustive_population + sampled_population


@pytest.fixture(scope="session")
def population_through_5(exhaustive_population):
    return exhaustive_population + population(5)
