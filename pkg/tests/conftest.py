import random

import pytest

from mpqc.gf import field


@pytest.fixture(scope="session")
def F3():
    return field(3, 1)


@pytest.fixture(scope="session")
def F9():
    return field(3, 2)


@pytest.fixture(scope="session")
def F25():
    return field(5, 2)


@pytest.fixture(scope="session")
def F49():
    return field(7, 2)


@pytest.fixture()
def rng():
    return random.Random(0xBEEF)
