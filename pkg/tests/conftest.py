import pytest

from basepoly.matroid import rank2_from_composition, to_mask, uniform, disjoint_sum


@pytest.fixture
def m211():
    return rank2_from_composition((2, 1, 1))


@pytest.fixture
def u24():
    return uniform(2, 4)


@pytest.fixture
def square():
    return disjoint_sum(uniform(1, 2), uniform(1, 2))


def masks(*groups):
    return {to_mask(g) for g in groups}
