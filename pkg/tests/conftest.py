import pytest

from latplan.families import (
    Cyclic,
    Dihedral,
    GeneralizedQuaternion,
    MetacyclicPQ,
    Modular,
    Semidihedral16,
    construct_family,
)
from latplan.groups import direct_product, from_permutations


@pytest.fixture(scope="session")
def q8():
    return construct_family(GeneralizedQuaternion(8))


@pytest.fixture(scope="session")
def q16():
    return construct_family(GeneralizedQuaternion(16))


@pytest.fixture(scope="session")
def qd16():
    return construct_family(Semidihedral16())


@pytest.fixture(scope="session")
def d8():
    return construct_family(Dihedral(8))


@pytest.fixture(scope="session")
def z30():
    return construct_family(Cyclic(30))


@pytest.fixture(scope="session")
def s4():
    return from_permutations(4, [[1, 2, 3, 0], [1, 0, 2, 3]])


@pytest.fixture(scope="session")
def a4():
    return from_permutations(4, [[1, 0, 3, 2], [2, 3, 0, 1], [1, 2, 0, 3]])


@pytest.fixture(scope="session")
def z2_cubed():
    z2 = construct_family(Cyclic(2))
    return direct_product(direct_product(z2, z2), z2)


@pytest.fixture(scope="session")
def z4xz2():
    return direct_product(construct_family(Cyclic(4)), construct_family(Cyclic(2)))


def cyclic(n):
    return construct_family(Cyclic(n))
