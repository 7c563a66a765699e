import pytest

from hyperring import (
    as_hyperideal,
    identity_endomorphism,
    make_zn_multiplier_ring,
    scale_endomorphism,
)


@pytest.fixture(scope="session")
def r6():
    return make_zn_multiplier_ring(6, [2])


@pytest.fixture(scope="session")
def r12():
    return make_zn_multiplier_ring(12, [2, 3])


@pytest.fixture(scope="session")
def r5():
    return make_zn_multiplier_ring(5, [2])


@pytest.fixture(scope="session")
def z5_classical():
    return make_zn_multiplier_ring(5, [1])


@pytest.fixture(scope="session")
def z7_classical():
    return make_zn_multiplier_ring(7, [1])


@pytest.fixture(scope="session")
def i03(r6):
    return as_hyperideal(r6, {0, 3})


@pytest.fixture(scope="session")
def i024(r6):
    return as_hyperideal(r6, {0, 2, 4})


@pytest.fixture(scope="session")
def r6_id(r6):
    return identity_endomorphism(r6)


@pytest.fixture(scope="session")
def r6_scale3(r6):
    return scale_endomorphism(r6, 3)


@pytest.fixture(scope="session")
def r6_scale4(r6):
    return scale_endomorphism(r6, 4)


@pytest.fixture(scope="session")
def r6_zero(r6):
    return scale_endomorphism(r6, 0)
