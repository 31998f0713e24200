import pytest

from coxkit import preset


@pytest.fixture(scope="session")
def a2():
    return preset("A2")


@pytest.fixture(scope="session")
def a3():
    return preset("A3")


@pytest.fixture(scope="session")
def b3():
    return preset("B3")


@pytest.fixture(scope="session")
def h3():
    return preset("H3")


@pytest.fixture(scope="session")
def i27():
    return preset("I2(7)")


@pytest.fixture(scope="session")
def dinf():
    return preset("Dinf")


@pytest.fixture(scope="session")
def ta2():
    return preset("tilde-A2")


@pytest.fixture(scope="session")
def g1():
    return preset("G1")
