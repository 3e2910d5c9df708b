import pytest

from kappalab.graphs import build_ag, build_splitstar


@pytest.fixture(scope="session")
def ag4():
    return build_ag(4)


@pytest.fixture(scope="session")
def ag5():
    return build_ag(5)


@pytest.fixture(scope="session")
def ag6():
    return build_ag(6)


@pytest.fixture(scope="session")
def s4():
    return build_splitstar(4)


@pytest.fixture(scope="session")
def s5():
    return build_splitstar(5)
