import pytest

from softcat import Universe, generate_object_family


@pytest.fixture(scope="session")
def u2():
    return Universe(("u1", "u2"))


@pytest.fixture(scope="session")
def family2(u2):
    return generate_object_family(u2, 2)
