import pytest

from quasismash.catalog import H2, H8, SW4, kZ2
from quasismash.fields import QQ
from quasismash.products import h_zero


@pytest.fixture(scope="session")
def h2():
    return H2()


@pytest.fixture(scope="session")
def h8():
    return H8()


@pytest.fixture(scope="session")
def kz2():
    return kZ2()


@pytest.fixture(scope="session")
def sw4():
    return SW4()


@pytest.fixture(scope="session")
def h2_zero(h2):
    return h_zero(h2)


@pytest.fixture(scope="session", params=["kZ2", "SW4"])
def hopf(request):
    return {"kZ2": kZ2, "SW4": SW4}[request.param](QQ)
