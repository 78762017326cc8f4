import pytest

from mobiuslab import mertens_series, sieve_moebius


@pytest.fixture(scope="session")
def table_10k():
    return sieve_moebius(10**4)


@pytest.fixture(scope="session")
def table_100k():
    return sieve_moebius(10**5)


@pytest.fixture(scope="session")
def table_10m():
    return sieve_moebius(10**7)


@pytest.fixture(scope="session")
def mertens_10m(table_10m):
    return mertens_series(table_10m)
