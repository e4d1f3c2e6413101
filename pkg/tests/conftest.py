import pytest

from sortnet16 import green16, van_voorhis16


@pytest.fixture(scope="session")
def green():
    return green16()


@pytest.fixture(scope="session")
def vv():
    return van_voorhis16()
