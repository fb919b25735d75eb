import pytest

from core.data import load_catalog


@pytest.fixture(scope='session')
def catalog():
    return load_catalog()
