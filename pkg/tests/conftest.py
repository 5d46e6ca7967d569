import pytest

from rackmod import corpus


@pytest.fixture(scope="session")
def racks():
    return corpus.racks()


@pytest.fixture(scope="session")
def groups():
    return corpus.groups()


@pytest.fixture(scope="session")
def rack_homs():
    return corpus.rack_homs()


@pytest.fixture(scope="session")
def group_homs():
    return corpus.group_homs()


@pytest.fixture(scope="session")
def rack_xmods():
    return corpus.rack_xmods()


@pytest.fixture(scope="session")
def group_xmods():
    return corpus.group_xmods()
