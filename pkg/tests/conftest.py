import pytest

from kohnert.perm import parse_permutation, rothe_diagram
from kohnert.verify import fixtures


@pytest.fixture(scope="session")
def fx():
    return fixtures()


@pytest.fixture(scope="session")
def w_big():
    return parse_permutation("152869347")


@pytest.fixture(scope="session")
def d_big(w_big):
    return rothe_diagram(w_big)
