import pytest

from hassemorse import build_complex, fixtures


@pytest.fixture
def cat():
    return fixtures.load("cat")


@pytest.fixture
def edge():
    return build_complex([[1, 2]], {1: 1.0, 2: 2.0})


@pytest.fixture
def triangle():
    return build_complex([[1, 2, 3]], {1: 1.0, 2: 2.0, 3: 3.0})


@pytest.fixture(params=fixtures.names())
def fixture_complex(request):
    return fixtures.load(request.param)
