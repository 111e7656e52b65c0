import pytest
from hypothesis import settings

from triangle_moduli.config import reset

settings.register_profile('default', deadline=None, max_examples=200)
settings.load_profile('default')


def pytest_addoption(parser):
    parser.addoption(
        '--update-golden',
        action='store_true',
        default=False,
        help='Rewrite the golden SVG files under tests/golden instead of comparing against them',
    )


@pytest.fixture
def update_golden(request):
    return request.config.getoption('--update-golden')


@pytest.fixture(autouse=True)
def default_tolerances():
    reset()
    yield
    reset()
