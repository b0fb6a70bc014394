import os
import tempfile

# Module-level loggers attach their handlers at import time
os.environ.setdefault("PARITYKIT_LOG_DIR", tempfile.mkdtemp(prefix="paritykit-logs-"))

import pytest

from paritykit.core.families import globe, oriental
from paritykit.core.multiset import GeneratorId, Multiset
from paritykit.external.fixture_handler import load_fixture
from paritykit.utils.settings import reload_settings

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


def ids(structure, *names):
    """Subset of generators of a structure, by name."""
    return Multiset.subset([structure.generator(name) for name in names])


def gen(name, dim):
    return GeneratorId(name, dim)


@pytest.fixture(autouse=True)
def fresh_settings():
    reload_settings()
    yield
    reload_settings()


@pytest.fixture
def oriental2():
    return oriental(2)


@pytest.fixture
def globe1():
    return globe(1)


@pytest.fixture
def circle():
    return load_fixture(fixture_path("circle.json")).value


@pytest.fixture
def crossed_bigons():
    return load_fixture(fixture_path("crossed_bigons.json")).value
