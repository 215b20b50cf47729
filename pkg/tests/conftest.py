"""Shared fixtures."""
import pytest

from hexlap.config import get_settings
from hexlap.models import Graph
from hexlap.services.graphs import generate, serialize_edge_list


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are re-read for every test so env overrides stay local."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def k2() -> Graph:
    return generate("complete", 2)


@pytest.fixture
def p3() -> Graph:
    return generate("path", 3)


@pytest.fixture
def c5() -> Graph:
    return generate("cycle", 5)


@pytest.fixture
def c6() -> Graph:
    return generate("cycle", 6)


@pytest.fixture
def k4() -> Graph:
    return generate("complete", 4)


@pytest.fixture
def c6_file(tmp_path, c6) -> str:
    path = tmp_path / "c6.txt"
    path.write_text(serialize_edge_list(c6))
    return str(path)


@pytest.fixture
def k2_file(tmp_path, k2) -> str:
    path = tmp_path / "k2.txt"
    path.write_text(serialize_edge_list(k2))
    return str(path)
