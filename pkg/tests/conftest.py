"""
Shared fixtures: CLI runner, clean LLT_* environment, example graphs.
"""
import pytest
from click.testing import CliRunner

from llt_ribbon.core.config import settings
from llt_ribbon.graphs import path, two_headed
from llt_ribbon.models.graph import AreaSequence


_ENV_VARS = [
    "LLT_PROJECT_NAME", "LLT_VERSION", "LLT_MAX_VERTICES", "LLT_WORKERS",
    "LLT_GRID_MAX_WEIGHT", "LLT_LOG_LEVEL", "LLT_LOG_CONFIG",
]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Tests see the default configuration unless they set it themselves."""
    for name in _ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr(settings, "MAX_VERTICES", 8)
    monkeypatch.setattr(settings, "WORKERS", 1)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def example_two_headed() -> AreaSequence:
    """(2,1,2,1): the two-headed melting lollipop with m1=3, k1=0, n=-1, m2=3, k2=0."""
    return two_headed(3, 0, -1, 3, 0)


@pytest.fixture
def example_graph() -> AreaSequence:
    """The 5-vertex graph with area sequence (2,2,1,1)."""
    return AreaSequence.of((2, 2, 1, 1))


@pytest.fixture
def path2() -> AreaSequence:
    return path(2)
