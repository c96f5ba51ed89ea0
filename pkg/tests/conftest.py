"""Shared fixtures for the simplex toolkit tests."""

import pytest

from config import ToolkitConfig, reset_config
from core.simplex import GraphParams


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    """Every test starts from the bundled defaults with no SIMPLEX_* overrides."""
    for name in list(ToolkitConfig.ENV_OVERRIDES) + ["SIMPLEX_CONFIG"]:
        monkeypatch.delenv(name, raising=False)
    reset_config()
    yield
    reset_config()


@pytest.fixture
def t22() -> GraphParams:
    return GraphParams(n=2, m=2)


@pytest.fixture
def t32() -> GraphParams:
    """T_3^2: n=2, m=3."""
    return GraphParams(n=2, m=3)


@pytest.fixture
def t23() -> GraphParams:
    """T_2^3: n=3, m=2."""
    return GraphParams(n=3, m=2)


@pytest.fixture
def t33() -> GraphParams:
    return GraphParams(n=3, m=3)

