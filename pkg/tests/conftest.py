"""Global fixtures for fg_workbench tests."""

# Fixtures defined here are available across all tests.  Case tables live
# next to the tests as YAML files and are opened relative to the repository
# root, so run pytest from there.

import pytest

from fg_workbench.config import WorkbenchConfig
from fg_workbench.words import Alphabet


@pytest.fixture
def f2() -> Alphabet:
    return Alphabet.of("a", "b")


@pytest.fixture
def f3() -> Alphabet:
    return Alphabet.of("a", "b", "c")


@pytest.fixture
def config() -> WorkbenchConfig:
    """Small trial counts so sampled checks stay quick."""
    return WorkbenchConfig(trials=60, seed=7)


@pytest.fixture(autouse=True)
def no_default_config(monkeypatch, tmp_path):
    """Point the default config file at a missing path so a local
    config/workbench.yaml never leaks into results."""
    monkeypatch.setattr("fg_workbench.config.DEFAULT_CONFIG_FILE", str(tmp_path / "absent.yaml"))
