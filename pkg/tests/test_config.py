"""Tests for the workbench configuration file."""

import logging

import pytest

from fg_workbench import config as config_module
from fg_workbench.config import WorkbenchConfig, load_config, load_yaml, setup_logging
from fg_workbench.const import DEFAULT_PLATEAU_LIMIT, DEFAULT_TRIALS
from fg_workbench.exceptions import DomainError


def test_defaults() -> None:
    conf = WorkbenchConfig.from_dict(None)
    assert conf == WorkbenchConfig()
    assert conf.plateau_limit == DEFAULT_PLATEAU_LIMIT
    assert conf.trials == DEFAULT_TRIALS
    assert conf.log_default == "warning"


def test_from_dict() -> None:
    conf = WorkbenchConfig.from_dict(
        {"trials": "20", "seed": -3, "logger": {"default": "INFO", "logs": {"fg_workbench.towers": "debug"}}}
    )
    assert conf.trials == 20
    assert conf.seed == -3
    assert conf.log_default == "info"
    assert conf.log_levels == {"fg_workbench.towers": "debug"}


@pytest.mark.parametrize(
    "data",
    [
        {"trials": 0},
        {"plateau_limit": -1},
        {"logger": {"default": "loud"}},
        {"unknown": 1},
    ],
)
def test_invalid_values(data) -> None:
    with pytest.raises(DomainError):
        WorkbenchConfig.from_dict(data)


def test_load_yaml_errors(tmp_path) -> None:
    with pytest.raises(DomainError):
        load_yaml(str(tmp_path / "missing.yaml"))
    bad = tmp_path / "bad.yaml"
    bad.write_text("trials: [1,\n")
    with pytest.raises(DomainError):
        load_yaml(str(bad))


def test_load_config(tmp_path, monkeypatch) -> None:
    assert load_config() == WorkbenchConfig()

    path = tmp_path / "workbench.yaml"
    path.write_text("trials: 12\nsearch_budget: 1000\n")
    conf = load_config(str(path))
    assert (conf.trials, conf.search_budget) == (12, 1000)

    monkeypatch.setattr(config_module, "DEFAULT_CONFIG_FILE", str(path))
    assert load_config().trials == 12

    with pytest.raises(DomainError):
        load_config(str(tmp_path / "absent.yaml"))


def test_repository_config_is_valid() -> None:
    conf = WorkbenchConfig.from_dict(load_yaml("config/workbench.yaml"))
    assert conf.log_levels == {"fg_workbench.scenarios": "info"}


def test_setup_logging() -> None:
    logger = logging.getLogger("fg_workbench.towers")
    root = logging.getLogger()
    saved = (logger.level, root.level)
    try:
        setup_logging(WorkbenchConfig(log_levels={"fg_workbench.towers": "error"}))
        assert root.level == logging.WARNING
        assert logger.level == logging.ERROR
        setup_logging(WorkbenchConfig(), verbose=True)
        assert root.level == logging.DEBUG
    finally:
        logger.setLevel(saved[0])
        root.setLevel(saved[1])
