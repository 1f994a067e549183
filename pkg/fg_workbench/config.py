"""Workbench configuration: a YAML file validated with voluptuous."""

from dataclasses import dataclass, field
import logging
import os
from typing import Any, Optional

import voluptuous as vol
import yaml

from .const import (
    CONF_DECISION_PLATEAU_LIMIT,
    CONF_DEFAULT,
    CONF_LOGGER,
    CONF_LOGS,
    CONF_M,
    CONF_MAX_LEN,
    CONF_N,
    CONF_P,
    CONF_PLATEAU_LIMIT,
    CONF_Q,
    CONF_SCENARIO,
    CONF_SEARCH_BUDGET,
    CONF_SEED,
    CONF_TRIALS,
    DEFAULT_CONFIG_FILE,
    DEFAULT_DECISION_PLATEAU_LIMIT,
    DEFAULT_MAX_LEN,
    DEFAULT_PLATEAU_LIMIT,
    DEFAULT_SEARCH_BUDGET,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    SCENARIOS,
)
from .exceptions import DomainError

_LOGGER = logging.getLogger(__name__)

LOG_LEVELS = ["critical", "error", "warning", "info", "debug"]

LogLevel = vol.All(vol.Lower, vol.In(LOG_LEVELS))
PositiveInt = vol.All(vol.Coerce(int), vol.Range(min=1))
NonNegativeInt = vol.All(vol.Coerce(int), vol.Range(min=0))

LOGGER_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_DEFAULT, default="warning"): LogLevel,
        vol.Optional(CONF_LOGS, default=dict): {str: LogLevel},
    }
)

CONFIG_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_PLATEAU_LIMIT, default=DEFAULT_PLATEAU_LIMIT): NonNegativeInt,
        vol.Optional(
            CONF_DECISION_PLATEAU_LIMIT, default=DEFAULT_DECISION_PLATEAU_LIMIT
        ): NonNegativeInt,
        vol.Optional(CONF_SEARCH_BUDGET, default=DEFAULT_SEARCH_BUDGET): PositiveInt,
        vol.Optional(CONF_TRIALS, default=DEFAULT_TRIALS): PositiveInt,
        vol.Optional(CONF_SEED, default=DEFAULT_SEED): vol.Coerce(int),
        vol.Optional(CONF_LOGGER, default=dict): LOGGER_SCHEMA,
    }
)

SCENARIO_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_SCENARIO): vol.In(SCENARIOS),
        vol.Optional(CONF_N, default=1): PositiveInt,
        vol.Optional(CONF_M, default=None): vol.Any(None, PositiveInt),
        vol.Optional(CONF_P, default=1): PositiveInt,
        vol.Optional(CONF_Q, default=None): vol.Any(None, PositiveInt),
        vol.Optional(CONF_TRIALS, default=None): vol.Any(None, PositiveInt),
        vol.Optional(CONF_SEED, default=None): vol.Any(None, vol.Coerce(int)),
        vol.Optional(CONF_MAX_LEN, default=DEFAULT_MAX_LEN): PositiveInt,
    }
)

SCENARIO_LIST_SCHEMA = vol.Schema(vol.All([SCENARIO_SCHEMA], vol.Length(min=1)))


@dataclass(frozen=True)
class WorkbenchConfig:
    plateau_limit: int = DEFAULT_PLATEAU_LIMIT
    decision_plateau_limit: int = DEFAULT_DECISION_PLATEAU_LIMIT
    search_budget: int = DEFAULT_SEARCH_BUDGET
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    log_default: str = "warning"
    log_levels: dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: Optional[dict[str, Any]]) -> "WorkbenchConfig":
        try:
            conf = CONFIG_SCHEMA(data or {})
        except vol.Invalid as e:
            raise DomainError(f"invalid configuration: {e}") from None
        return cls(
            plateau_limit=conf[CONF_PLATEAU_LIMIT],
            decision_plateau_limit=conf[CONF_DECISION_PLATEAU_LIMIT],
            search_budget=conf[CONF_SEARCH_BUDGET],
            trials=conf[CONF_TRIALS],
            seed=conf[CONF_SEED],
            log_default=conf[CONF_LOGGER][CONF_DEFAULT],
            log_levels=dict(conf[CONF_LOGGER][CONF_LOGS]),
        )


def load_yaml(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise DomainError(f"{path}: invalid YAML: {e}") from None
    except OSError as e:
        raise DomainError(f"{path}: {e.strerror}") from None


def load_config(path: Optional[str] = None) -> WorkbenchConfig:
    """Read the configuration; the default file is optional, an explicit one is not."""
    if path is None:
        if not os.path.exists(DEFAULT_CONFIG_FILE):
            return WorkbenchConfig()
        path = DEFAULT_CONFIG_FILE
    config = WorkbenchConfig.from_dict(load_yaml(path))
    _LOGGER.debug(f"loaded configuration from {path}: {config}")
    return config


def setup_logging(config: WorkbenchConfig, verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else getattr(logging, config.log_default.upper())
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)
    for name, value in config.log_levels.items():
        logging.getLogger(name).setLevel(getattr(logging, value.upper()))
