"""Case tables shared by the tests; paths are relative to the repository root."""

from typing import Any

import yaml


def load_cases(casefile: str, section: str) -> list[dict[str, Any]]:
    with open(casefile) as f:
        return yaml.safe_load(f)[section]
