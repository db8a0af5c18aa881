"""
Configuration utilities for the knotobs library.
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Union

import yaml

# .env support is optional at runtime
try:
    from dotenv import load_dotenv

    load_dotenv()
except ImportError:
    pass

DEFAULT_CHECKS = [
    "positive_sum",
    "two_strand",
    "candidate_determinant",
    "cover_order",
    "candidate_alexander",
    "divisibility",
    "corollary_det_one",
]

_DEFAULT_CONFIG: Dict[str, Any] = {
    "pipeline": {
        "checks": DEFAULT_CHECKS,
    },
    "scan": {
        "family": "two-strand",
        "max_q": 9,
        "max_p": 2,
        "max_factors_per_sign": 2,
        "format": "json",
        "positives_only": False,
        "max_q_env": "KNOTOBS_MAX_Q",
    },
    "export": {
        "scan_path": None,
        "summary_path": None,
    },
}


def load_config(config_path: Union[str, Path]) -> Dict[str, Any]:
    """
    Load configuration from a YAML file, layered over the defaults.

    Args:
        config_path: Path to the configuration file.

    Returns:
        Dictionary containing the configuration.

    Raises:
        FileNotFoundError: If the configuration file does not exist.
        ValueError: If the file is not valid YAML or names an unknown section.
    """
    config_path = Path(config_path) if isinstance(config_path, str) else config_path

    if not config_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(config_path, "r") as f:
        try:
            loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in configuration file: {e}")

    if not isinstance(loaded, dict):
        raise ValueError(f"Configuration file must contain a mapping: {config_path}")

    unknown = set(loaded) - set(_DEFAULT_CONFIG)
    if unknown:
        raise ValueError(f"Unknown configuration sections: {', '.join(sorted(unknown))}")

    config = get_default_config()
    for section, values in loaded.items():
        if values is None:
            continue
        if not isinstance(values, dict):
            raise ValueError(f"Configuration section '{section}' must be a mapping")
        config[section].update(values)

    _process_env_vars(config)

    return config


def _process_env_vars(config: Dict[str, Any]) -> None:
    """
    Apply ``<key>_env`` entries: when the named variable is set, its value
    replaces ``<key>``.

    Args:
        config: Configuration dictionary to process.
    """
    for section_config in config.values():
        if not isinstance(section_config, dict):
            continue

        # Collect first so the dict is not modified during iteration
        items_to_add = {}

        for key, value in section_config.items():
            if key.endswith("_env") and isinstance(value, str):
                env_var = os.environ.get(value)
                if env_var:
                    items_to_add[key[:-4]] = env_var

        section_config.update(items_to_add)


def get_default_config() -> Dict[str, Any]:
    """
    Get the default configuration, with ``*_env`` overrides applied.

    Returns:
        Dictionary containing the default configuration.
    """
    config = copy.deepcopy(_DEFAULT_CONFIG)
    _process_env_vars(config)
    return config
