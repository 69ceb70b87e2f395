"""
Configuration Loader
Loads and validates named parameter sets from JSON files
"""

import json
import numbers
import os
from typing import Any, Dict

from bmw6 import PARAM_KEYS, Bmw6Params
from errors import DomainError


class ConfigLoader:
    """Loads parameter-set files: { "<name>": {"a": .., "b": .., "lambda": .., ...}, ... }"""

    @staticmethod
    def load(config_path: str) -> Dict[str, Any]:
        """
        Load a parameter-set file

        Keys starting with `_comment` are dropped, at the top level and inside
        each set.

        Args:
            config_path: Path to the JSON file

        Returns:
            Mapping of set name to raw parameter dict

        Raises:
            FileNotFoundError: If the file doesn't exist
            ValueError: If the JSON is malformed or a set is invalid
        """
        if not os.path.exists(config_path):
            raise FileNotFoundError(f"Params file not found: {config_path}")

        with open(config_path, 'r', encoding='utf-8') as f:
            try:
                raw = json.load(f)
            except json.JSONDecodeError as e:
                raise ValueError(f"Params file {config_path} is not valid JSON: {e}") from e

        if not isinstance(raw, dict):
            raise ValueError(f"Params file {config_path} must hold a JSON object of named sets")

        config = {}
        for name, values in raw.items():
            if name.startswith('_comment'):
                continue
            if not isinstance(values, dict):
                raise ValueError(f"Parameter set '{name}' must be an object, got {type(values).__name__}")
            config[name] = {k: v for k, v in values.items() if not k.startswith('_comment')}
            ConfigLoader.validate_param_set(name, config[name])

        if not config:
            raise ValueError(f"Params file {config_path} defines no parameter sets")

        return config

    @staticmethod
    def get(config: Dict, *keys, default=None):
        """
        Look up a set, or one value inside a set, without raising

        Args:
            config: Result of load()
            *keys: Set name, then optionally a parameter key
            default: Returned when any key along the path is absent

        Example:
            get(config, 'N1', 'tau')          # 2
            get(config, 'N1', 'delta', default=0.5)
        """
        node = config
        for key in keys:
            if not isinstance(node, dict) or key not in node:
                return default
            node = node[key]
        return node

    @staticmethod
    def get_param_set(config: Dict, name: str) -> Bmw6Params:
        """
        Build the named set

        Raises:
            ValueError: If the set is unknown or out of domain
        """
        values = ConfigLoader.get(config, name)
        if values is None:
            known = ', '.join(sorted(config)) or '(none)'
            raise ValueError(f"Unknown parameter set '{name}' (available: {known})")
        ConfigLoader.validate_param_set(name, values)
        return Bmw6Params.from_mapping(values)

    @staticmethod
    def validate_param_set(name: str, values: Dict) -> bool:
        """
        Validate one parameter set

        Args:
            name: Set name, used in messages
            values: Raw mapping of parameter name to value

        Returns:
            True if valid

        Raises:
            ValueError: If a key is missing, unknown, non-numeric or out of domain
        """
        unknown = sorted(set(values) - set(PARAM_KEYS))
        if unknown:
            raise ValueError(f"Parameter set '{name}' has unknown keys: {', '.join(unknown)}")

        for key in PARAM_KEYS:
            if key not in values:
                raise ValueError(f"Parameter set '{name}' is missing '{key}'")
            value = values[key]
            if isinstance(value, bool) or not isinstance(value, numbers.Real):
                raise ValueError(f"Parameter set '{name}': '{key}' must be a number, got {value!r}")

        try:
            Bmw6Params.from_mapping(values)
        except DomainError as e:
            raise ValueError(f"Parameter set '{name}': {e}") from e

        return True
