#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Configuration Loader Module

Handles loading, validation, and merging of configuration from JSON files,
the environment and command-line arguments.

Precedence: defaults < config file < environment < command line.
Messages go to stderr so reports on stdout are unaffected.
"""

import json
import os
import sys
from typing import Any, Dict, Optional

from .colors import Colors

ENV_ENUM_BUDGET = 'MOTIVIC_ENUM_BUDGET'


def _say(text: str) -> None:
    print(text, file=sys.stderr)


class ConfigLoader:
    """
    Loads and validates configuration for motivic-ts.
    """

    DEFAULTS = {
        'enumeration_budget': 10 ** 8,
        'field_budget': 10 ** 9,
        'q_list': [7, 13],
        'format': 'text',
        'seed': 0,
        'jobs': 1,
        'bindings': None,
        'log_file': None,
        'random_pairs': 200,
    }

    FORMATS = ('text', 'json')

    @classmethod
    def load_config(cls, config_file: str) -> Optional[Dict]:
        """
        Load configuration from JSON file.

        Args:
            config_file: Path to configuration file

        Returns:
            Configuration dictionary or None if failed
        """
        try:
            if not os.path.exists(config_file):
                _say(Colors.error(f"Configuration file '{config_file}' not found"))
                return None

            with open(config_file, 'r', encoding='utf-8') as f:
                config = json.load(f)

            if not isinstance(config, dict):
                _say(Colors.error("Configuration file must contain a JSON object"))
                return None

            unknown = sorted(set(config) - set(cls.DEFAULTS))
            if unknown:
                _say(Colors.warning(f"Ignoring unknown configuration keys: {', '.join(unknown)}"))
                for key in unknown:
                    del config[key]

            _say(Colors.success(f"Configuration loaded from: {config_file}"))
            return config

        except json.JSONDecodeError as e:
            _say(Colors.error(f"Error parsing JSON file: {e}"))
            return None
        except OSError as e:
            _say(Colors.error(f"Error loading configuration: {e}"))
            return None

    @classmethod
    def validate_config(cls, config: Dict) -> bool:
        """
        Validate configuration dictionary.

        Args:
            config: Configuration dictionary

        Returns:
            True if valid, False otherwise
        """
        for field in ('enumeration_budget', 'field_budget', 'jobs', 'random_pairs'):
            value = config.get(field)
            if value is None:
                continue
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                _say(Colors.error(f"Invalid {field}: must be a positive integer"))
                return False

        seed = config.get('seed')
        if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
            _say(Colors.error("Invalid seed: must be an integer"))
            return False

        q_list = config.get('q_list')
        if q_list is not None:
            # core.fields imports utils.debug, so this import stays local
            from ..core.fields import is_prime_power
            if not isinstance(q_list, list) or not q_list:
                _say(Colors.error("'q_list' must be a non-empty list"))
                return False
            bad = [q for q in q_list if isinstance(q, bool) or not isinstance(q, int) or not is_prime_power(q)]
            if bad:
                _say(Colors.error(f"'q_list' entries must be prime powers: {bad}"))
                return False

        fmt = config.get('format')
        if fmt is not None and fmt not in cls.FORMATS:
            _say(Colors.error(f"Invalid format '{fmt}': choose from {', '.join(cls.FORMATS)}"))
            return False

        for field in ('bindings', 'log_file'):
            if config.get(field) is not None and not isinstance(config[field], str):
                _say(Colors.warning(f"'{field}' should be a string path; ignoring invalid value"))
                config[field] = None

        return True

    @classmethod
    def apply_defaults(cls, config: Dict) -> Dict:
        """
        Apply default values to configuration.

        Args:
            config: Configuration dictionary

        Returns:
            Configuration with defaults applied
        """
        for key, default_value in cls.DEFAULTS.items():
            if key not in config:
                config[key] = list(default_value) if isinstance(default_value, list) else default_value

        return config

    @classmethod
    def apply_environment(cls, config: Dict, environ: Optional[Dict[str, str]] = None) -> Dict:
        """
        Apply environment overrides (currently the enumeration budget).

        Non-numeric values are reported and ignored.
        """
        environ = os.environ if environ is None else environ
        raw = environ.get(ENV_ENUM_BUDGET)
        if raw:
            if raw.strip().isdigit() and int(raw) > 0:
                config['enumeration_budget'] = int(raw)
            else:
                _say(Colors.warning(f"Ignoring {ENV_ENUM_BUDGET}={raw!r}: not a positive integer"))
        return config

    @classmethod
    def merge_with_args(cls, config: Dict, args) -> Dict:
        """
        Merge configuration with command-line arguments.

        Command-line arguments override configuration file values. Only
        attributes of the expected type are merged, so partially built
        namespaces (and Mock objects in tests) leave the config untouched.

        Args:
            config: Configuration dictionary
            args: Parsed command-line arguments

        Returns:
            Merged configuration
        """
        expected_types = {
            'enumeration_budget': int,
            'field_budget': int,
            'q_list': list,
            'format': str,
            'seed': int,
            'jobs': int,
            'bindings': str,
            'log_file': str,
            'random_pairs': int,
        }
        arg_names = {'enumeration_budget': 'budget', 'random_pairs': 'pairs', 'q_list': 'q'}

        for key, exp_type in expected_types.items():
            value = getattr(args, arg_names.get(key, key), None)
            if value is None:
                continue
            if exp_type is int and isinstance(value, str):
                if not value.isdigit():
                    continue
                value = int(value)
            if isinstance(value, bool) or not isinstance(value, exp_type):
                continue
            config[key] = value

        return config

    @classmethod
    def save_config(cls, config: Dict, filepath: str) -> bool:
        """
        Save configuration to JSON file.

        Args:
            config: Configuration dictionary
            filepath: Path to save configuration

        Returns:
            True if successful, False otherwise
        """
        try:
            os.makedirs(os.path.dirname(filepath) or '.', exist_ok=True)
            with open(filepath, 'w', encoding='utf-8') as f:
                json.dump(config, f, indent=2, ensure_ascii=False)
                f.write('\n')
            _say(Colors.success(f"Configuration saved to: {filepath}"))
            return True
        except OSError as e:
            _say(Colors.error(f"Error saving configuration: {e}"))
            return False

    @classmethod
    def create_example_config(cls) -> Dict:
        """
        Create an example configuration.

        Returns:
            Example configuration dictionary
        """
        return {
            "enumeration_budget": 100000000,
            "field_budget": 1000000000,
            "q_list": [7, 13, 19],
            "format": "text",
            "seed": 0,
            "jobs": 1,
            "bindings": "data/example_bindings.txt",
            "log_file": None,
            "random_pairs": 200,
        }

    @classmethod
    def print_config(cls, config: Dict, stream: Any = None):
        """
        Print configuration in a readable format.

        Args:
            config: Configuration dictionary
            stream: Output stream (stdout by default)
        """
        stream = stream or sys.stdout
        print(Colors.info("Current Configuration:"), file=stream)
        print("-" * 40, file=stream)

        for key, value in config.items():
            if value is None:
                display_value = 'Not set'
            elif isinstance(value, list):
                display_value = ', '.join(str(v) for v in value) if value else '[]'
            else:
                display_value = str(value)

            print(f"{key:20s}: {display_value}", file=stream)


def load_config(config_file: str) -> Optional[Dict]:
    """
    Convenience function to load and validate configuration.

    Args:
        config_file: Path to configuration file

    Returns:
        Valid configuration dictionary or None
    """
    loader = ConfigLoader()

    config = loader.load_config(config_file)
    if config is None:
        return None

    config = loader.apply_defaults(config)

    if not loader.validate_config(config):
        return None

    return config


def validate_config(config: Dict) -> bool:
    """
    Convenience function to validate configuration.

    Args:
        config: Configuration dictionary

    Returns:
        True if valid, False otherwise
    """
    return ConfigLoader.validate_config(config)


def prepare_config(args, environ: Optional[Dict[str, str]] = None) -> Optional[Dict]:
    """
    Prepare configuration from file, environment and command-line arguments.

    Args:
        args: Parsed command-line arguments
        environ: Environment mapping (os.environ by default)

    Returns:
        Complete configuration dictionary or None
    """
    loader = ConfigLoader()
    config: Dict = {}

    if getattr(args, 'config', None):
        config = loader.load_config(args.config)
        if config is None:
            return None

    config = loader.apply_environment(config, environ)
    config = loader.merge_with_args(config, args)
    config = loader.apply_defaults(config)

    if not loader.validate_config(config):
        return None

    return config
