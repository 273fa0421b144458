#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for Configuration Loader Module
"""

import pytest
import sys
import os
import json
import tempfile
from unittest.mock import Mock

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.utils.config_loader import ConfigLoader, load_config, prepare_config


def _write_json(data):
    with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
        json.dump(data, f)
        return f.name


class TestConfigLoader:
    """Test ConfigLoader class."""

    def test_load_valid_config(self):
        """Test loading a valid configuration file."""
        temp_file = _write_json({"q_list": [7, 13, 19], "seed": 3})
        try:
            config = ConfigLoader.load_config(temp_file)
            assert config == {"q_list": [7, 13, 19], "seed": 3}
        finally:
            os.unlink(temp_file)

    def test_load_missing_file(self, capsys):
        """A missing file is reported on stderr and yields None."""
        assert ConfigLoader.load_config("/nonexistent/motivic.json") is None
        captured = capsys.readouterr()
        assert "not found" in captured.err
        assert captured.out == ""

    def test_load_invalid_json(self):
        """Malformed JSON yields None."""
        with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
            f.write("{not json")
            temp_file = f.name
        try:
            assert ConfigLoader.load_config(temp_file) is None
        finally:
            os.unlink(temp_file)

    def test_unknown_keys_are_dropped(self, capsys):
        """Keys outside DEFAULTS are ignored with a warning."""
        temp_file = _write_json({"colour": "blue", "jobs": 2})
        try:
            config = ConfigLoader.load_config(temp_file)
            assert config == {"jobs": 2}
            assert "colour" in capsys.readouterr().err
        finally:
            os.unlink(temp_file)

    def test_validate_budgets(self):
        """Budgets, jobs and pair counts must be positive integers."""
        assert ConfigLoader.validate_config({"enumeration_budget": 10}) is True
        assert ConfigLoader.validate_config({"enumeration_budget": 0}) is False
        assert ConfigLoader.validate_config({"field_budget": -5}) is False
        assert ConfigLoader.validate_config({"jobs": "4"}) is False
        assert ConfigLoader.validate_config({"random_pairs": True}) is False

    def test_validate_q_list(self):
        """Every field size must be a prime power."""
        assert ConfigLoader.validate_config({"q_list": [7, 9, 13]}) is True
        assert ConfigLoader.validate_config({"q_list": [7, 6]}) is False
        assert ConfigLoader.validate_config({"q_list": []}) is False
        assert ConfigLoader.validate_config({"q_list": 7}) is False

    def test_validate_format(self):
        """Only text and json reports exist."""
        assert ConfigLoader.validate_config({"format": "json"}) is True
        assert ConfigLoader.validate_config({"format": "yaml"}) is False

    def test_validate_paths(self):
        """Non-string paths are reset rather than rejected."""
        config = {"bindings": 42, "log_file": "run.log"}
        assert ConfigLoader.validate_config(config) is True
        assert config["bindings"] is None
        assert config["log_file"] == "run.log"

    def test_apply_defaults(self):
        """Test applying default values."""
        config = ConfigLoader.apply_defaults({"seed": 5})

        assert config['seed'] == 5
        assert config['enumeration_budget'] == 10 ** 8
        assert config['field_budget'] == 10 ** 9
        assert config['q_list'] == [7, 13]
        assert config['format'] == 'text'
        assert config['jobs'] == 1
        assert config['bindings'] is None
        assert config['random_pairs'] == 200

    def test_defaults_are_not_shared(self):
        """Mutating one config's q_list leaves DEFAULTS alone."""
        config = ConfigLoader.apply_defaults({})
        config['q_list'].append(19)
        assert ConfigLoader.DEFAULTS['q_list'] == [7, 13]

    def test_apply_environment(self):
        """MOTIVIC_ENUM_BUDGET overrides the enumeration budget."""
        config = ConfigLoader.apply_environment({}, {"MOTIVIC_ENUM_BUDGET": "5000"})
        assert config['enumeration_budget'] == 5000

        config = ConfigLoader.apply_environment({"enumeration_budget": 7}, {"MOTIVIC_ENUM_BUDGET": "lots"})
        assert config['enumeration_budget'] == 7

    def test_merge_with_args(self):
        """Test merging config with command-line arguments."""
        config = {"q_list": [7, 13], "jobs": 1, "seed": 0}

        args = Mock()
        args.q = [19]
        args.jobs = None  # Don't override
        args.seed = 11
        args.budget = 1000
        args.pairs = 5
        args.format = "json"

        merged = ConfigLoader.merge_with_args(config, args)

        assert merged['q_list'] == [19]
        assert merged['jobs'] == 1
        assert merged['seed'] == 11
        assert merged['enumeration_budget'] == 1000
        assert merged['random_pairs'] == 5
        assert merged['format'] == "json"

    def test_merge_ignores_wrong_types(self):
        """Attributes of the wrong type (e.g. Mock defaults) are skipped."""
        merged = ConfigLoader.merge_with_args({"jobs": 3}, Mock())
        assert merged == {"jobs": 3}

    def test_save_config(self):
        """Saved configurations load back unchanged."""
        with tempfile.TemporaryDirectory() as tmpdir:
            config_path = os.path.join(tmpdir, "nested", "config.json")
            config = ConfigLoader.create_example_config()

            assert ConfigLoader.save_config(config, config_path)

            with open(config_path, 'r') as f:
                saved = json.load(f)
            assert saved == config

    def test_create_example_config(self):
        """Test creating example configuration."""
        config = ConfigLoader.create_example_config()

        assert set(config) == set(ConfigLoader.DEFAULTS)
        assert ConfigLoader.validate_config(dict(config)) is True

    def test_print_config(self, capsys):
        """print_config lists every key."""
        ConfigLoader.print_config(ConfigLoader.apply_defaults({}))
        out = capsys.readouterr().out
        assert "q_list" in out
        assert "7, 13" in out
        assert "Not set" in out


class TestHelperFunctions:
    """Test standalone helper functions."""

    def test_load_config_function(self):
        """Test the standalone load_config function."""
        temp_file = _write_json({"q_list": [5]})
        try:
            config = load_config(temp_file)
            assert config is not None
            assert config['q_list'] == [5]
            # Should have defaults applied
            assert config['seed'] == 0
        finally:
            os.unlink(temp_file)

    def test_load_config_rejects_invalid(self):
        """Invalid values make load_config return None."""
        temp_file = _write_json({"q_list": [10]})
        try:
            assert load_config(temp_file) is None
        finally:
            os.unlink(temp_file)

    def test_prepare_config_precedence(self):
        """defaults < file < environment < flags."""
        temp_file = _write_json({"enumeration_budget": 111, "seed": 1, "jobs": 2})
        try:
            args = Mock(spec=['config', 'seed', 'budget'])
            args.config = temp_file
            args.seed = 9
            args.budget = None

            config = prepare_config(args, environ={"MOTIVIC_ENUM_BUDGET": "222"})
            assert config is not None
            assert config['seed'] == 9
            assert config['enumeration_budget'] == 222
            assert config['jobs'] == 2
            assert config['format'] == 'text'

            args.budget = 333
            config = prepare_config(args, environ={"MOTIVIC_ENUM_BUDGET": "222"})
            assert config['enumeration_budget'] == 333
        finally:
            os.unlink(temp_file)

    def test_prepare_config_with_args_only(self):
        """Test prepare_config with command-line args only."""
        args = Mock(spec=['config', 'q', 'format'])
        args.config = None
        args.q = [13]
        args.format = 'json'

        config = prepare_config(args, environ={})
        assert config is not None
        assert config['q_list'] == [13]
        assert config['format'] == 'json'

    def test_prepare_config_missing_file(self):
        """A missing config file aborts preparation."""
        args = Mock(spec=['config'])
        args.config = "/nonexistent/config.json"
        assert prepare_config(args, environ={}) is None


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
