#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the motivic-ts entry point: exit codes and rendered reports
"""

import sys
import os
import json
import subprocess
import importlib.util

import pytest

# Add parent directory to path
ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)

from src.utils.colors import Colors

DATA = os.path.join(ROOT, "data")


def _load_entry_point():
    spec = importlib.util.spec_from_file_location("motivic_ts", os.path.join(ROOT, "motivic-ts.py"))
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


entry = _load_entry_point()


def run_cli(capsys, *argv):
    code = entry.main(list(argv))
    out, err = capsys.readouterr()
    return code, Colors.strip_colors(out), Colors.strip_colors(err)


def field(out, key):
    for line in out.splitlines():
        if line.startswith(key + ":"):
            return line.split(":", 1)[1].strip()
    raise AssertionError(f"no {key} line in output")


def setting(out, key):
    for line in out.splitlines():
        name, sep, value = line.partition(":")
        if sep and name.strip() == key:
            return value.strip()
    raise AssertionError(f"no {key} setting in output")


class TestTextReports:
    """Text rendering of single commands."""

    def test_milnor(self, capsys):
        code, out, _ = run_cli(capsys, "milnor", "--poly", "x1^3")
        assert code == 0
        assert field(out, "milnor_fibre") == "Mu(3)"

    def test_milnor_of_the_cusp(self, capsys):
        code, out, _ = run_cli(capsys, "milnor", "--poly", "x1^2 + x2^3")
        assert code == 0
        assert field(out, "milnor_fibre") == "-L + 1 + Mu(2) + Mu(3) + Fermat1(2,3)"

    def test_gamma_chi(self, capsys):
        code, out, _ = run_cli(capsys, "gamma", "chi", "--set", "(0,1)")
        assert code == 0
        assert field(out, "chi") == "-1"

    def test_verify_ts_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify-ts", "--a", "2", "--b", "3", "--q", "7,13", "--all-twists")
        assert code == 0
        assert out.rstrip().endswith("PASS")
        assert "Realizations" in out

    def test_selfcheck(self, capsys):
        code, out, _ = run_cli(capsys, "selfcheck", "--seed", "1", "--pairs", "5", "--suite", "ring")
        assert code == 0
        assert "ring laws" in out
        assert out.rstrip().endswith("PASS")


class TestJsonReports:
    """JSON rendering is stable and carries the verdict."""

    def test_schema(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "milnor", "--poly", "x1^3")
        assert code == 0
        data = json.loads(out)
        assert data["schema_version"] == 1
        assert data["command"] == "milnor"
        assert data["result"]["milnor_fibre"] == "Mu(3)"
        assert "verdict" not in data

    def test_identical_runs_print_identical_bytes(self, capsys):
        argv = ("--format", "json", "verify-ts", "--a", "2", "--b", "3", "--q", "7")
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second

    def test_arc_count_against_closed_form(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "arc-count", "--poly", "x1^2", "--m", "2", "--q", "5")
        assert code == 0
        data = json.loads(out)
        assert data["result"]["closed_form"] == "Mu(2)*L"
        row = data["tables"][0]["rows"][0]
        assert row[:3] == [5, 10, "10"]
        assert data["verdict"] == "PASS"

    def test_realize_all_twists(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "realize", "Mu(2)", "--q", "7", "--all-twists")
        assert code == 0
        rows = json.loads(out)["tables"][0]["rows"]
        assert rows == [[7, 0, "2"], [7, 1, "0"]]

    def test_opaque_strata_with_bindings(self, capsys):
        code, out, _ = run_cli(
            capsys, "--format", "json", "--bindings", os.path.join(DATA, "example_bindings.txt"),
            "verify-ts", "--a", "2", "--b", "3", "--strata", os.path.join(DATA, "opaque_cusp.strata"),
            "--q", "7,13", "--all-twists")
        assert code == 0
        data = json.loads(out)
        assert data["result"]["structurally_equal"] is False
        assert len(data["tables"][0]["rows"]) == 12
        assert data["verdict"] == "PASS"


class TestExitCodes:
    """0 on success, 2 on a mismatch, 1 on error."""

    def test_mismatch(self, capsys, tmp_path):
        smooth = tmp_path / "smooth.strata"
        smooth.write_text("dimension = 1\n\n[entry]\ncomponents = [S]\n"
                          "multiplicities = {S: 1}\nm = 1\nclass = 1\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "verify-ts", "--a", "2", "--b", "3",
                               "--strata", str(smooth), "--q", "7,13")
        assert code == 2
        assert out.rstrip().endswith("FAIL")

    def test_bad_field_size(self, capsys):
        code, _, err = run_cli(capsys, "verify-ts", "--a", "2", "--b", "3", "--q", "6")
        assert code == 1
        assert "prime powers" in err

    def test_core_error(self, capsys):
        code, _, err = run_cli(capsys, "milnor", "--poly", "x1*x2")
        assert code == 1
        assert "Error in" in err

    def test_unbound_opaque(self, capsys):
        code, _, err = run_cli(capsys, "realize", 'Opaque("E")', "--q", "7")
        assert code == 1
        assert "no value bound" in err

    def test_missing_config(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "--config", str(tmp_path / "absent.json"), "milnor", "--poly", "x1")
        assert code == 1
        assert "Configuration failed" in err


class TestConfigAndLogging:
    """Config file values and the mirrored log file."""

    def test_config_q_list(self, capsys, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"q_list": [5], "format": "json"}), encoding="utf-8")
        code, out, _ = run_cli(capsys, "--config", str(config), "realize", "Mu(2)")
        assert code == 0
        assert json.loads(out)["tables"][0]["rows"] == [[5, 0, "2"]]

    def test_log_file_mirrors_output(self, capsys, tmp_path):
        log = tmp_path / "logs" / "run.log"
        code, out, _ = run_cli(capsys, "--log-file", str(log), "gamma", "chi", "--set", "[0,1]")
        assert code == 0
        assert field(out, "chi") == "1"
        assert "chi:" in log.read_text(encoding="utf-8")


class TestImportsAndParsing:
    """The package imports cleanly and short options are never guessed."""

    def test_core_module_imports_first(self):
        code = "import importlib; importlib.import_module('src.core.gring')"
        result = subprocess.run([sys.executable, "-c", code], cwd=ROOT, capture_output=True, text=True)
        assert result.returncode == 0, result.stderr

    def test_script_runs_as_subprocess(self):
        result = subprocess.run([sys.executable, "motivic-ts.py", "milnor", "--poly", "x1^3"],
                                cwd=ROOT, capture_output=True, text=True)
        assert result.returncode == 0, result.stderr
        assert "Mu(3)" in result.stdout

    def test_b_is_not_taken_for_a_global_prefix(self, capsys):
        code, out, err = run_cli(capsys, "verify-ts", "--a", "2", "--b", "3", "--q", "7,13", "--all-twists")
        assert code == 0, err
        assert "ambiguous" not in err
        assert out.rstrip().endswith("PASS")


class TestConfigCommand:
    """config show / config init."""

    def test_show_prints_effective_values(self, capsys):
        code, out, _ = run_cli(capsys, "--jobs", "3", "config", "show")
        assert code == 0
        assert "Current Configuration:" in out
        assert setting(out, "jobs") == "3"
        assert setting(out, "q_list") == "7, 13"
        assert setting(out, "bindings") == "Not set"

    def test_init_writes_a_loadable_file(self, capsys, tmp_path):
        path = tmp_path / "conf" / "config.json"
        code, _, err = run_cli(capsys, "config", "init", str(path))
        assert code == 0
        assert "Configuration saved to" in err
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["q_list"] == [7, 13, 19]
        code, out, _ = run_cli(capsys, "--config", str(path), "config", "show")
        assert code == 0
        assert setting(out, "q_list") == "7, 13, 19"

    def test_init_into_unwritable_place(self, capsys, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("x", encoding="utf-8")
        code, _, err = run_cli(capsys, "config", "init", str(blocker / "config.json"))
        assert code == 1
        assert "Error saving configuration" in err


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
