"""Every JSON document the CLI emits validates against its schema."""
import json
import os
import pathlib
import subprocess
import sys

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
sys.path.insert(0, str(ROOT / "tools"))
import validate_json  # noqa: E402

CLI = os.environ.get("UNIDOM_CLI", str(ROOT / "build" / "unidom"))


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr
    return json.loads(proc.stdout)


@pytest.fixture
def extremal(tmp_path):
    proc = subprocess.run([CLI, "construct", "--family", "bipartite", "--n", "10", "--gamma", "3"],
                          capture_output=True, text=True, check=True)
    path = tmp_path / "extremal.g6"
    path.write_text(proc.stdout)
    return path


def test_bound_row():
    doc = run("bound", "--n", "10", "--gamma", "3", "--json")
    validate_json.validate("bound", doc)
    assert doc["m_bipartite"] == 15 and doc["m_fischermann"] == 18


def test_bound_table_with_nulls():
    doc = run("bound", "--n", "3", "--gamma", "1", "--n-max", "12", "--gamma-max", "4", "--json")
    validate_json.validate("bound", doc)
    assert any(r["m_bipartite"] is None for r in doc["rows"])


@pytest.mark.parametrize("family,n,gamma", [("bipartite", 6, 2), ("fischermann", 9, 3),
                                            ("star", 5, 1), ("bipartite", 20, 4)])
def test_certificate(family, n, gamma):
    doc = run("construct", "--family", family, "--n", str(n), "--gamma", str(gamma), "--verify")
    validate_json.validate("certificate", doc)
    assert doc["passed"]


def test_verify(extremal, tmp_path):
    validate_json.validate("verify", run("verify", "--in", str(extremal), "--json"))
    c4 = tmp_path / "c4.txt"
    c4.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    doc = run("verify", "--in", str(c4), "--json", expect=1)
    validate_json.validate("verify", doc)
    assert not doc["unique"]


def test_search():
    doc = run("search", "--n", "7", "--gamma", "2", "--json", "--threads", "1")
    validate_json.validate("search", doc)
    assert doc["max_size"] == 9
    doc = run("search", "--n", "6", "--gamma", "2", "--size", "7", "--json")
    validate_json.validate("search", doc)
    assert doc["witness_count"] == 0


def test_iso(extremal):
    validate_json.validate("iso", run("iso", "--a", str(extremal), "--b", str(extremal), "--json"))


def test_schema_rejects_wrong_tag():
    doc = run("bound", "--n", "10", "--gamma", "3", "--json")
    doc["schema"] = "unidom/0"
    with pytest.raises(jsonschema.ValidationError):
        validate_json.validate("bound", doc)


def test_validator_cli(tmp_path):
    good = tmp_path / "iso.json"
    good.write_text('{"schema":"unidom/1","isomorphic":false}')
    script = str(ROOT / "tools" / "validate_json.py")
    assert subprocess.run([sys.executable, script, "iso", str(good)]).returncode == 0
    good.write_text('{"schema":"unidom/1"}')
    assert subprocess.run([sys.executable, script, "iso", str(good)],
                          capture_output=True).returncode == 1
