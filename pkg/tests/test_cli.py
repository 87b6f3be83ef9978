import csv
import io
import json
import subprocess
import sys
from fractions import Fraction
from importlib import resources

import jsonschema
import pytest

from trigmin import cli


def schema(name):
    text = resources.files("trigmin").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def run(argv, tmp_path, name="out.txt"):
    out = tmp_path / name
    code = cli.main([*argv, "-o", str(out)])
    return code, (out.read_text() if out.exists() else None)


# -- exit codes ---------------------------------------------------------------


def test_verify_ok(tmp_path):
    code, text = run(["verify", "--m", "81", "--n", "42"], tmp_path)
    assert code == cli.EXIT_OK
    doc = json.loads(text)
    assert doc["verdict"] == "condition_2_holds"
    jsonschema.validate(doc, schema("certificate"))


@pytest.mark.parametrize("m,n", [(82, 42), (81, 68), (79, 40)])
def test_verify_scope_rejected(tmp_path, m, n):
    code, text = run(["verify", "--m", str(m), "--n", str(n)], tmp_path)
    assert code == cli.EXIT_SCOPE
    doc = json.loads(text)
    assert doc["verdict"] == "scope_rejected" and doc["scope_violations"]
    jsonschema.validate(doc, schema("certificate"))


def test_oracle_exit_codes(tmp_path):
    code, text = run(["oracle", "--m", "81", "--n", "42"], tmp_path)
    assert code == cli.EXIT_OK
    doc = json.loads(text)
    assert doc["works"] is True
    jsonschema.validate(doc, schema("oracle"))
    code, text = run(["oracle", "--m", "81", "--n", "68"], tmp_path)
    assert code == cli.EXIT_FAIL
    assert json.loads(text)["works"] is False


def test_oracle_even_odd_minimum_is_zero(tmp_path):
    code, text = run(["oracle", "--m", "4", "--n", "3"], tmp_path)
    doc = json.loads(text)
    assert abs(float(doc["min"])) <= 1e-9
    # the minimum sits at pi, not 0, so condition (2) fails for this pair
    assert code == cli.EXIT_FAIL


def test_scan(tmp_path):
    code, text = run(["scan", "--m-from", "81", "--m-to", "81"], tmp_path)
    assert code == cli.EXIT_OK
    rows = json.loads(text)
    jsonschema.validate(rows, schema("scan"))
    assert len(rows) == 1 and rows[0]["n_max_works"] >= 66
    code, text = run(["scan", "--m-from", "3", "--m-to", "9", "--format", "csv"], tmp_path)
    assert code == cli.EXIT_OK
    assert len(list(csv.DictReader(io.StringIO(text)))) == 4


def test_constants(tmp_path):
    code, text = run(["constants"], tmp_path)
    assert code == cli.EXIT_OK
    doc = json.loads(text)
    jsonschema.validate(doc, schema("constants"))
    assert doc["mode"] == "paper" and doc["all_ok"]
    by = {r["name"]: r for r in doc["rows"] if r["step_id"] != "near_pi_large"}
    assert by["phi_578"]["paper"] == "0.0104" and by["phi_578"]["ok"]
    assert by["Delta_1"]["paper"] == "-0.249298"
    assert by["t_3"]["paper"] == "57657/11875"
    code, text = run(["constants", "--strict"], tmp_path)
    assert code == cli.EXIT_OK and json.loads(text)["mode"] == "strict"


def test_bmn(tmp_path):
    code, text = run(["bmn", "--m", "4", "--n", "3"], tmp_path)
    assert code == cli.EXIT_OK
    doc = json.loads(text)
    jsonschema.validate(doc, schema("bmn"))
    assert doc["known"] == "0" and abs(float(doc["b_mn"])) <= 1e-9


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["scan", "--m-from", "4", "--m-to", "5"],
    ["scan", "--m-from", "9", "--m-to", "3"],
    ["verify", "--m", "81"],
    ["verify", "--m", "42", "--n", "81"],
    ["oracle", "--m", "81", "--n", "42", "--grid-density", "0.5"],
    ["verify", "--m", "81", "--n", "42", "--strict", "--paper-tolerances"],
    ["verify", "--m", "x", "--n", "42"],
    ["constants", "--format", "xml"],
    ["constants", "--seed", str(2 ** 64)],
])
def test_usage_errors_write_nothing(tmp_path, argv):
    out = tmp_path / "report"
    assert cli.main([*argv, "-o", str(out)]) == cli.EXIT_USAGE
    assert not out.exists()


def test_io_error(tmp_path):
    target = tmp_path / "missing-dir" / "report.json"
    assert cli.main(["bmn", "--m", "4", "--n", "3", "-o", str(target)]) == cli.EXIT_IO


# -- determinism and formats --------------------------------------------------


@pytest.mark.parametrize("argv", [
    ["verify", "--m", "81", "--n", "42"],
    ["constants"],
    ["oracle", "--m", "81", "--n", "66", "--format", "csv"],
    ["scan", "--m-from", "3", "--m-to", "7", "--format", "text"],
])
def test_byte_identical_reruns(tmp_path, argv):
    _, a = run(argv, tmp_path, "a")
    _, b = run(argv, tmp_path, "b")
    assert a == b and a


def test_threads_do_not_change_reports(tmp_path, monkeypatch):
    _, a = run(["verify", "--m", "101", "--n", "52"], tmp_path, "a")
    monkeypatch.setenv("TRIGMIN_THREADS", "4")
    _, b = run(["verify", "--m", "101", "--n", "52"], tmp_path, "b")
    assert a == b


def test_numbers_are_decimal_strings(tmp_path):
    _, text = run(["oracle", "--m", "81", "--n", "42"], tmp_path)
    doc = json.loads(text)
    for key in ("argmin", "min", "f0", "slack", "margin"):
        assert isinstance(doc[key], str)
        float(doc[key])
    assert doc["f0_exact"] == str(Fraction(74046, 531360)) == "301/2160"


def test_text_format(tmp_path):
    _, text = run(["verify", "--m", "81", "--n", "42", "--format", "text"], tmp_path)
    lines = text.splitlines()
    assert lines[0].split() == ["step_id", "status", "margin"]
    assert lines[-1].split()[:2] == ["verdict", "condition_2_holds"]


# -- config files -------------------------------------------------------------


def test_config_file_and_precedence(tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("# oracle run\nm = 81\nn = 68\ngrid-density = 1\nformat = csv\n")
    cfg = cli.parse_config(["oracle", "--config", str(conf)])
    assert (cfg.m, cfg.n, cfg.format) == (81, 68, "csv")
    cfg = cli.parse_config(["oracle", "--config", str(conf), "--n", "42", "--format", "json"])
    assert (cfg.m, cfg.n, cfg.format) == (81, 42, "json")
    conf.write_text("paper_tolerances = false\n")
    assert cli.parse_config(["constants", "--config", str(conf)]).strict is True
    assert cli.parse_config(["constants", "--config", str(conf), "--paper-tolerances"]).strict is False


@pytest.mark.parametrize("body", ["m 81\n", "colour = red\n", "m = eighty\n", "strict = maybe\n"])
def test_bad_config_is_usage_error(tmp_path, body):
    conf = tmp_path / "bad.conf"
    conf.write_text(body)
    assert cli.main(["constants", "--config", str(conf), "-o", str(tmp_path / "r")]) == cli.EXIT_USAGE
    assert not (tmp_path / "r").exists()


def test_module_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "trigmin.cli", "bmn", "--m", "3", "--n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["known"] == "1/4"
    proc = subprocess.run([sys.executable, "-m", "trigmin.cli", "scan", "--m-from", "4", "--m-to", "5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 64 and proc.stdout == ""
