from __future__ import annotations

import json
import subprocess
import sys

import pytest

from orbjac.cli import main
from test_cases import TOML


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_single_case(capsys):
    code, out, _ = run(capsys, "verify", "--case", "z3", "--series-order", "60")
    assert code == 0
    assert out.splitlines()[0] == "PASS z3"
    assert "series     ok  (to order 60)" in out


def test_verify_all_as_json(capsys):
    code, out, _ = run(capsys, "verify", "--case", "all", "--series-order", "50", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["schema"] == 1 and data["ok"] is True
    assert [c["case"] for c in data["cases"]] == ["z3", "z4", "z6"]
    for entry in data["cases"]:
        assert {"case", "theorem_ok", "trace_ok", "reductions_ok", "series_ok", "lhs", "rhs", "mu"} <= set(entry)
    assert [c["mu"] for c in data["cases"]] == [8, 9, 10]


def test_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "verify", "--case", "z4", "--series-order", "50")
    _, raw, _ = run(capsys, "verify", "--case", "z4", "--series-order", "50", "--json")
    entry = json.loads(raw)["cases"][0]
    assert f"lhs        {entry['lhs']}" in text
    assert f"rhs        {entry['rhs']}" in text


def test_output_is_deterministic(capsys):
    first = run(capsys, "jacobian", "--case", "z6", "--info", "--json")
    second = run(capsys, "jacobian", "--case", "z6", "--info", "--json")
    assert first == second


def test_failed_verification_exits_1(capsys, tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text(TOML.replace("expected_mu = 8", "expected_mu = 7"))
    code, out, _ = run(capsys, "verify", "--case-file", str(path), "--series-order", "50")
    assert code == 1
    assert out.startswith("FAIL rescaled")
    assert "mu         FAILED" in out


def test_sigma_subcommand(capsys):
    code, out, _ = run(capsys, "sigma", "--case", "z3", "--h", "1", "--hprime", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1
    assert data["sector"] == "1" and data["reduced"] is False
    code, out, _ = run(capsys, "sigma", "--case", "z6", "--h", "1", "--hprime", "5", "--reduced")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "sigma[chi,chi^5] -> sector 1"
    assert lines[1].endswith("*x^2")


def test_jacobian_subcommand(capsys):
    code, out, _ = run(capsys, "jacobian", "--case", "z4", "--info")
    assert code == 0
    assert out.splitlines()[0] == "mu = 9"
    assert "hessian class: " in out
    code, out, _ = run(capsys, "jacobian", "--case", "z4", "--json")
    assert json.loads(out) == {"schema": 1, "case": "z4", "mu": 9, "order": "grlex"}


def test_reduce_subcommand(capsys):
    code, out, _ = run(capsys, "reduce", "--case", "z4", "--poly", "x*y*z")
    assert code == 0
    assert out.strip() == "2*q^5*x^2"


def test_series_subcommand(capsys):
    code, out, _ = run(capsys, "series", "--name", "c333", "--series-order", "60")
    assert code == 0 and out.splitlines() == ["1: 1", "25: -1", "49: -1"]
    code, out, _ = run(capsys, "series", "--name", "phi", "--series-order", "100", "--json")
    data = json.loads(out)
    assert data["schema"] == 1 and data["coefficients"][0] == {"exponent": 9, "coeff": "-1"}
    code, out, _ = run(capsys, "series", "--identity", "z4", "--series-order", "120")
    assert code == 0 and out.strip() == "PASS z4 identity to order 120"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify"],
        ["sigma", "--case", "all", "--h", "1", "--hprime", "2"],
        ["reduce", "--case", "z3", "--poly", "x^(-1)"],
        ["reduce", "--case", "z3", "--poly", "x + u"],
        ["verify", "--case", "z7"],
        ["verify", "--case", "z3", "--series-order", "0"],
        ["series"],
        ["frobnicate"],
        ["verify", "--case-file", "/nonexistent/case.toml"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_parse_error_message_has_position(capsys):
    code, _, err = run(capsys, "reduce", "--case", "z3", "--poly", "x + * y")
    assert code == 2
    assert "column" in err or "col" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orbjac.cli", "reduce", "--case", "z3", "--poly", "3*phi*x^2 - psi*y*z"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0"
