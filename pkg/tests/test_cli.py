import json

import pytest

from sixvertex.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coeffs_Q_at_one(capsys):
    code, out, _ = run(capsys, "coeffs", "--series", "Q", "--gamma", "1", "--order", "3")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1
    assert data["series"][0]["coefficients"][:2] == ["0/1", "4/1"]


def test_coeffs_symbolic_t(capsys):
    code, out, _ = run(capsys, "coeffs", "--series", "t(q)", "--gamma", "symbolic", "--order", "3")
    assert json.loads(out)["series"][0]["coefficients"] == [["0/1"], ["1/1"], ["-6/1", "-6/1"]]


def test_coeffs_formats_are_deterministic(capsys):
    for fmt in ("csv", "text", "json"):
        a = run(capsys, "coeffs", "--series", "S", "--gamma", "golden-ratio", "--order", "4", "--output", fmt)
        b = run(capsys, "coeffs", "--series", "S", "--gamma", "golden-ratio", "--order", "4", "--output", fmt)
        assert a == b and a[0] == 0


@pytest.mark.parametrize(
    "args",
    [
        ("coeffs", "--order", "1"),
        ("verify", "--case", "7"),
        ("verify",),
        ("coeffs", "--gamma", "banana"),
        ("coeffs", "--series", "nope"),
        ("frobnicate",),
        ("oracle", "--enum-vertices", "9"),
    ],
)
def test_usage_errors(capsys, args):
    assert run(capsys, *args)[0] == 2


def test_max_order_env(capsys, monkeypatch):
    monkeypatch.setenv("EO_THETA_MAX_ORDER", "20")
    assert run(capsys, "coeffs", "--order", "21")[0] == 2
    assert run(capsys, "coeffs", "--order", "20")[0] == 0


def test_verify_ode(capsys):
    code, out, _ = run(capsys, "verify", "--ode", "--gamma", "2/5", "--order", "30")
    data = json.loads(out)
    assert code == 0 and data["all_pass"]
    assert {"identity_name", "residual_valuation", "pass"} <= set(data["results"][0])


def test_verify_case_3(capsys):
    code, out, _ = run(capsys, "verify", "--case", "3", "--order", "40", "--json")
    assert code == 0 and json.loads(out)["all_pass"]


def test_verify_case_5_reports_failure(capsys):
    code, out, _ = run(capsys, "verify", "--case", "5", "--order", "20")
    data = json.loads(out)
    assert code == 1
    failed = [r["identity_name"] for r in data["results"] if not r["pass"]]
    assert failed == ["ODE in h (quoted form)"]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--vertices", "2", "--gamma", "1")
    data = json.loads(out)
    assert code == 0 and data["map_count"] == 9 and data["value"] == "35"


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--tutte-order", "5", "--enum-vertices", "3")
    assert code == 0 and json.loads(out)["all_pass"]


def test_relation(capsys):
    code, out, _ = run(capsys, "relation", "--case", "6")
    data = json.loads(out)
    assert code == 0 and data["recheck_pass"]
    terms = {(t["i"], t["j"]): t["c"] for t in data["relation"]["terms"]}
    assert terms[(4, 2)] == "256/1" and terms[(0, 0)] == "16/1"
