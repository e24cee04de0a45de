import json
import subprocess
import sys

import pytest

from downup.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "structured", *argv)
    assert err == ""
    return code, json.loads(out)


def test_indices_integer_point(capsys):
    code, out, err = run(capsys, "--d", "1", "--n1", "3", "--n2", "2", "indices")
    assert code == 0 and err == ""
    assert out.splitlines() == ["I = {0, 1}", "J = {0, 1}",
                                "case: b1>b2 / b1=b2+1"]
    code, out, err = run(capsys, "--d", "1", "--n1", "2", "--n2", "5", "indices")
    assert code == 0
    assert out.splitlines()[:2] == ["I = {0, 1, 2, 3}", "J = {0, 1, 2, 3}"]


def test_indices_accepts_unit_slope(capsys):
    # b1 = 1 makes a degenerate algebra, but the index sets themselves
    # stay well defined, so this command validates only b1 != 0
    code, out, err = run(capsys, "--d", "1", "--n1", "1", "--n2", "5", "indices")
    assert code == 0
    assert "I = {0, 1, 2, 3, 4, 5, 6}" in out
    assert "case: b1<b2 / b1<b2" in out


def test_indices_negative_slope(capsys):
    code, out, err = run(capsys, "--d", "1", "--n1", "-2", "--n2", "3", "indices")
    assert code == 0
    assert out.splitlines()[:2] == ["I = N", "J = N"]


def test_indices_empty_note(capsys):
    code, out, err = run(capsys, "--d", "2", "--n1", "-4", "--n2", "1", "indices")
    assert code == 0
    assert "I = {}" in out and "note: no solutions" in out


def test_indices_structured(capsys):
    code, doc = run_json(capsys, "--d", "2", "--n1", "3", "--n2", "3", "indices")
    assert code == 0
    assert doc["command"] == "indices"
    assert doc["inputs"] == {"d": 2, "n1": 3, "n2": 3}
    assert doc["result"]["I"] == "{0, 2}"
    assert doc["result"]["J"] == "{1}"
    assert doc["witnesses"] == {"b1": "3/2", "b2": "3/2"}


def test_conformal_command(capsys):
    code, out, err = run(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "--f", "0,1", "conformal")
    assert code == 0
    assert out.strip() == "g = -1/(z^3 - z)*h"
    code, doc = run_json(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "--f", "0,1", "conformal")
    assert doc["witnesses"]["back_substitution"] == "0"
    assert doc["witnesses"]["support_matches"] is True


def test_conformal_scalar_coefficients(capsys):
    # coefficients are scalar expressions, not just integers
    code, out, err = run(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "--f", "z^2,0,1/2", "conformal")
    assert code == 0 and out.startswith("g = ")


def test_mul_with_oracle_witness(capsys):
    code, doc = run_json(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "--f", "0,1", "mul", "x*y", "y*x")
    assert code == 0
    assert doc["witnesses"]["oracle_agrees"] is True
    assert doc["inputs"]["lhs"] == "x*y"


def test_mul_beyond_oracle_reach(capsys):
    # free expansion of x^5 * x^4 is longer than the rewrite bound; the
    # cross-check steps aside instead of failing
    code, doc = run_json(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "--f", "0,1", "mul", "x^5", "x^4")
    assert code == 0
    assert doc["result"] == "x^9"
    assert "oracle_agrees" not in doc["witnesses"]


def test_translate_command(capsys):
    code, out, err = run(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "--f", "0,1", "translate", "d*u")
    assert code == 0
    code2, out2, err2 = run(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                            "--f", "0,1", "mul", "x*y", "1")
    assert out == out2


def test_derive_c_type(capsys):
    code, out, err = run(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "--f", "0,1", "derive", "--derivation", "c0 = h", "x")
    assert code == 0
    assert out.strip() == "h*x"


def test_derive_alpha_type(capsys):
    code, doc = run_json(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "--f", "0,1", "derive", "--derivation",
                         "w = 1; alpha_h = {1: 1}; "
                         "alpha_k = {0: (z - 1)/(z^3 - 1)}", "h")
    assert code == 0
    assert doc["result"] == "h*k^2*x"
    assert doc["witnesses"]["weights"] == [1]


def test_derive_rejects_uncoupled_values(capsys):
    code, out, err = run(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "--f", "0,1", "derive", "--derivation",
                         "w = 1; alpha_h = {1: 1}; alpha_k = {0: 1}", "h")
    assert code == 2
    assert "error:" in err and "hk = kh" in err


def test_inner_witness(capsys):
    code, out, err = run(capsys, "--d", "1", "--n1", "2", "--n2", "5",
                         "inner", "--c0", "h*k^3")
    assert code == 0
    assert out.strip() == "non-inner at (1, 3)"


def test_inner_solution(capsys):
    code, doc = run_json(capsys, "--d", "1", "--n1", "2", "--n2", "5",
                         "inner", "--c0", "h")
    assert code == 0
    assert doc["result"] == "1/(z^5 - z^2)*h"
    assert doc["witnesses"]["back_substitution"] == "0"


def test_verify_spec_free(capsys):
    code, out, err = run(capsys, "--samples", "25", "verify", "field")
    assert code == 0
    assert out.splitlines() == ["field: 25/25", "all checks passed"]


def test_verify_with_parameters(capsys):
    code, doc = run_json(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "--f", "0,1", "--samples", "10", "--seed", "3",
                         "verify", "phi", "indices", "relations")
    assert code == 0
    names = set(doc["witnesses"])
    assert names == {"phi", "indices", "relations"}
    assert doc["result"]["passed"] == doc["result"]["total"]


def test_verify_requires_parameters_when_needed(capsys):
    code, out, err = run(capsys, "verify", "phi")
    assert code == 2
    assert "missing parameters" in err


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "point.cfg"
    cfg.write_text("# standard point\nd = 1\nn1 = 3\nn2 = 2\nf = 0,1\n")
    code, out, err = run(capsys, "--config", str(cfg), "conformal")
    assert code == 0
    assert out.strip() == "g = -1/(z^3 - z)*h"


def test_flags_override_config(tmp_path, capsys):
    cfg = tmp_path / "point.cfg"
    cfg.write_text("d = 1\nn1 = 2\nn2 = 5\nformat = structured\n")
    code, out, err = run(capsys, "--config", str(cfg), "--n2", "7",
                         "inner", "--c0", "h")
    assert code == 0
    doc = json.loads(out)
    assert doc["inputs"]["n2"] == 7


def test_bad_config_line(tmp_path, capsys):
    cfg = tmp_path / "broken.cfg"
    cfg.write_text("d: 1\n")
    code, out, err = run(capsys, "--config", str(cfg), "verify", "field")
    assert code == 2 and "bad config line" in err


def test_error_reporting(capsys):
    code, out, err = run(capsys, "--d", "1", "conformal")
    assert code == 2
    assert err.startswith("error: missing parameters: n1, n2")

    code, out, err = run(capsys, "--d", "1", "--n1", "1", "--n2", "2",
                         "--f", "0,1", "conformal")
    assert code == 2 and "reciprocal integer" in err

    code, out, err = run(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "--f", "0,1", "mul", "x*(", "1")
    assert code == 2 and "position" in err

    code, out, err = run(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "verify", "units")
    assert code == 2 and "unknown suite" in err


def test_missing_f_is_reported(capsys):
    code, out, err = run(capsys, "--d", "1", "--n1", "3", "--n2", "2",
                         "mul", "x", "y")
    assert code == 2
    assert "missing f" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "downup.cli",
         "--d", "1", "--n1", "3", "--n2", "2", "indices"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "I = {0, 1}" in proc.stdout
