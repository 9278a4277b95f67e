import json

from orbitflex.cli import main

KLEIN = "x^3*y + y^3*z + z^3*x"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "--from", "3", "--to", "10")
    assert code == 0
    for value in ("216", "14280", "188340", "1119960", "4508280",
                  "14318256", "38680740", "92790480"):
        assert value in out
    assert "2^3*3^3" in out and "2^4*3*317*941" in out


def test_table_json_integers_are_strings(capsys):
    code, out, _ = run(capsys, "--json", "table", "--from", "3", "--to", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"][0]["predegree"] == "216"
    assert payload["rows"][1]["factorization"] == [["2", "3"], ["3", "1"], ["5", "1"], ["7", "1"], ["17", "1"]]


def test_predegree_klein_with_aut(capsys):
    code, out, _ = run(capsys, "predegree", KLEIN, "--aut", "168")
    assert code == 0
    assert "predegree: 14280" in out
    assert "orbit degree: 85" in out


def test_degree_requires_divisibility(capsys):
    code, _, err = run(capsys, "degree", "x^4+y^4+z^4", "--aut", "97")
    assert code == 1
    assert "97" in err


def test_degree_fermat_quartic(capsys):
    code, out, _ = run(capsys, "degree", "x^4+y^4+z^4", "--aut", "96")
    assert code == 0
    assert "orbit degree: 112" in out


def test_flexes_output(capsys):
    code, out, _ = run(capsys, "flexes", "x^4+y^4+z^4")
    assert code == 0
    assert "order 2 x 12" in out
    assert "f2=48 f3=96 f4=192 f5=384" in out


def test_syntax_error_exit_code(capsys):
    code, _, err = run(capsys, "flexes", "x^3 + ")
    assert code == 2
    assert "position" in err


def test_non_homogeneous_exit_code(capsys):
    code, _, err = run(capsys, "flexes", "x^2 + y^3")
    assert code == 2


def test_singular_curve_exit_code(capsys):
    code, _, err = run(capsys, "flexes", "x^2*z - y^3")
    assert code == 2
    assert "witness" in err


def test_verify_chow_all_pass(capsys):
    code, out, _ = run(capsys, "verify-chow")
    assert code == 0
    assert out.count("PASS") == 9
    assert "FAIL" not in out


def test_verify_chow_json(capsys):
    code, out, _ = run(capsys, "--json", "verify-chow")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_passed"] is True
    assert len(payload["identities"]) == 9


def test_pgl2_command(capsys):
    code, out, _ = run(capsys, "pgl2", "--multiplicities", "2,1,1")
    assert code == 0
    assert "formula: 12" in out and "oracle:  12" in out


def test_pgl2_bad_list(capsys):
    code, _, err = run(capsys, "pgl2", "--multiplicities", "2,x")
    assert code == 2


def test_bound_command(capsys):
    code, out, _ = run(capsys, "bound", "4")
    assert code == 0
    assert "168" in out


def test_bound_out_of_range(capsys):
    code, _, err = run(capsys, "bound", "11")
    assert code == 2


def test_byte_identical_reruns(capsys):
    code1, out1, _ = run(capsys, "--seed", "3", "predegree", KLEIN)
    code2, out2, _ = run(capsys, "--seed", "3", "predegree", KLEIN)
    assert code1 == code2 == 0
    assert out1 == out2


def test_json_and_text_carry_same_numbers(capsys):
    _, text, _ = run(capsys, "degree", "x^4+y^4+z^4", "--aut", "96")
    _, js, _ = run(capsys, "--json", "degree", "x^4+y^4+z^4", "--aut", "96")
    payload = json.loads(js)
    assert f"predegree: {payload['predegree']}" in text
    assert f"orbit degree: {payload['orbit_degree']}" in text
    for route, value in payload["routes"].items():
        assert f"via {route.replace('_', ' ')}: {value}" in text


def test_curve_from_file(tmp_path, capsys):
    path = tmp_path / "curve.txt"
    path.write_text("x^3 + y^3 + z^3\n")
    code, out, _ = run(capsys, "flexes", "--from-file", str(path))
    assert code == 0
    assert "order 1 x 9" in out


def test_missing_file(capsys):
    code, _, err = run(capsys, "flexes", "--from-file", "/nonexistent/curve.txt")
    assert code == 2


def test_json_schema_key_sets(capsys):
    _, out, _ = run(capsys, "--json", "flexes", "x^3+y^3+z^3")
    payload = json.loads(out)
    assert set(payload) == {"command", "curve", "curve_degree", "profile",
                            "weighted_total", "sums"}
    assert set(payload["sums"]) == {"f2", "f3", "f4", "f5"}

    _, out, _ = run(capsys, "--json", "predegree", "x^3+y^3+z^3")
    payload = json.loads(out)
    assert set(payload) == {"command", "curve", "curve_degree", "profile",
                            "sums", "predegree", "routes", "factorization",
                            "aut_order", "orbit_degree"}
    assert payload["aut_order"] is None and payload["orbit_degree"] is None
    assert set(payload["routes"]) == {"blowup_sum", "flex_orders", "power_sums"}

    _, out, _ = run(capsys, "--json", "bound", "5")
    assert set(json.loads(out)) == {"command", "d", "bound"}

    _, out, _ = run(capsys, "--json", "pgl2", "--multiplicities", "1,1,1,1")
    assert set(json.loads(out)) == {"command", "multiplicities", "d",
                                    "formula", "oracle", "agree"}


def test_fractional_coefficient_curve_through_cli(capsys):
    code, out, _ = run(capsys, "flexes", "1/2x^3 + 1/2y^3 + 1/2z^3")
    assert code == 0
    assert "order 1 x 9" in out


def test_genericity_failure_exits_one(capsys):
    # singular only at irrational points: neither certificate nor witness
    code, _, err = run(capsys, "flexes", "(x^2 - 2y^2)^2 + z^3*x")
    assert code == 1
    assert "could not certify" in err


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "orbitflex", "bound", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "168" in proc.stdout


def test_missing_curve_argument(capsys):
    code, _, err = run(capsys, "flexes")
    assert code == 2
    assert "no curve" in err
