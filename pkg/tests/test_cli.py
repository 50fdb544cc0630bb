import json
import shutil
import subprocess
from fractions import Fraction

import pytest

from asymideal import MonomialIdeal, PolynomialIdeal
from asymideal.cli import ExperimentSpec, InputError, main, read_csv_table, render, sequence_report
from asymideal.textio import ParseError, decimal12, format_polynomial, parse_ideal


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_ideal_examples():
    a = parse_ideal("x^2, y^3")
    assert isinstance(a, MonomialIdeal) and set(a.gens) == {(2, 0), (0, 3)}
    I = parse_ideal("x^2 + y^2, x*y")
    assert isinstance(I, PolynomialIdeal) and len(I.generators) == 2
    assert parse_ideal("x^0").is_unit
    assert parse_ideal("x1*x4^2").dim == 4
    assert format_polynomial(I.generators[0]) == "x1^2 + x2^2"


@pytest.mark.parametrize("text", ["x^2,, y", "x^", "x^2 y", "w^2", "", "x^1/2"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ideal(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_ideal("x^2, y^3 $")
    assert info.value.position == 9


def test_decimal_rendering():
    assert decimal12(Fraction(5, 7)) == "0.714285714286"
    assert decimal12(Fraction(1, 8)) == "0.125"


def test_invariants_monomial(capsys):
    code, out, _ = run(capsys, "invariants", "x^2, y^3")
    assert code == 0
    assert "e: 6" in out and "length: 6" in out and "lct: 5/6" in out
    assert "6 >= 144/25 ok" in out


def test_invariants_maximal_ideal_equality_case(capsys):
    code, out, _ = run(capsys, "invariants", "x, y, z")
    assert code == 0
    assert "e: 1" in out and "lct: 3" in out and "1 >= 1 ok" in out


def test_invariants_multiplier(capsys):
    code, out, _ = run(capsys, "invariants", "x^2, y^3", "--lambda", "1")
    assert code == 0 and "multiplier ideal at 1: x1, x2" in out


def test_invariants_polynomial_powers(capsys):
    code, out, _ = run(capsys, "invariants", "x^2 + y^2, x*y", "--order", "grevlex", "--powers", "4")
    assert code == 0
    assert "length: 4" in out and "e(in): 5" in out
    assert "upper bound for e(I): 17/4" in out


def test_sequence_rows_and_envelopes():
    report = sequence_report(ExperimentSpec(["powers", "x^2,y^3"], M=20))
    assert [r["m"] for r in report["rows"]] == list(range(1, 21))
    assert all(r["mult"] == 6 for r in report["rows"])
    assert abs(report["rows"][-1]["vol"] - 6) < 1
    report = sequence_report(ExperimentSpec(["maxpow", "2"], M=5))
    assert all(r["mult"] == 4 for r in report["rows"])


def test_sequence_all_columns(tmp_path):
    spec = ExperimentSpec(["weighted", "5", "7", "5"], M=6, p_budget=8, r_budget=4,
                          columns=("MULT", "VOL", "BRACKET", "ORD", "SATURATE", "COLON"))
    report = sequence_report(spec)
    row = report["rows"][5]
    assert set(row) == {"m", "mult", "vol", "lct", "lct_b", "ord", "mult_sat", "witness_r", "colon_vol"}
    assert report["rows"][0]["lct_b"] is None  # b_1 is the unit ideal
    names = [e["name"] for e in report["envelopes"]]
    assert "bracket_width" in names
    for fmt in ("text", "json", "csv"):
        assert render(report, fmt)


def test_csv_round_trip():
    report = sequence_report(ExperimentSpec(["weighted", "5", "7", "5"], M=12, columns=("MULT", "VOL", "LCT")))
    back = read_csv_table(render(report, "csv"))
    assert back == report["rows"]


def test_json_schema(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, _, _ = run(capsys, "sequence", "maxpow", "1", "--M", "4", "--format", "json", "--out", str(out_file))
    assert code == 0
    data = json.loads(out_file.read_text())
    assert set(data) == {"meta", "rows", "envelopes"}
    assert {"version", "M", "p_budget", "r_budget", "order", "seed"} <= set(data["meta"])
    assert data["rows"][1]["mult"] == {"exact": "1", "decimal": "1"}


def test_table_descriptor(capsys, tmp_path):
    table = tmp_path / "t.txt"
    table.write_text("# powers of the maximal ideal\n1: x, y\n2: x^2, x*y, y^2\n\n3: x^3, x^2*y, x*y^2, y^3\n")
    code, out, _ = run(capsys, "sequence", "table", str(table), "--M", "3", "--format", "csv")
    assert code == 0
    assert [r["mult"] for r in read_csv_table(out)] == [1, 1, 1]
    code, _, err = run(capsys, "sequence", "table", str(table), "--M", "4")
    assert code == 2 and "no entry" in err


def test_same_seed_same_report(capsys):
    first = run(capsys, "verify", "LCBOUND", "--seed", "3", "--count", "10")
    second = run(capsys, "verify", "lcbound", "--seed", "3", "--count", "10")
    assert first == second and first[0] == 0
    assert "LCBOUND: PASS passed=" in first[1]


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys, "invariants", "x^2,, y")[0] == 2
    assert run(capsys, "invariants", "x^2", "--lambda", "0.5")[0] == 2
    assert run(capsys, "sequence", "weighted", "5")[0] == 2
    assert run(capsys, "sequence", "maxpow", "1", "--columns", "BOGUS")[0] == 2
    assert run(capsys, "sequence", "maxpow", "1", "--M", "0")[0] == 2
    assert run(capsys, "verify", "TEISSIER", "--count", "0")[0] == 2
    monkeypatch.setenv("AI_WORK_LIMIT", "0")
    code, _, err = run(capsys, "invariants", "x^2 + y^2, x*y")
    assert code == 3 and "work limit" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    from asymideal import checks

    def broken(seed, count):
        rep = checks.SuiteReport("TEISSIER")
        rep.record(False, "forced")
        return rep

    monkeypatch.setitem(checks.SUITES, "TEISSIER", broken)
    code, out, _ = run(capsys, "verify", "TEISSIER")
    assert code == 1 and "failure: forced" in out


@pytest.mark.skipif(shutil.which("ai") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["ai", "invariants", "x^2,y^3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "ideal: x1^2, x2^3"
