import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given

from socialcloud.cli import DEFAULT_PAYOFF, DEFAULT_SHARING, main
from socialcloud.io import (
    ParseError,
    format_graph,
    parse_graph,
    parse_params,
    report_to_csv,
    report_to_json,
)

from .conftest import networks

TRIANGLE = "agents 3\nlink 0 1\nlink 1 2  # trailing comment\n\n# full-line comment\nlink 0 2\n"


def test_parse_graph_with_comments_and_labels():
    g, labels = parse_graph("agents 3\nname 0 Medici\nname 2 Strozzi\nlink 0 1\n")
    assert g.n == 3 and g.links == frozenset({(0, 1)})
    assert labels == {0: "Medici", 2: "Strozzi"}
    g, _ = parse_graph(TRIANGLE)
    assert len(g.links) == 3


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("link 0 1\n", 1),
        ("agents 2\nedge 0 1\n", 2),
        ("agents 2\nlink 0 0\n", 2),
        ("agents 2\n\nlink 0 5\n", 3),
        ("agents 3\nname 0 A\nname 1 A\n", 3),
        ("agents 3\nname 0 A\nname 0 B\n", 3),
        ("agents x\n", 1),
        ("agents 2\nagents 3\n", 2),
        ("agents 2\nlink 0\n", 2),
    ],
)
def test_parse_graph_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as err:
        parse_graph(text)
    assert err.value.lineno == lineno
    assert str(err.value).startswith(f"line {lineno}:")


def test_empty_graph_file_is_rejected():
    with pytest.raises(ParseError):
        parse_graph("# nothing\n")


@given(networks())
def test_graph_round_trip(g):
    labels = {i: f"a{i}" for i in range(0, g.n, 2)}
    h, back = parse_graph(format_graph(g, labels))
    assert h == g and back == labels


def test_params_file_overrides_defaults_exactly():
    text = "p = 0.4\nq = 1/4  # fraction\ntheta[2] = 3\nsigma = 0\n"
    sharing, payoff = parse_params(text, DEFAULT_SHARING, DEFAULT_PAYOFF)
    assert sharing.c == Fraction(3, 10)
    assert payoff.theta_of(2) == 3 and payoff.theta_of(0) == 1
    assert payoff.sigma == 0 and payoff.xi == 1


@pytest.mark.parametrize(
    "text",
    ["p = 2\n", "p: 0.5\n", "rho = 1\n", "sigma[1] = 2\n", "q = abc\n", "theta = -1\n"],
)
def test_params_file_errors(text):
    with pytest.raises(ParseError):
        parse_params(text, DEFAULT_SHARING, DEFAULT_PAYOFF)


def test_json_numbers_have_six_decimals():
    text = report_to_json({"a": Fraction(1, 3), "b": [0.5, -0.0, 2], "c": True, "d": None})
    data = json.loads(text)
    assert '"a": 0.333333' in text and "0.500000" in text and "0.000000" in text
    assert data["b"][2] == 2 and data["c"] is True and data["d"] is None


def test_csv_projection():
    text = report_to_csv({"rows": [{"agent": 0, "gamma": Fraction(1, 8), "ok": False}]})
    assert text == "agent,gamma,ok\n0,0.125000,False\n"
    assert report_to_csv({"rows": []}) == ""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "tri.txt"
    path.write_text(TRIANGLE, encoding="utf-8")
    return path


def test_metrics_triangle_defaults(capsys, triangle_file):
    code, out, _ = run(capsys, "metrics", "--graph", str(triangle_file))
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["gamma"] for r in rows] == [0.234375] * 3
    assert '"utility": 0.358594' in out


def test_metrics_single_agent(capsys, tmp_path):
    path = tmp_path / "one.txt"
    path.write_text("agents 1\n", encoding="utf-8")
    code, out, _ = run(capsys, "metrics", "--graph", str(path))
    row = json.loads(out)["rows"][0]
    # p(1-q)xi + q p theta at the defaults
    assert code == 0 and row["closeness"] == 0 and row["gamma"] == 0 and row["utility"] == 0.5


def test_metrics_florentine(capsys):
    code, out, _ = run(capsys, "metrics", "--graph", "florentine")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 16
    assert next(r for r in rows if r["label"] == "Pucci")["gamma"] == 0


def test_whatif_by_label(capsys):
    code, out, _ = run(capsys, "whatif", "add", "Medici", "Strozzi", "--graph", "florentine")
    rep = json.loads(out)
    albizzi = next(r for r in rep["rows"] if r["label"] == "Albizzi")
    assert code == 0 and albizzi["gamma_delta"] < 0 and albizzi["sign"] == "negative"


def test_whatif_three_components(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("agents 6\nlink 0 1\nlink 2 3\nlink 4 5\n", encoding="utf-8")
    code, out, _ = run(capsys, "whatif", "add", "1", "2", "--graph", str(path), "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("agent,label,principal")
    assert [ln.split(",")[-1] for ln in lines[5:7]] == ["none", "none"]


def test_choose(capsys, tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("agents 4\nlink 0 1\nlink 1 2\nlink 2 3\n", encoding="utf-8")
    code, out, _ = run(capsys, "choose", "0", "--graph", str(path))
    rep = json.loads(out)
    assert code == 0 and [r["partner"] for r in rep["rows"]] == [3, 2]
    assert rep["rows"][0]["closeness_after"] == 2.5 and rep["rows"][0]["alpha_after"] == 0.1


def test_choose_saturated_agent(capsys, tmp_path):
    path = tmp_path / "star.txt"
    path.write_text("agents 3\nlink 0 1\nlink 0 2\n", encoding="utf-8")
    code, out, err = run(capsys, "choose", "0", "--graph", str(path))
    assert code == 0 and json.loads(out)["empty"] and "already linked" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "TWO_DIAM_NEGATIVE", "--n-max", "4")
    assert code == 0 and json.loads(out)["passed"]
    code, _, _ = run(capsys, "verify", "SIGNS_C_INDEPENDENT", "--n-max", "5")
    assert code == 2
    code, _, err = run(capsys, "verify", "NOPE")
    assert code == 1 and "unknown property" in err


def test_usage_and_parse_errors_exit_one(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("agents 2\nfrob 1\n", encoding="utf-8")
    code, _, err = run(capsys, "metrics", "--graph", str(bad))
    assert code == 1 and "line 2" in err
    with pytest.raises(SystemExit) as err:
        main(["metrics"])
    assert err.value.code == 1
    assert run(capsys, "metrics", "--graph", str(tmp_path / "missing.txt"))[0] == 1
    assert run(capsys, "scenario", "ring", "--n", "4")[0] == 1
    assert run(capsys, "whatif", "add", "Medici", "Albizzi", "--graph", "florentine")[0] == 1
    assert run(capsys, "choose", "Nobody", "--graph", "florentine")[0] == 1


def test_params_flag_and_out_file(capsys, triangle_file, tmp_path):
    params = tmp_path / "params.txt"
    params.write_text("p = 1\nq = 0\n", encoding="utf-8")
    out = tmp_path / "report.json"
    code, stdout, _ = run(capsys, "metrics", "--graph", str(triangle_file),
                          "--params", str(params), "--out", str(out))
    assert code == 0 and stdout == ""
    rep = json.loads(out.read_text(encoding="utf-8"))
    assert rep["params"]["c"] == 1.0
    # with c = 1 each neighbour gives 1/2, so gamma = 3/4
    assert rep["rows"][0]["gamma"] == 0.75


def test_scenario_ring(capsys):
    code, out, _ = run(capsys, "scenario", "ring", "--n", "10")
    rep = json.loads(out)
    assert code == 0 and rep["closed_form_matches"] and rep["gamma_increasing"]
    assert [r["distance"] for r in rep["rows"]] == [2, 3, 4, 5]


def test_scenario_florentine(capsys):
    code, out, _ = run(capsys, "scenario", "florentine")
    rep = json.loads(out)
    assert code == 0 and rep["dataset_variant"] == "marriage"
    assert rep["variant_matches_closeness"] and rep["fit_within_tolerance"]
    assert rep["gamma"]["Pucci"]["exact_zero"]


def test_reports_are_byte_identical(tmp_path):
    cmd = [sys.executable, "-m", "socialcloud", "whatif", "del", "Medici", "Acciaiuoli",
           "--graph", "florentine"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"{")


def test_module_entry_point_reports_usage_errors():
    proc = subprocess.run([sys.executable, "-m", "socialcloud", "bogus"], capture_output=True)
    assert proc.returncode == 1

