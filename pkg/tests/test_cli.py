import io
import json
import os
import subprocess
import sys

import pytest

from nonarch.cli import evaluate_line, main, run_batch, run_repl


def run_cli(*args, stdin=None, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    return subprocess.run(
        [sys.executable, "-m", "nonarch", *args], input=stdin, capture_output=True, text=True, env=full_env
    )


@pytest.mark.parametrize(
    "expr, kind, value",
    [
        ("class(1/w)", "magnitude", "infinitesimal,pos"),
        ("class(w)", "magnitude", "infinite,pos"),
        ("class(0)", "magnitude", "infinitesimal,zero"),
        ("rel(WW(0,eps), WW(0,1))", "relation", "left-in-right"),
        ("st((2*w+1)/(w+5))", "rational", "2"),
        ("st(1/3 + eps)", "rational", "1/3"),
        ("(2*w^2+1/3)/(w+5)", "germ", "(2*w^2 + 1/3) / (w + 5)"),
        ("eps < 1/1000000", "boolean", "true"),
        ("in_monad(eps, 0)", "boolean", "true"),
        ("in_galaxy(w, 0)", "boolean", "false"),
        ("WW(0, eps)", "world", "WW(0, 1 / w)"),
        ("case(1, 1)", "case", "1"),
        ("sit(1, eps)", "situation", "2"),
        ("inv(w)", "germ", "1 / w"),
        ("witness(eps)", "germ", "1"),
    ],
)
def test_eval_records(expr, kind, value):
    rec = evaluate_line(expr)
    assert (rec["kind"], rec["value"]) == (kind, value)


@pytest.mark.parametrize(
    "expr, error, column",
    [
        ("st(w)", "NotFinite", 1),
        ("1/0", "DivisionByZero", 2),
        ("rel(1, 2)", "TypeMismatch", 5),
        ("WW(0, -1)", "NonpositiveStep", 1),
        ("nope(1)", "UnknownFunction", 1),
        ("1 +", "SyntaxError", 4),
        ("w ^ eps", "IntegerExponentRequired", 5),
        ("iso(WW(0,1), w)", "NotMember", 1),
    ],
)
def test_error_records(expr, error, column):
    rec = evaluate_line(expr)
    assert rec["kind"] == "error" and rec["error"] == error
    assert f"column {column}" in rec["value"]


def test_eval_command(capsys):
    assert main(["eval", "class(1/w)"]) == 0
    assert capsys.readouterr().out == "magnitude: infinitesimal,pos\n"
    assert main(["eval", "st(w)"]) == 2
    assert "NotFinite at line 1, column 1" in capsys.readouterr().err
    assert main(["eval", "--json", "case(w, eps)"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["detail"] == {"case": 8, "gal0": "intersects-partially", "length": "infinite", "in_monad": False}


def test_batch_json_records_and_order(tmp_path, capsys):
    f = tmp_path / "in.txt"
    f.write_text("class(w)\n\n# comment\n1/0\nst(1/2 + eps)\n")
    assert main(["batch", str(f), "--json"]) == 2
    lines = capsys.readouterr().out.splitlines()
    recs = [json.loads(x) for x in lines]
    assert [r["input"] for r in recs] == ["class(w)", "1/0", "st(1/2 + eps)"]
    assert recs[0] == {"input": "class(w)", "kind": "magnitude", "value": "infinite,pos"}
    assert recs[1]["error"] == "DivisionByZero"
    assert list(recs[1]) == ["input", "kind", "value", "error"]
    assert recs[2]["value"] == "1/2"


def test_batch_is_byte_deterministic(tmp_path):
    f = tmp_path / "in.txt"
    f.write_text("\n".join(["(2*w^2+1/3)/(w+5)", "case(eps, w)", "rel(WW(w,1), WW(0,1))", "st(w)", "0.125 * w"]))
    a = run_cli("batch", str(f), "--json")
    b = run_cli("batch", str(f), "--json")
    assert a.returncode == b.returncode == 2
    assert a.stdout.encode() == b.stdout.encode() and a.stdout


def test_empty_file(tmp_path, capsys):
    f = tmp_path / "empty.txt"
    f.write_text("")
    assert main(["batch", str(f), "--json"]) == 0
    assert capsys.readouterr().out == ""


def test_missing_file(tmp_path, capsys):
    assert main(["batch", str(tmp_path / "missing.txt")]) == 1
    assert "cannot read" in capsys.readouterr().err


def test_batch_from_stdin():
    res = run_cli("batch", "-", stdin="class(eps)\n")
    assert res.returncode == 0
    assert res.stdout == "magnitude: infinitesimal,pos\n"


def test_repl_matches_batch():
    lines = ["class(w)", "st(w)", "", "rel(WW(0,eps), WW(0,1))", "case(0, eps)", "w^2 - w"]
    text = "\n".join(lines) + "\n"
    batch_out, repl_out = io.StringIO(), io.StringIO()
    assert run_batch(io.StringIO(text), batch_out) == 2
    assert run_repl(io.StringIO(text + "quit\nclass(1)\n"), repl_out) == 2
    assert repl_out.getvalue() == batch_out.getvalue()
    assert len(batch_out.getvalue().splitlines()) == 5


def test_filters_command(capsys):
    assert main(["filters", "3", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["filter_count"] == 7 and rep["ultrafilter_count"] == 3
    assert rep["checks"]["round_trip"] and all(rep["checks"].values())
    entry = rep["filters"][0]
    assert set(entry) == {"family", "is_ultrafilter", "ideal_co_support", "ideal_maximal", "quotient"}
    assert set(entry["quotient"]) == {"dim", "field", "order"}

    assert main(["filters", "1", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["filter_count"] == 1
    assert rep["filters"][0]["quotient"] == {"dim": 1, "field": True, "order": "total"}

    assert main(["filters", "3"]) == 0
    assert "filters: 7, ultrafilters: 3" in capsys.readouterr().out


@pytest.mark.parametrize("k", ["9", "0"])
def test_filters_out_of_range(k, capsys):
    assert main(["filters", k]) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_witness_command(capsys):
    assert main(["witness", "1/w"]) == 0
    out = capsys.readouterr().out
    assert out.count("certified") == 4 and "FAILED" not in out
    assert main(["witness", "-1"]) == 2
    assert "NonpositiveStep" in capsys.readouterr().err


def test_degree_limit_from_environment():
    res = run_cli("eval", "w^10", env={"NONARCH_MAX_DEGREE": "8"})
    assert res.returncode == 2
    assert "DegreeLimit" in res.stderr
    assert run_cli("eval", "w^10").returncode == 0
    assert run_cli("eval", "w^65").returncode == 2
