import os
import subprocess
import sys

import pytest

from truthsem.cli import RunReport, main, run
from truthsem.graph import RANGE_NOTE


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_defaults_to_all_bindings(capsys):
    code, out, _ = call(capsys, "eval", "liar")
    assert code == 0
    assert "L := F(L)" in out


def test_eval_query_row(capsys):
    code, out, _ = call(capsys, "eval", "liar", "-s", "T([~F(L)])", "--seed-closure", "--json")
    rep = RunReport.from_json(out)
    assert code == 0
    assert [(r.primary, r.final) for r in rep.verdicts] == [("|", "⊥")]


def test_eval_query_not_computed_without_seeding(capsys):
    code, out, _ = call(capsys, "eval", "liar", "-s", "T([~F(L)])", "--json")
    assert code == 0
    assert [(r.primary, r.final) for r in RunReport.from_json(out).verdicts] == [(None, "⊥")]


def test_binding_names_as_queries(capsys):
    code, out, _ = call(capsys, "eval", "strong_liar", "-s", "LL", "--json")
    (row,) = RunReport.from_json(out).verdicts
    assert (row.name, row.primary, row.final) == ("LL", "|", "⊤")


def test_outside_closure_and_auto_extend(capsys):
    query = "T([T([F(L)])])"
    code, _, err = call(capsys, "eval", "liar", "-s", query)
    assert code == 3 and "not registered" in err
    code, out, _ = call(capsys, "eval", "liar", "-s", query, "--auto-extend", "--json")
    assert code == 0
    assert [(r.primary, r.final) for r in RunReport.from_json(out).verdicts] == [("|", "⊥")]


def test_fixpoints_census(capsys):
    code, out, _ = call(capsys, "fixpoints", "truthteller", "--json")
    rep = RunReport.from_json(out)
    assert code == 0 and (rep.n_fixed, rep.n_intrinsic) == (3, 1)
    assert [r.values for r in rep.fixed_points] == [["|"], ["⊥"], ["⊤"]]
    assert [r.intrinsic for r in rep.fixed_points] == [True, False, False]


def test_laws_curry(capsys):
    code, out, _ = call(capsys, "laws", "curry")
    assert code == 0
    assert "35/35 schemas pass" in out


def test_laws_reports_tarski_failures(capsys):
    code, out, _ = call(capsys, "laws", "strong_liar", "--json")
    rep = RunReport.from_json(out)
    assert code == 0 and "T(LL) <-> ~T(LL)" in rep.tarski_failures


def test_laws_equivalence_pairs(capsys, tmp_path):
    th = tmp_path / "taut.th"
    th.write_text("pred q/0 = { () }\nlet L := ~T(L)\nlet A := T(L) | ~T(L)\nlet B := q | ~q\n")
    code, out, _ = call(capsys, "laws", str(th), "-s", "A", "-s", "B")
    assert code == 0
    assert "T/F/U verdicts differ" in out


def test_graph_and_out(capsys, tmp_path):
    code, out, _ = call(capsys, "graph", "liar")
    assert code == 0 and "digraph {" in out and "// finite range" in out
    target = tmp_path / "g.dot"
    code, out, _ = call(capsys, "fixpoints", "liar", "--dot", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8").startswith("// truthsem fixpoints")


def test_budget_exceeded(capsys, tmp_path):
    th = tmp_path / "many.th"
    th.write_text("".join(f"let X{i} := T(X{i})\n" for i in range(4)))
    code, out, _ = call(capsys, "fixpoints", str(th), "--budget", "3", "--json")
    rep = RunReport.from_json(out)
    assert code == 2 and not rep.complete
    assert rep.least == ["|"] * 4 and rep.n_fixed is None
    code, out, _ = call(capsys, "eval", str(th), "--budget", "3")
    assert code == 2 and "INCOMPLETE" in out


@pytest.mark.parametrize("argv", [
    ["eval", "no/such/file.th"],
    ["eval", "liar", "-s", "T(("],
    ["eval", "liar", "-s", "Z(a)"],
    ["frobnicate", "liar"],
    ["eval", "liar", "--budget", "-1"],
])
def test_input_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 3 and err


def test_reserved_redeclaration(capsys, tmp_path):
    th = tmp_path / "bad.th"
    th.write_text("pred T/1 = { }\n")
    code, _, err = call(capsys, "eval", str(th))
    assert code == 3 and "built-in" in err


@pytest.mark.parametrize("command", ["eval", "fixpoints", "laws", "graph"])
def test_every_report_states_the_range(capsys, command):
    for fmt in ([], ["--json"]):
        _, out, _ = call(capsys, command, "logician", *fmt)
        assert RANGE_NOTE in out


@pytest.mark.parametrize("command", ["eval", "fixpoints", "laws"])
def test_json_round_trip(command):
    text, _ = run([command, "logician", "--json"])
    rep = RunReport.from_json(text)
    assert rep.to_json() == text
    assert RunReport.from_json(rep.to_json()) == rep


def test_timing_is_opt_in():
    text, _ = run(["eval", "liar", "--json"])
    assert RunReport.from_json(text).timing is None
    text, _ = run(["eval", "liar", "--json", "--timing"])
    assert RunReport.from_json(text).timing >= 0


def test_byte_identical_across_processes():
    outs = set()
    for seed in ("1", "2", "3"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        for command in ("fixpoints", "laws", "graph"):
            proc = subprocess.run([sys.executable, "-m", "truthsem", command, "logician"],
                                  capture_output=True, env=env, check=True)
            outs.add((command, proc.stdout))
    assert len(outs) == 3
