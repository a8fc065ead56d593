"""Command-line interface: exit codes, text output, machine output parity.

The golden checks run each verb in both formats and require (a) the set of
integers mentioned to be identical and (b) row-level agreement between the
parsed text table and the machine payload.
"""

import json
import re

import pytest

from blocksys.cli import run
from blocksys.corpus import cyclic, dual_group_algebra, sweedler
from blocksys.fileformat import dump_path


def _ints(s: str) -> set[int]:
    return {int(tok) for tok in re.findall(r"-?\d+", s)}


def _machine(capsys, argv):
    code = run(argv + ["--format", "machine"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def _text(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr().out


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_corpus_validate_analyze_verify_pipeline(workdir, capsys):
    code, out = _text(capsys, ["corpus", "sweedler", "--out", "s.json"])
    assert code == 0
    assert "wrote sweedler (dimension 4) to s.json" in out

    code, out = _text(capsys, ["validate", "s.json"])
    assert code == 0
    assert "valid: True" in out
    assert "hopf data of dimension 4" in out

    code, out = _text(capsys, ["analyze", "s.json"])
    assert code == 0
    assert "dimension: 4" in out
    assert "filtration level dimensions: 2, 4" in out
    assert "group-like elements: 2" in out
    assert "block level 0 sizes 1x1: dimension 2" in out
    assert "block level 1 sizes 1x1: dimension 2" in out

    code, out = _text(capsys, ["verify-rules", "s.json"])
    assert code == 0
    assert out.count(": pass") == 4


def test_corpus_parameters(workdir, capsys):
    assert run(["corpus", "taft", "--n", "3", "--out", "t.json"]) == 0
    capsys.readouterr()
    code, out = _text(capsys, ["analyze", "t.json"])
    assert code == 0
    assert "filtration level dimensions: 3, 6, 9" in out

    assert run(["corpus", "group_algebra", "--group", "cyclic:4",
                "--out", "c.json"]) == 0
    capsys.readouterr()
    code, out = _text(capsys, ["analyze", "c.json"])
    assert code == 0
    assert "cosemisimple: True" in out


def test_machine_output_is_deterministic(workdir, capsys):
    assert run(["corpus", "sweedler", "--out", "a.json"]) == 0
    assert run(["corpus", "sweedler", "--out", "b.json"]) == 0
    capsys.readouterr()
    assert (workdir / "a.json").read_bytes() == (workdir / "b.json").read_bytes()
    _code, first = _text(capsys, ["analyze", "a.json", "--format", "machine"])
    _code, second = _text(capsys, ["analyze", "a.json", "--format", "machine"])
    assert first == second


def test_feasible_exit_codes(capsys):
    code, out = _text(capsys, ["feasible", "--dim", "95", "--group-order", "5"])
    assert code == 0
    assert "dimension 95, group order 5: SAT" in out
    assert "certificate blocks:" in out

    code, out = _text(capsys, ["feasible", "--dim", "100", "--group-order", "5"])
    assert code == 1
    assert "dimension 100, group order 5: UNSAT" in out
    assert "guard" in out and "does not hold" in out


def test_strict_flag_changes_the_verdict(capsys):
    code, _out = _text(capsys, ["feasible", "--dim", "30", "--group-order", "2"])
    assert code == 1
    code, out = _text(capsys, ["feasible", "--dim", "30", "--group-order", "2",
                               "--strict-level1-divisibility"])
    assert code == 0
    assert "SAT" in out


def test_usage_and_parameter_errors_exit_2(workdir, capsys):
    assert run(["no-such-verb"]) == 2
    assert run(["bound"]) == 2  # missing --r
    capsys.readouterr()

    code = run(["feasible", "--dim", "21", "--group-order", "2"])
    err = capsys.readouterr().err
    assert code == 2
    assert "error:" in err and "does not divide" in err

    dump_path("c_only.json", sweedler().coalgebra)
    code = run(["verify-rules", "c_only.json"])
    err = capsys.readouterr().err
    assert code == 2
    assert "full Hopf structure" in err

    assert run(["corpus", "nonsense", "--out", "x.json"]) == 2
    assert run(["corpus", "taft", "--out", "x.json"]) == 2  # missing --n
    capsys.readouterr()


def test_computation_and_file_errors_exit_3(workdir, capsys):
    dump_path("d.json", dual_group_algebra(cyclic(4)))
    code = run(["analyze", "d.json"])
    err = capsys.readouterr().err
    assert code == 3
    assert "error[NonSplitComponent]" in err
    assert "center has dimension 2" in err

    (workdir / "broken.json").write_text("this is not json")
    code = run(["analyze", "broken.json"])
    err = capsys.readouterr().err
    assert code == 3
    assert "error[FileFormatError]" in err

    code = run(["analyze", "missing.json"])
    err = capsys.readouterr().err
    assert code == 3
    assert "error[" in err


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    out = capsys.readouterr().out
    assert "validate" in out and "feasible" in out


def test_golden_bound(capsys):
    tcode, text = _text(capsys, ["bound", "--r", "3"])
    mcode, doc = _machine(capsys, ["bound", "--r", "3"])
    assert tcode == mcode == 0
    assert doc["verb"] == "bound"
    p = doc["payload"]
    assert p == {"group_order": 3, "value": 42, "argmin_d": 2, "all_argmin": [2, 3]}
    assert "dimension lower bound: 42" in text
    assert "(ties: 2, 3)" in text
    assert _ints(text) == _ints(json.dumps(p))


def test_golden_feasible_sat(capsys):
    args = ["feasible", "--dim", "95", "--group-order", "5"]
    tcode, text = _text(capsys, args)
    mcode, doc = _machine(capsys, args)
    assert tcode == mcode == 0
    p = doc["payload"]
    assert p["sat"] is True and p["trace"] == []
    rows = [tuple(int(g) for g in m)
            for m in re.findall(r"  level (\d+) sizes (\d+)x(\d+): dimension (\d+)", text)]
    machine_rows = [(row["level"], row["left"], row["right"], row["dim"])
                    for row in p["certificate"]]
    assert rows == machine_rows
    assert sum(r[3] for r in rows) == 95
    assert _ints(text) == _ints(json.dumps(p))


def test_golden_feasible_unsat_trace(capsys):
    args = ["feasible", "--dim", "22", "--group-order", "2", "--trace-limit", "6"]
    tcode, text = _text(capsys, args)
    mcode, doc = _machine(capsys, args)
    assert tcode == mcode == 1
    p = doc["payload"]
    assert p["sat"] is False and p["certificate"] is None
    rows = re.findall(r"  refuted \[(\S+)\] (.*)", text)
    assert [[ctx, cid] for cid, ctx in rows] == p["trace"]
    assert len(p["trace"]) == 6
    assert p["trace_truncated"] is True
    assert "(trace truncated)" in text
    assert _ints(text) == _ints(json.dumps(p))


def test_golden_sweep(capsys):
    args = ["sweep", "--group-order", "2", "--t-max", "12"]
    tcode, text = _text(capsys, args)
    mcode, doc = _machine(capsys, args)
    assert tcode == mcode == 0
    p = doc["payload"]
    assert p["group_order"] == 2 and p["t_max"] == 12
    rows = [(int(t), int(d), s, int(n)) for t, d, s, n in
            re.findall(r"t=(\d+) dim=(\d+): (SAT|UNSAT) \(nodes (\d+)\)", text)]
    machine_rows = [(row["t"], row["dim"], "SAT" if row["sat"] else "UNSAT",
                     row["nodes_explored"]) for row in p["rows"]]
    assert rows == machine_rows
    assert [t for t, _d, s, _n in rows if s == "SAT"] == [10, 12]
    assert _ints(text) == _ints(json.dumps(p))


def test_golden_analyze(workdir, capsys):
    assert run(["corpus", "sweedler", "--out", "s.json"]) == 0
    capsys.readouterr()
    tcode, text = _text(capsys, ["analyze", "s.json"])
    mcode, doc = _machine(capsys, ["analyze", "s.json"])
    assert tcode == mcode == 0
    p = doc["payload"]
    rows = [tuple(int(g) for g in m) for m in
            re.findall(r"block level (\d+) sizes (\d+)x(\d+): dimension (\d+)", text)]
    machine_rows = [(row["level"], row["left"], row["right"], row["dim"])
                    for row in p["blocks"]]
    assert rows == machine_rows == [(0, 1, 1, 2), (1, 1, 1, 2)]
    assert _ints(text) == _ints(json.dumps(p))
