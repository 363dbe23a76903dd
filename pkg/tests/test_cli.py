import io
import json
import subprocess
import sys

import pytest

from ybe import corpus
from ybe.cli import main
from ybe.solution import solution_to_doc


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_doc(tmp_path, sol, name="sol.json"):
    path = tmp_path / name
    path.write_text(json.dumps(solution_to_doc(sol)))
    return str(path)


def test_validate_ok(tmp_path, capsys, s4):
    path = write_doc(tmp_path, s4)
    code, out, _ = run(capsys, "validate", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["involutive"] and doc["braid"] and doc["nondegenerate"]
    assert doc["square_free"] and doc["first_failure"] is None


def test_validate_failure_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "sigma": [[1, 1], [1, 2]]}))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 2
    doc = json.loads(out)
    assert not doc["nondegenerate"]
    assert doc["first_failure"]["check"] == "nondegenerate"


def test_validate_bad_sigma_assignment(tmp_path, capsys):
    # a transposition on two points is not square-free and its derived
    # right-action rows collapse, so the axiom checks all go false
    path = tmp_path / "bad2.json"
    path.write_text(json.dumps({"n": 2, "sigma": [[2, 1], [1, 2]]}))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 2
    doc = json.loads(out)
    assert doc["first_failure"] is not None
    assert not doc["involutive"] or not doc["braid"] or not doc["nondegenerate"]


def test_validate_parse_error_exit_1(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 1 and "error" in err


def test_missing_file_exit_1(capsys):
    code, _, err = run(capsys, "validate", "/no/such/file.json")
    assert code == 1 and "error" in err


def test_stdin_dash(capsys, monkeypatch, s4):
    doc = json.dumps(solution_to_doc(s4))
    code, out, _ = run(capsys, "validate", "-", stdin=doc, monkeypatch=monkeypatch)
    assert code == 0


def test_analyze_e24(tmp_path, capsys, e24):
    path = write_doc(tmp_path, e24)
    code, out, _ = run(capsys, "analyze", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 24
    assert doc["square_free"] and not doc["trivial"]
    assert doc["orbit_count"] == 3
    assert doc["orbits"] == [list(range(1, 9)), list(range(9, 17)),
                             list(range(17, 25))]
    assert doc["group_order"] == 64
    assert doc["abelian"] is True
    assert doc["cyclic_generators"] is False
    assert doc["retract_class_count"] == 8
    assert doc["rho_class_count"] == 8
    assert doc["multipermutation_level"] == 3
    assert doc["strong_level"] == 2


def test_analyze_element_cap_env(tmp_path, capsys, e24, monkeypatch):
    monkeypatch.setenv("YBE_ELEMENT_CAP", "10")
    path = write_doc(tmp_path, e24)
    code, out, _ = run(capsys, "analyze", path)
    assert code == 0
    assert json.loads(out)["group_order"] is None


def test_retract_final(tmp_path, capsys, e24):
    path = write_doc(tmp_path, e24)
    code, out, _ = run(capsys, "retract", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 1


def test_retract_trace(tmp_path, capsys, e24):
    path = write_doc(tmp_path, e24)
    code, out, _ = run(capsys, "retract", path, "--trace")
    assert code == 0
    tower = json.loads(out)
    assert [d["n"] for d in tower] == [24, 8, 3, 1]


def test_retract_rho_trace(tmp_path, capsys, e24):
    path = write_doc(tmp_path, e24)
    code, out, _ = run(capsys, "retract", path, "--mode", "rho", "--trace")
    assert code == 0
    tower = json.loads(out)
    # orbit-refined tower stops at the trivial 3-point fixpoint
    assert [d["n"] for d in tower] == [24, 8, 3]


def test_twisted_e24(tmp_path, capsys, e24):
    path = write_doc(tmp_path, e24)
    code, out, _ = run(capsys, "twisted", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["decomposable"] is False
    assert doc["mode"] == "squarefree"
    assert len(doc["witness"]["failures"]) == 6


def test_twisted_s4(tmp_path, capsys, s4):
    path = write_doc(tmp_path, s4)
    code, out, _ = run(capsys, "twisted", path)
    doc = json.loads(out)
    assert doc["decomposable"] is True
    assert doc["Y"] == [1, 2] and doc["Z"] == [3, 4]


def test_twisted_general_mode(tmp_path, capsys, s4):
    path = write_doc(tmp_path, s4)
    code, out, _ = run(capsys, "twisted", path, "--mode", "general")
    doc = json.loads(out)
    assert doc["decomposable"] is True and doc["mode"] == "general"


def test_structure_eval(tmp_path, capsys, s4):
    path = write_doc(tmp_path, s4)
    code, out, _ = run(capsys, "structure", path, "--eval", "x1 x3")
    assert code == 0
    doc = json.loads(out)
    assert doc["vec"] == [1, 0, 0, 1]
    assert doc["perm"] == [2, 1, 4, 3]


def test_structure_eval_bad_word(tmp_path, capsys, s4):
    path = write_doc(tmp_path, s4)
    code, _, err = run(capsys, "structure", path, "--eval", "zap")
    assert code == 1 and "error" in err


def test_structure_check_relations(tmp_path, capsys, e24):
    path = write_doc(tmp_path, e24)
    code, out, _ = run(capsys, "structure", path, "--check-relations")
    assert code == 0
    assert json.loads(out) is True


def test_enumerate_json_array(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--up-to-iso")
    assert code == 0
    docs = json.loads(out)
    assert len(docs) == 1
    assert docs[0] == {"n": 2, "sigma": [[1, 2], [1, 2]]}


def test_enumerate_jsonl(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--jsonl")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 4
    for line in lines:
        json.loads(line)


def test_enumerate_threads_byte_identical(capsys):
    _, one, _ = run(capsys, "enumerate", "--n", "4", "--jsonl", "--threads", "1")
    _, four, _ = run(capsys, "enumerate", "--n", "4", "--jsonl", "--threads", "4")
    assert one == four


def test_enumerate_cap_exit_1(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "7")
    assert code == 1 and "error" in err


def test_sweep_ok(capsys):
    code, out, _ = run(capsys, "sweep", "--n-max", "4", "--claim",
                       "rump_decomposable")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] and doc["claim"] == "rump_decomposable"


def test_sweep_filtered(capsys):
    code, out, _ = run(capsys, "sweep", "--n-max", "4", "--claim",
                       "cyclic1", "--filter", "cyclic")
    assert code == 0
    assert json.loads(out)["ok"]


def test_iso(tmp_path, capsys, s4):
    from ybe.perm import Perm
    from ybe.solution import relabel

    a = write_doc(tmp_path, s4, "a.json")
    b = write_doc(tmp_path, relabel(s4, Perm.from_cycles(4, [(1, 3), (2, 4)])),
                  "b.json")
    code, out, _ = run(capsys, "iso", a, b)
    assert code == 0
    assert json.loads(out) is not None
    t = write_doc(tmp_path, corpus.trivial(4), "t.json")
    code, out, _ = run(capsys, "iso", a, t)
    assert code == 0
    assert json.loads(out) is None


def test_corpus_list_and_emit(capsys):
    code, out, _ = run(capsys, "corpus", "list")
    assert code == 0
    assert "e24" in json.loads(out)
    code, out, _ = run(capsys, "corpus", "emit", "e24")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 24
    code, out, _ = run(capsys, "corpus", "emit", "trivial3")
    assert json.loads(out) == {"n": 3, "sigma": [[1, 2, 3]] * 3}
    code, _, err = run(capsys, "corpus", "emit", "nope")
    assert code == 1 and "error" in err


def test_corpus_emit_analyze_pipeline(tmp_path, capsys, monkeypatch):
    # corpus emit e24 | analyze -
    code, out, _ = run(capsys, "corpus", "emit", "e24")
    code, out, _ = run(capsys, "analyze", "-", stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    doc = json.loads(out)
    assert doc["multipermutation_level"] == 3 and doc["abelian"] and \
        doc["orbit_count"] == 3


def test_pretty_flag(tmp_path, capsys, s4):
    path = write_doc(tmp_path, s4)
    _, compact, _ = run(capsys, "validate", path)
    _, pretty, _ = run(capsys, "validate", path, "--pretty")
    assert json.loads(compact) == json.loads(pretty)
    assert "\n  " in pretty and "\n  " not in compact


def test_round_trip_bit_exact(tmp_path, capsys, e24):
    doc = json.dumps(solution_to_doc(e24), sort_keys=True, separators=(",", ":")) + "\n"
    path = tmp_path / "e.json"
    path.write_text(doc)
    code, out, _ = run(capsys, "corpus", "emit", "e24")
    assert out == doc


def test_module_entry_point(tmp_path, s4):
    path = write_doc(tmp_path, s4)
    proc = subprocess.run([sys.executable, "-m", "ybe", "validate", path],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["braid"] is True
