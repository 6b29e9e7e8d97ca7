import json
import subprocess
import sys

import pytest

from algmorse import io
from algmorse.cli import run
from algmorse.generators import random_facets
from helpers import FIXTURES


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_interval(capsys):
    code, out, _ = call(capsys, "validate", FIXTURES / "interval.json")
    assert code == 0
    assert "valid" in out


def test_validate_rejects_corrupt(capsys, tmp_path):
    doc = io.load_json(FIXTURES / "triangle.json")
    doc["boundary"][-1]["coeffs"] = [["e01", "1"], ["e02", "1"]]
    path = tmp_path / "bad.json"
    io.dump_json(doc, path)
    code, out, _ = call(capsys, "--json", "validate", path)
    assert code == 1
    assert json.loads(out)["error"] == "NotSquareZero"


def test_reduce_both_on_circle(capsys):
    code, out, _ = call(
        capsys, "reduce", FIXTURES / "circle3.json", "--matching", FIXTURES / "circle3_matching.json", "--method", "both", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["methods_agree"] is True
    assert doc["atoms"] == 2
    assert doc["morse_paths"] == doc["decomposition"]["morse"]
    assert [c["id"] for c in doc["morse_paths"]["cells"]] == ["v0", "e12"]
    assert doc["morse_paths"]["boundary"] == []


def test_reduce_text_output(capsys, tmp_path):
    out_file = tmp_path / "dec.json"
    code, out, _ = call(capsys, "reduce", FIXTURES / "circle3.json", "--greedy", "-o", out_file)
    assert code == 0
    assert "2 atoms" in out
    assert set(io.load_json(out_file)) == {"morse", "atoms", "change_of_basis"}


def test_reduce_path_budget(capsys):
    code, out, _ = call(
        capsys, "reduce", FIXTURES / "circle3.json", "--matching", FIXTURES / "circle3_matching.json", "--method", "paths", "--path-budget", "1"
    )
    assert code == 1
    assert "PathBudgetExceeded" in out


def test_reduce_needs_matching(capsys):
    code, _, err = call(capsys, "reduce", FIXTURES / "circle3.json")
    assert code == 2
    assert "--matching" in err


def test_bad_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["reduce", str(FIXTURES / "circle3.json"), "--method", "magic"])
    assert exc.value.code == 2
    assert "--method" in capsys.readouterr().err


def test_match_reports_cycle(capsys):
    code, out, _ = call(capsys, "--json", "match", FIXTURES / "circle2.json", "--matching", FIXTURES / "circle2_matching.json")
    assert code == 1
    doc = json.loads(out)
    assert doc["acyclic"] is False and doc["cycle"] == ["e1", "e2"]


def test_match_classification(capsys):
    code, out, _ = call(capsys, "--json", "match", FIXTURES / "interval.json", "--matching", FIXTURES / "interval_matching.json")
    assert code == 0
    assert json.loads(out)["classification"] == {"v0": "down", "v1": "critical", "e": "up"}


def test_extension(capsys):
    code, out, _ = call(capsys, "extension", FIXTURES / "circle3.json", "--matching", FIXTURES / "circle3_matching.json")
    assert code == 0
    assert out.split() == ["v0", "v1", "e01", "v2", "e02", "e12"]


def test_homology_compare_on_rp2(capsys, tmp_path):
    cpx = tmp_path / "rp2.json"
    assert call(capsys, "convert", "--from-simplicial", FIXTURES / "rp2.facets", "--ring", "Z", "-o", cpx)[0] == 0
    code, out, _ = call(capsys, "homology", cpx, "--compare-with-morse", "--greedy", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["equal"] is True
    assert doc["homology"] == doc["morse_homology"]
    assert doc["homology"][1] == {"dim": 1, "betti": 0, "torsion": [2]}


def test_convert_then_validate_roundtrip(capsys, tmp_path, rng):
    for i in range(15):
        facets = tmp_path / f"f{i}.txt"
        facets.write_text("\n".join(" ".join(f) for f in random_facets(rng, 7, 3, rng.randint(1, 6))) + "\n")
        cpx = tmp_path / f"c{i}.json"
        assert call(capsys, "convert", "--from-simplicial", facets, "--ring", rng.choice(["Z", "Q", "Z/6"]), "-o", cpx)[0] == 0
        assert call(capsys, "validate", cpx)[0] == 0


def test_reports_are_deterministic(capsys):
    args = ["homology", FIXTURES / "triangle.json", "--compare-with-morse", "--json"]
    assert call(capsys, *args)[1] == call(capsys, *args)[1]


def test_missing_file(capsys):
    assert call(capsys, "validate", FIXTURES / "nope.json")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "algmorse", "validate", str(FIXTURES / "interval.json")], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
