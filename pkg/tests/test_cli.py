import json

import pytest

from unitdist.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tvalues_csv(capsys):
    code, out, _ = run(capsys, "tvalues", "--from", "1", "--to", "5", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,T,H,lower_num,lower_den,upper"
    assert lines[2] == "2,1,1,0,4,2"
    assert lines[5] == "5,5,2,10,4,15"


def test_tvalues_json(capsys):
    code, out, _ = run(capsys, "tvalues", "--from", "8", "--to", "8")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "edgemax/1"
    assert doc["rows"] == [
        {"n": 8, "T": 12, "H": 1, "lower_num": 16, "lower_den": 4, "upper": 24}
    ]


def test_tvalues_usage_error(capsys):
    code, _, err = run(capsys, "tvalues", "--from", "0", "--to", "5")
    assert code == 2
    assert "error" in err


def test_arrange_explicit_vertices(capsys):
    code, out, _ = run(
        capsys, "arrange", "--dim", "5",
        "--vertices", "0,1,9,10,11,19,23,24,25,26,27,28,29,30",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "edgemax/1"
    assert doc["final_edges"] == 25
    edges = [doc["initial_edges"]] + [s["edges"] for s in doc["steps"]]
    assert edges == sorted(edges)
    assert doc["steps"][-1]["vertices"] == list(range(14))


def test_arrange_random_deterministic(capsys):
    code1, out1, _ = run(capsys, "arrange", "--dim", "6", "--random", "20", "--seed", "9")
    code2, out2, _ = run(capsys, "arrange", "--dim", "6", "--random", "20", "--seed", "9")
    assert code1 == code2 == 0
    assert out1 == out2


def test_compress(capsys):
    code, out, _ = run(capsys, "compress", "--points", "0,0;1,0;2,0")
    assert code == 0
    doc = json.loads(out)
    assert doc["input_edges"] == 2
    assert doc["output_edges"] == 2
    assert len(doc["output_vertices"]) == 3


def test_directions(capsys):
    code, out, _ = run(capsys, "directions", "--d", "5", "--bound", "1", "--seed", "42")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["angles"]) == 5
    assert doc["certificate"]["verdict"] == "good_up_to_B"
    assert doc["certificate"]["B"] == 1
    assert doc["certificate"]["witness"] is None


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", "--n", "37", "--seed", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["T"] == doc["count"]
    assert len(doc["points"]) == 37
    assert len(doc["unit_pairs"]) == doc["count"]


def test_construct_csv_and_segments(capsys):
    code, out, _ = run(capsys, "construct", "--n", "4", "--seed", "1", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,y"
    assert len(lines) == 5
    code, out, _ = run(
        capsys, "construct", "--n", "4", "--seed", "1", "--format", "csv", "--plot-data"
    )
    lines = out.strip().splitlines()
    assert lines[0] == "x1,y1,x2,y2"
    assert len(lines) == 5  # T(4) = 4 segments


def test_oracle_cube(capsys):
    code, out, _ = run(capsys, "oracle", "cube", "--d", "4", "--n", "8")
    assert code == 0
    doc = json.loads(out)
    assert doc["max_edges"] == 12
    assert doc["subsets_examined"] == 12870


def test_oracle_box(capsys):
    code, out, _ = run(capsys, "oracle", "box", "--extents", "2,2", "--n", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["max_edges"] == 5
    assert doc["domain"] == {"kind": "box", "extents": [2, 2]}


def test_oracle_budget_exit_code(capsys):
    code, _, err = run(capsys, "oracle", "cube", "--d", "5", "--n", "16")
    assert code == 3
    assert "budget" in err


def test_usage_exit_code_on_unknown_command(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_all_quick_and_reproducible(capsys):
    args = [
        "verify-all", "--max-n", "512", "--arrange-trials", "40",
        "--compress-trials", "15", "--seed", "5",
    ]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["schema"] == "edgemax/1"
    assert doc["passed"] is True
    names = [c["name"] for c in doc["checks"]]
    assert names == sorted(names)
    assert "cube_oracle_d4" in names
    assert all(c["status"] == "pass" for c in doc["checks"])
