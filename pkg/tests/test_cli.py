import json
import subprocess
import sys

import pytest

from tableau_lab.cli import main, parse_tableau_file
from tableau_lab.errors import ValidationError
from tableau_lab.tableaux import Tableau, classify_tableau


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, data, name="t.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return path


def test_kostka_command(capsys):
    assert run(capsys, "kostka", "--width", "2", "--height", "3") == (0, "5\n", "")
    assert run(capsys, "kostka", "--width", "3", "--height", "2", "--k", "1")[1] == "3\n"
    assert run(capsys, "kostka", "--width", "3", "--height", "3", "--k", "-1", "--a", "2")[1] == "3\n"


def test_kostka_emit_tableaux(capsys):
    code, out, _ = run(capsys, "kostka", "--width", "3", "--height", "2", "--k", "1", "--emit-tableaux")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 3
    assert lines[0] == {"width": 3, "columns": [[1, 2], [1, 3], [4, 5]]}
    assert all(classify_tableau(Tableau.from_json(t)) == "semistandard" for t in lines)


def test_kostka_bad_weight_is_data_error(capsys):
    assert run(capsys, "kostka", "--width", "3", "--height", "2", "--a", "1")[0] == 65
    assert run(capsys, "kostka", "--width", "3", "--height", "2", "--k", "5")[0] == 65


def test_count_perms_and_nc2(capsys):
    assert run(capsys, "count-perms", "--class", "lis-at-most", "--m", "4", "--w", "2")[1] == "14\n"
    assert run(capsys, "count-perms", "--class", "lis-prefix", "--m", "4", "--w", "2")[1] == "5\n"
    assert run(capsys, "count-perms", "--class", "block-head", "--m", "4", "--w", "2", "--k", "2")[1] == "4\n"
    assert run(capsys, "nc2", "--n", "3", "--colors", "1")[1] == "5\n"
    assert run(capsys, "nc2", "--n", "2", "--colors", "2")[1] == "3\n"
    assert run(capsys, "catalan-rect", "--n", "3", "--m", "3")[1] == "42\n"


def test_count_perms_cap(capsys, monkeypatch):
    assert run(capsys, "count-perms", "--class", "lis-at-most", "--m", "10", "--w", "2")[0] == 65
    monkeypatch.setenv("TABLEAU_LAB_MAX_M", "3")
    assert run(capsys, "count-perms", "--class", "lis-at-most", "--m", "4", "--w", "2")[0] == 65
    assert run(capsys, "count-perms", "--class", "lis-at-most", "--m", "4", "--w", "2", "--max-m", "4")[1] == "14\n"


def test_biject_forward_base(capsys, tmp_path):
    path = write(tmp_path, {"width": 2, "columns": [[1, 3, 4], [2, 5, 6]]})
    code, out, _ = run(capsys, "biject", "forward", "--params", "2,3,0", "--input", str(path))
    assert code == 0
    assert json.loads(out) == {
        "P": {"width": 2, "columns": [[1, 3], [2]]},
        "Q": {"width": 2, "columns": [[1, 2], [3]]},
        "sigma": [3, 1, 2],
    }


def test_biject_forward_skew_and_back(capsys, tmp_path):
    path = write(tmp_path, {"width": 2, "columns": [[1, 2], [3, 4]]})
    code, out, _ = run(capsys, "biject", "forward", "--params", "2,2,1", "--input", str(path), "--m-index", "0")
    assert code == 0
    assert json.loads(out)["sigma"] == [3, 1, 2]
    code, out, _ = run(capsys, "biject", "inverse", "--params", "2,2,1", "--perm", "3 1 2")
    assert code == 0
    assert json.loads(out) == {
        "R": {"width": 2, "columns": [[1, 2], [3, 4]]},
        "M": {"width": 2, "columns": [[1], [2]]},
    }


def test_biject_m_index(capsys, tmp_path):
    path = write(tmp_path, {"width": 2, "columns": [[1, 3], [2, 4]]})
    outs = set()
    for i in (0, 1):
        code, out, _ = run(capsys, "biject", "forward", "--params", "2,2,2", "--input", str(path), "--m-index", str(i))
        assert code == 0
        outs.add(tuple(json.loads(out)["sigma"]))
    assert len(outs) == 2
    assert run(capsys, "biject", "forward", "--params", "2,2,2", "--input", str(path), "--m-index", "2")[0] == 64


def test_biject_inverse_membership_exit_code(capsys):
    assert run(capsys, "biject", "inverse", "--params", "2,2,1", "--perm", "2 1 3")[0] == 2
    assert run(capsys, "biject", "inverse", "--params", "2,3,0", "--perm", "1 2 3")[0] == 2
    assert run(capsys, "biject", "inverse", "--params", "2,3,0", "--perm", "3 1 2")[0] == 0
    assert run(capsys, "biject", "inverse", "--params", "2,3,0", "--perm", "3 1")[0] == 65


def test_parse_tableau_file(tmp_path):
    t = parse_tableau_file(write(tmp_path, {"width": 2, "columns": [[1, 3, 4], [2, 5, 6]]}))
    assert classify_tableau(t) == "standard"
    assert parse_tableau_file(write(tmp_path, {"width": 2, "columns": []})) == Tableau()
    with pytest.raises(ValidationError, match=r"cell \(1,1\)=2 left of cell \(2,1\)=1"):
        parse_tableau_file(write(tmp_path, {"width": 2, "columns": [[2], [1]]}))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValidationError):
        parse_tableau_file(bad)


def test_bad_input_file_exit_code(capsys, tmp_path):
    path = write(tmp_path, {"width": 2, "columns": [[2], [1]]})
    code, _, err = run(capsys, "biject", "forward", "--params", "2,1,0", "--input", str(path))
    assert code == 65
    assert "row 1 decreases" in err


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--claim", "thm9")[0] == 64
    assert run(capsys, "frobnicate")[0] == 64
    assert run(capsys, "kostka", "--width", "x", "--height", "2")[0] == 64
    assert run(capsys, "biject", "forward", "--params", "2,3", "--input", "x")[0] == 64


def test_verify_eq1_csv(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "eq1", "--max-n", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "claim,params,lhs,rhs,match,elapsed_ms"
    assert len(lines) == 7
    assert lines[3].startswith("eq1,n=3,5,5,true,")


def test_verify_cor23_row(capsys):
    code, out, err = run(capsys, "verify", "--claim", "cor2.3", "--w", "3", "--max-m", "7")
    assert code == 0
    assert "cor2.3,w=3;n=2;m=4,3,3,true," in out
    assert "S_n" in err


def test_verify_conj_json(capsys):
    code, out, err = run(capsys, "verify", "--claim", "conj2.6", "--w", "2", "--max-m", "6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    row = next(r for r in data if r["params"] == {"w": 2, "m": 4})
    assert (row["lhs"], row["rhs"], row["match"]) == (5, 5, True)
    assert "NC_2" in row["note"]


def test_verify_is_deterministic_without_timing(capsys, tmp_path):
    outs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        assert run(capsys, "verify", "--claim", "thm2.1", "--max-n", "4", "--no-timing", "--output", str(path))[0] == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_verify_parallel_matches_sequential(capsys):
    seq = run(capsys, "verify", "--claim", "cor2.5", "--no-timing")[1]
    par = run(capsys, "verify", "--claim", "cor2.5", "--no-timing", "--jobs", "2")[1]
    assert seq == par


def test_verify_skips_over_cap(capsys, monkeypatch):
    monkeypatch.setenv("TABLEAU_LAB_MAX_M", "4")
    code, out, _ = run(capsys, "verify", "--claim", "thm2.1", "--w", "2", "--max-n", "5")
    assert code == 0
    assert "thm2.1,w=2;n=5,,,skipped," in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tableau_lab", "catalan-rect", "--n", "4", "--m", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "14\n"
