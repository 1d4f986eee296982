import json

import pytest

from cbraid.cli import Config, export_matrices, read_matrix, run
from cbraid.errors import UsageError


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def element_file(tmp_path):
    f = tmp_path / "w.json"
    f.write_text(json.dumps({"col": [4, 2, 3, 1], "exp": [0, 2, 1, 0]}))
    return str(f)


def test_nf_from_file(capsys, element_file):
    code, out, _ = call(capsys, "nf", "--e", "3", "--n", "4", "--element", element_file)
    assert code == 0
    assert out.splitlines() == ["t0 s3 t1 t0 s4 s3 t0", "length 7"]


def test_nf_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"col": [1, 2')
    code, out, err = call(capsys, "nf", "--e", "3", "--n", "3", "--element", str(bad))
    assert code == 2 and out == "" and err.count("\n") == 1


def test_nf_word_and_bfs(capsys):
    code, out, _ = call(capsys, "nf", "--d", "3", "--e", "1", "--n", "3", "--word", "z z s2", "--check-bfs")
    assert code == 0 and out.splitlines()[-1] == "bfs: ok"


def test_group_queries(capsys):
    assert call(capsys, "length", "--e", "3", "--n", "3", "--word", "t1 t0 s3 t1 t0 s3")[1] == "6\n"
    assert call(capsys, "descent", "--e", "3", "--n", "3", "--word", "t1 t0")[1] == "t0 t1 t2\n"
    code, out, _ = call(capsys, "longest", "--d", "3", "--e", "3", "--n", "4")
    assert out.splitlines() == ["max_length 14", "count 512"]


def test_interval_commands(capsys):
    assert call(capsys, "interval", "3", "3", "1")[1] == "35\n"
    code, out, _ = call(capsys, "interval", "4", "3", "2", "--verify-lattice")
    assert code == 0 and out.strip().endswith("pass")
    code, out, _ = call(capsys, "interval", "3", "3", "1", "--hasse-dot")
    assert out.startswith("digraph")
    code, out, _ = call(capsys, "interval", "3", "3", "1", "--list")
    assert out.splitlines()[0] == "1" and len(out.splitlines()) == 35


def test_garside_commands(capsys):
    assert call(capsys, "garside", "3", "3", "1", "eq", "t1 t0", "t2 t1")[1] == "equal\n"
    assert call(capsys, "garside", "3", "3", "1", "eq", "t0", "t1")[1] == "different\n"
    out = call(capsys, "garside", "3", "3", "1", "nf", "t1 t0 s3 t1 t0 s3 t2")[1]
    assert out.startswith("d . ")
    assert call(capsys, "garside", "5", "3", "2", "iso-check")[0] == 0
    assert call(capsys, "garside", "4", "3", "2", "iso-check")[0] == 1


def test_homology_and_export(capsys, tmp_path):
    code, out, _ = call(capsys, "homology", "--e", "3", "--n", "3", "--k", "1", "--degree", "2",
                        "--export-matrices", str(tmp_path / "a"))
    assert (code, out) == (0, "Z/3\n")
    d2 = read_matrix(tmp_path / "a" / "d2.txt")
    assert len(d2) == 4                         # one row per 1-cell
    call(capsys, "homology", "--e", "3", "--n", "3", "--degree", "2", "--export-matrices", str(tmp_path / "b"))
    for name in ("d2.txt", "d3.txt"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    code, out, _ = call(capsys, "--format", "json", "homology", "--e", "4", "--n", "3", "--k", "2")
    assert json.loads(out) == {"free": 1, "torsion": [2]}


def test_export_matrices_format(tmp_path):
    export_matrices(tmp_path, {"empty": [], "m": [[1, -2], [0, 3]]})
    assert (tmp_path / "empty.txt").read_text() == "0 0\n"
    assert (tmp_path / "m.txt").read_text() == "2 2\n1 -2\n0 3\n"
    assert read_matrix(tmp_path / "m.txt") == [[1, -2], [0, 3]]


def test_algebra_and_ncgb(capsys, tmp_path):
    rel = tmp_path / "h.json"
    code, out, _ = call(capsys, "algebra", "dim", "--family", "hecke", "--e", "3", "--n", "3", "--a", "2",
                        "--export", str(rel))
    assert (code, out) == (0, "54\n")
    assert call(capsys, "ncgb", "dim", str(rel))[1] == "54\n"
    assert call(capsys, "ncgb", "dim", str(rel), "--field", "p103")[1] == "54\n"
    assert call(capsys, "ncgb", "dim", str(rel), "--cap", "3")[:2] == (1, "UNKNOWN(3)\n")
    code, out, _ = call(capsys, "algebra", "verify-lambda", "--family", "hecke", "--e", "3", "--n", "3", "--a", "2")
    assert code == 0 and out.strip().endswith("ok")
    assert call(capsys, "algebra", "dim", "--family", "hecke", "--d", "2", "--n", "2", "--a", "1",
                "--b", "1")[1] == "8\n"
    assert call(capsys, "algebra", "dim", "--family", "brauer", "--e", "3", "--x", "5")[1] == "297\n"


def test_long_jobs_refused(capsys):
    code, _, err = call(capsys, "algebra", "dim", "--family", "bmw", "--e", "5", "--m", "263", "--l", "151")
    assert code == 2 and "--long" in err


def test_krammer_commands(capsys, tmp_path):
    f = tmp_path / "rho3.json"
    code, out, _ = call(capsys, "krammer", "verify", "--rep", "rho3", "--m", "2", "--lambda", "17",
                        "--export", str(f))
    assert code == 0 and "FAIL" not in out
    blob = json.loads(f.read_text())
    assert len(blob["A"]) == 9 and all(isinstance(x, str) for x in blob["A"][0])
    assert call(capsys, "krammer", "trace", "--rep", "rho3", "--m", "2", "--lambda", "17")[0] == 0
    assert call(capsys, "krammer", "dim", "--rep", "rho3", "--m", "5", "--lambda", "5")[0] == 1


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["nf", "--e", "3"]) == 2
    assert run(["nf", "--e", "3", "--n", "3", "--word", "t9"]) == 2
    assert run(["ncgb", "dim", "/nonexistent.json"]) == 2
    capsys.readouterr()


def test_deterministic_output(capsys):
    a = call(capsys, "interval", "4", "3", "1", "--hasse-dot")[1]
    b = call(capsys, "interval", "4", "3", "1", "--hasse-dot")[1]
    assert a == b


def test_config():
    cfg = Config.from_env({"CBRAID_PRIME": "101", "CBRAID_DEGREE_CAP": "12"})
    assert (cfg.prime, cfg.degree_cap) == (101, 12)
    with pytest.raises(UsageError):
        Config.from_env({"CBRAID_PRIME": "100"})
    with pytest.raises(UsageError):
        Config(degree_cap=0)
