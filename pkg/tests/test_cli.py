import json
import subprocess
import sys

import pytest

from hkmonoid.cli import BENCH_FIELDS, main


@pytest.fixture
def path3(tmp_path):
    p = tmp_path / "path3.txt"
    p.write_text("n 3\n1 2\n2 3\n")
    return str(p)


@pytest.fixture
def cycle3(tmp_path):
    p = tmp_path / "cycle3.txt"
    p.write_text("# oriented triangle\nn 3\n1 2\n2 3\n3 1\n")
    return str(p)


@pytest.fixture
def edgeless2(tmp_path):
    p = tmp_path / "edgeless2.txt"
    p.write_text("n 2\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalize(capsys, path3):
    code, out, _ = run(capsys, "normalize", "-g", path3, "2 1 2")
    assert code == 0
    assert out.splitlines()[0] == "1 2"
    assert "content: {1,2}" in out
    assert run(capsys, "normalize", "-g", path3, "")[1].splitlines()[0] == ""
    assert run(capsys, "normalize", "-g", path3, "1 1")[1].splitlines()[0] == "1"


def test_normalize_machine(capsys, path3):
    _, out, _ = run(capsys, "normalize", "-g", path3, "1 2 1", "--machine")
    assert json.loads(out) == {"word": [1, 2, 1], "normal_form": [1, 2],
                               "trace_canonical": [1, 2], "content": [1, 2]}


def test_equal_exit_codes(capsys, path3, edgeless2):
    assert run(capsys, "equal", "-g", path3, "1 2 1", "2 1 2")[:2] == (0, "equal\n")
    assert run(capsys, "equal", "-g", edgeless2, "1", "2")[:2] == (1, "unequal\n")
    assert run(capsys, "equal", "-g", edgeless2, "1 2", "2,1")[:2] == (0, "equal\n")
    assert run(capsys, "equal", "-g", edgeless2, "1 x", "2")[0] == 2
    assert run(capsys, "equal", "-g", edgeless2, "1 3", "2")[0] == 2


def test_word_length_flag(capsys, path3):
    code, _, err = run(capsys, "normalize", "-g", path3, "1 1 1 1", "--max-word-len", "3")
    assert code == 2 and "exceeds limit" in err


def test_bad_graph_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("n 2\n1 2\n2 1\n")
    code, _, err = run(capsys, "content", "-g", str(bad), "1")
    assert code == 2 and "line 3" in err and "2-cycle" in err
    code, _, err = run(capsys, "content", "-g", str(tmp_path / "missing.txt"), "1")
    assert code == 2


def test_missing_graph_source(capsys):
    code, _, err = run(capsys, "content", "1")
    assert code == 2 and "graph source" in err


def test_conflicting_graph_sources(path3):
    with pytest.raises(SystemExit) as info:
        main(["content", "-g", path3, "--kiselman", "2", "1"])
    assert info.value.code == 2


def test_content(capsys):
    assert run(capsys, "content", "--kiselman", "3", "3 3 1")[1] == "{1,3}\n"


def test_idempotents(capsys, cycle3):
    _, out, _ = run(capsys, "idempotents", "-g", cycle3)
    lines = out.splitlines()
    assert len(lines) == 7
    assert lines[0] == "X = {} word = "
    assert "X = {1,2} word = 1 2" in lines
    _, out, _ = run(capsys, "idempotents", "-g", cycle3, "--machine")
    records = [json.loads(line) for line in out.splitlines()]
    assert {"support": [2, 3], "word": [2, 3]} in records


def test_p_and_partition(capsys, path3, cycle3):
    assert run(capsys, "p", "-g", path3, "1", "3")[1] == "true\n"
    assert run(capsys, "p", "-g", path3, "2", "1,3")[1] == "false\n"
    _, out, _ = run(capsys, "p", "-g", path3, "2,3", "1,2", "--partition")
    assert out.splitlines() == ["false", "M={1,2} N={3} R={2} S={}"]
    _, out, err = run(capsys, "p", "-g", cycle3, "1,2,3", "-")
    assert "not acyclic" in err


def test_endos(capsys, edgeless2):
    assert run(capsys, "endos", "-g", edgeless2, "count")[1] == "16\n"
    assert run(capsys, "endos", "--kiselman", "2", "count")[1] == "15\n"
    _, out, _ = run(capsys, "endos", "--kiselman", "2", "list")
    lines = out.splitlines()
    assert len(lines) == 15 and "1; 2" in lines
    _, out, _ = run(capsys, "endos", "--kiselman", "2", "matrices")
    assert "1 0\n0 1" in out
    assert len(out.strip().split("\n\n")) == 15


def test_endos_machine(capsys):
    _, out, _ = run(capsys, "endos", "--kiselman", "2", "list", "--machine")
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 15
    assert {"sets": [[1], [2]], "matrix": [[1, 0], [0, 1]]} in records


def test_endos_budget(capsys):
    code, _, err = run(capsys, "endos", "--kiselman", "3", "list", "--budget", "10")
    assert code == 2 and "512" in err
    assert run(capsys, "endos", "--kiselman", "3", "count", "--budget", "10")[0] == 0


def test_aut(capsys, cycle3):
    _, out, _ = run(capsys, "aut", "-g", cycle3)
    assert out.splitlines() == ["1 2 3", "2 3 1", "3 1 2"]


def test_verify_suites(capsys, cycle3):
    code, out, _ = run(capsys, "verify", "--suite", "units", "-g", cycle3)
    assert code == 0 and "(3 = 3)" in out and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "--suite", "prop14", "--max-n", "5")
    assert code == 0 and "PASS prop14" in out
    code, out, _ = run(capsys, "verify", "--suite", "theorem-p", "--all-graphs", "--max-n", "2")
    assert code == 0 and out.startswith("PASS theorem-p: 4 cases")


def test_verify_machine_and_parallel(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "mnrs", "--all-graphs", "--max-n", "3",
                       "--machine", "--jobs", "2")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(records) == 31
    assert all(r["failures"] == 0 for r in records)
    code, serial, _ = run(capsys, "verify", "--suite", "mnrs", "--all-graphs", "--max-n", "3", "--machine")
    assert serial == out


def test_verify_guards(capsys):
    assert run(capsys, "verify", "--suite", "theorem-p", "--all-graphs", "--max-n", "5")[0] == 2
    assert run(capsys, "verify", "--suite", "units")[0] == 2


def test_bench_csv_structure(capsys):
    _, out, _ = run(capsys, "bench", "--sizes")
    assert out == ",".join(BENCH_FIELDS) + "\n"
    _, out, _ = run(capsys, "bench", "--family", "random", "--sizes", "3", "4", "--seconds", "0.01")
    lines = out.splitlines()
    assert lines[0].split(",") == BENCH_FIELDS
    assert [line.split(",")[:2] for line in lines[1:]] == [["random", "3"], ["random", "4"]]


def test_module_entry_point(path3):
    proc = subprocess.run([sys.executable, "-m", "hkmonoid", "equal", "-g", path3, "1 2 1", "2 1 2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "equal\n"
