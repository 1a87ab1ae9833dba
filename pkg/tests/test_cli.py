import io
import json
import subprocess
import sys

import pytest

from graphlines.cli import main, parse_edge_list
from graphlines.errors import InvalidEdge
from graphlines.graph6 import to_graph6

from conftest import path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lines_text(capsys):
    code, out, _ = run(capsys, "lines", "Ch")
    assert code == 0
    assert out.startswith("n=4 diameter=3 ℓ=1 universal=true bridges=3")


def test_lines_json_schema(capsys):
    code, out, _ = run(capsys, "lines", "E{SW", "--json")
    rec = json.loads(out)
    assert code == 0
    assert set(rec) == {"command", "version", "input", "n", "diameter", "numLines", "hasUniversal",
                        "bridgeCount", "exceptional", "fMatch", "elapsedMs"}
    assert (rec["command"], rec["n"], rec["numLines"], rec["fMatch"]) == ("lines", 6, 4, "M'_6")


def test_lines_show_lines(capsys):
    code, out, _ = run(capsys, "lines", to_graph6(path(4)), "--show-lines")
    assert out.splitlines()[1:] == ["0 1 2 3"]
    code, out, _ = run(capsys, "lines", "Ch", "--show-lines", "--json")
    assert json.loads(out)["lines"] == [[0, 1, 2, 3]]


def test_lines_from_stdin_and_files(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr(sys, "stdin", io.StringIO("4 3\n0 1\n1 2\n2 3\n"))
    code, out, _ = run(capsys, "lines", "-")
    assert code == 0 and "ℓ=1" in out
    monkeypatch.setattr(sys, "stdin", io.StringIO("C~\n"))
    code, out, _ = run(capsys, "lines", "-")
    assert "ℓ=6" in out
    f = tmp_path / "g.txt"
    f.write_text("# a 4-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(capsys, "lines", str(f))
    assert code == 0 and "diameter=2" in out


@pytest.mark.parametrize("arg", ["C", "not-a-graph", "B?"])
def test_lines_input_errors(capsys, arg):
    code, _, err = run(capsys, "lines", arg)
    assert code == 2 and err.startswith("error:")


def test_edge_list_errors():
    with pytest.raises(InvalidEdge):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(InvalidEdge):
        parse_edge_list("3\n0 1\n")


def test_family(capsys):
    code, out, _ = run(capsys, "family", "M:4,2,2", "--verify")
    assert code == 0 and out.startswith("M_{4,2,2} ") and "verify=pass" in out
    code, out, _ = run(capsys, "family", "Mprime:5", "--graph6")
    assert out.strip() == "I~}AHKV@w"
    code, out, _ = run(capsys, "family", "F", "--verify")
    assert code == 0 and len(out.splitlines()) == 14
    assert all("verify=pass" in row for row in out.splitlines())


def test_family_errors(capsys):
    assert run(capsys, "family", "M:5,6")[0] == 2
    assert run(capsys, "family", "Q")[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "5", "--verify-theorem", "--verify-cc")
    assert code == 0
    assert "theorem: pass" in out and "violators=0" in out


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "6", "--json", "--verify-theorem",
                       "--verify-properties", "structure")
    recs = [json.loads(r) for r in out.splitlines()]
    assert code == 0
    assert [r["fMatch"] for r in recs[:-1]] == ["M_{3,1,1,1}", "M_{3,2,1}", "M'_6"]
    summary = recs[-1]["summary"]
    assert summary["connected"] == 112 and summary["theorem"]["pass"] and summary["pass"]
    assert summary["properties"]["case1-claims"]["failures"] == 0


def test_enumerate_usage_errors(capsys, tmp_path):
    assert run(capsys, "enumerate", "--order", "13")[0] == 2
    empty = tmp_path / "empty"
    empty.write_text("")
    assert run(capsys, "enumerate", "--order", "6", "--checkpoint", str(empty))[0] == 2
    assert run(capsys, "enumerate", "--order", "6", "--verify-properties", "bogus")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["enumerate"])
    assert exc.value.code == 2


def test_enumerate_checkpoint_file(capsys, tmp_path):
    ck = tmp_path / "c"
    code, first, _ = run(capsys, "enumerate", "--order", "6", "--checkpoint", str(ck))
    assert code == 0 and ck.exists()
    code, again, _ = run(capsys, "enumerate", "--order", "6", "--checkpoint", str(ck))
    assert first.splitlines()[:-1] == again.splitlines()[:-1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphlines", "lines", "Ch", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["numLines"] == 1
