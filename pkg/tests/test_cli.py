import json
import shutil
import subprocess
import sys

import pytest

from fsynth.cli import main
from fsynth.formats import FORMATS
from fsynth.oracle import COMPLETE


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_bytes(data)
        return str(path)
    return _write


@pytest.mark.parametrize("data, word, code", [
    (b"[", "incomplete", 3), (b"[]", "complete", 0), (b"]", "incorrect", 4)])
def test_oracle(write, capsys, data, word, code):
    assert main(["oracle", "--format", "json", "--in", write("x.json", data)]) == code
    assert capsys.readouterr().out.strip() == word


def test_repair_writes_best_and_report(write, tmp_path):
    src = write("broken.json", b'{ "name": "Dave" "age": 42 }')
    out, rep = tmp_path / "fixed.json", tmp_path / "report.json"
    assert main(["repair", "--format", "json", "--in", src, "--out", str(out), "--report", str(rep)]) == 0
    assert out.read_bytes() == b'{ "name": "Dave" ,"age": 42 }'
    report = json.loads(rep.read_text())
    assert report["repairs"][0]["edits"] == 1
    edits = [r["edits"] for r in report["repairs"]]
    assert edits == sorted(edits)


def test_repair_valid_file_is_unchanged(write, tmp_path):
    out = tmp_path / "out"
    assert main(["repair", "--format", "json", "--in", write("ok.json", b"[1, 2]"), "--out", str(out),
                 "--report", str(tmp_path / "r.json")]) == 0
    assert out.read_bytes() == b"[1, 2]"
    assert json.loads((tmp_path / "r.json").read_text())["repairs"][0]["edits"] == 0


def test_repair_usage_errors(write, tmp_path, capsys):
    src = write("x", b"[")
    assert main(["repair", "--format", "nosuch", "--in", str(tmp_path / "missing"), "--out", "o"]) == 1
    assert "unknown format" in capsys.readouterr().err
    assert main(["repair", "--format", "json", "--in", str(tmp_path / "missing"), "--out", "o"]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["repair", "--format", "json"])
    assert exc.value.code == 1
    assert main(["repair", "--format", "json", "--in", src, "--out", "o", "--max-per-mask", "0"]) == 1


def test_repair_budget_gives_exit_2(write, tmp_path):
    src = write("x.json", b'{"a": [1, *** 2, ]]]}')
    assert main(["repair", "--format", "json", "--in", src, "--out", str(tmp_path / "o"),
                 "--budget", "5"]) == 2


def test_repair_no_insert_and_alphabet(write, tmp_path):
    src = write("x.json", b'{"ABCD":[*"1,2,3,4,5,6"]*}')
    out = tmp_path / "o"
    assert main(["repair", "--format", "json", "--in", src, "--out", str(out), "--no-insert"]) == 0
    assert out.read_bytes() == b'{"ABCD":["1,2,3,4,5,6"]}'
    alpha = write("alpha", b",")
    src = write("y.json", b'{ "name": "Dave" "age": 42 }')
    assert main(["repair", "--format", "json", "--in", src, "--out", str(out), "--alphabet-file", alpha]) == 0
    assert out.read_bytes() == b'{ "name": "Dave" ,"age": 42 }'


def test_ddmax(write, tmp_path):
    out = tmp_path / "o"
    assert main(["ddmax", "--format", "json", "--in", write("a", b"[*]+"), "--out", str(out)]) == 2
    assert out.read_bytes() == b""
    assert main(["ddmax", "--format", "json", "--in", write("b", b"1*1"), "--out", str(out)]) == 0
    assert out.read_bytes() == b"11"
    assert main(["ddmax", "--format", "json", "--in", write("c", b"[]"), "--out", str(out)]) == 1


def test_mutate_is_deterministic(write, tmp_path):
    src = write("v.json", b'{"a": [1, 2, 3]}')
    outs = []
    for i in range(2):
        out = tmp_path / f"m{i}"
        meta = tmp_path / f"m{i}.json"
        assert main(["mutate", "--format", "json", "--in", src, "--out", str(out), "--n", "1",
                     "--seed", "7", "--meta", str(meta)]) == 0
        outs.append((out.read_bytes(), meta.read_text()))
    assert outs[0] == outs[1]
    assert FORMATS["json"].classify(outs[0][0]) is not COMPLETE
    assert main(["mutate", "--in", src, "--out", str(tmp_path / "z"), "--n", "0"]) == 1


def test_env_seed_and_bad_env(write, tmp_path, monkeypatch):
    src = write("v.json", b'{"a": [1, 2, 3]}')
    monkeypatch.setenv("FSYNTH_SEED", "7")
    assert main(["mutate", "--in", src, "--out", str(tmp_path / "a")]) == 0
    monkeypatch.delenv("FSYNTH_SEED")
    assert main(["mutate", "--in", src, "--out", str(tmp_path / "b"), "--seed", "7"]) == 0
    assert (tmp_path / "a").read_bytes() == (tmp_path / "b").read_bytes()
    monkeypatch.setenv("FSYNTH_SEED", "seven")
    assert main(["mutate", "--in", src, "--out", str(tmp_path / "c")]) == 1


def test_corpus_and_bench(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    assert main(["corpus", "--out", str(corpus), "--formats", "json,ini", "--per-format", "2"]) == 0
    out = tmp_path / "r.jsonl"
    assert main(["bench", "--corpus", str(corpus), "--strategies", "fsynth,ddmax", "--out", str(out),
                 "--timeout", "20"]) == 0
    lines = [json.loads(x) for x in out.read_text().splitlines()]
    assert len(lines) == 2 * 2 * 2 * 2
    assert "strategy" in capsys.readouterr().err
    for r in lines:
        if r["status"] == "Repaired":
            import base64
            fmt = r["file_id"].split("/")[0]
            assert FORMATS[fmt].classify(base64.b64decode(r["repaired_b64"])) is COMPLETE
    assert main(["bench", "--corpus", str(corpus), "--strategies", "magic"]) == 1
    assert main(["bench", "--corpus", str(tmp_path / "nope")]) == 1


def test_console_script(tmp_path):
    exe = shutil.which("fsynth")
    cmd = [exe] if exe else [sys.executable, "-m", "fsynth.cli"]
    src = tmp_path / "x.json"
    src.write_bytes(b"]")
    proc = subprocess.run(cmd + ["oracle", "--format", "json", "--in", str(src)], capture_output=True)
    assert proc.returncode == 4 and proc.stdout.strip() == b"incorrect"
