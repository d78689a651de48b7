import json
import subprocess
import sys

import pytest

from qverify.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cyclotomic(capsys):
    assert run(capsys, "cyclotomic", "6")[:2] == (0, "q^2 - q + 1\n")
    assert run(capsys, "cyclotomic", "1")[:2] == (0, "q - 1\n")
    code, _, err = run(capsys, "cyclotomic", "0")
    assert code == 2 and "must be >= 1" in err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    for ident in ("CARLITZ", "GEN_M", "TH_MAIN_M", "ST_MODP", "CYCLO_PRODUCT"):
        assert ident in out
    code, out, _ = run(capsys, "list", "--suite", "congruences")
    ids = {line.split()[1] for line in out.splitlines()}
    assert "TH_MAIN_M" in ids and "CARLITZ" not in ids and all(line.startswith("congruences") for line in out.splitlines())
    code, out, _ = run(capsys, "list", "--id", "CARLITZ")
    assert len(out.splitlines()) == 1 and "Carlitz transformation" in out
    assert run(capsys, "list", "--id", "NOPE")[0] == 2


def test_single_cases(capsys):
    assert run(capsys, "verify", "--id", "TH_MAIN_M", "--n", "9", "--m", "5")[0] == 0
    code, out, _ = run(capsys, "verify", "--id", "TH_MAIN_M", "--n", "9", "--m", "6", "--json")
    report = json.loads(out)
    assert code == 1
    assert report["cases"][0]["status"] == "error" and "ParamOutOfRange" in report["cases"][0]["detail"]
    assert report["summary"] == {"pass": 0, "fail": 0, "error": 1}


def test_identity_suite_small(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--suite", "identities", "--n-max", "4", "--trials", "2",
                     "--seed", "42", "--out", str(out))
    report = json.loads(out.read_text())
    assert code == 0
    from qverify.identities import REGISTRY

    assert [c["id"] for c in report["cases"]] == sorted(
        (c["id"] for c in report["cases"]), key=list(REGISTRY).index)
    assert {c["id"] for c in report["cases"]} == set(REGISTRY)
    assert all(c["status"] == "pass" for c in report["cases"])
    assert "wallMillis" not in report["summary"] and b"\r" not in out.read_bytes()


def test_determinism_across_threads(capsys, tmp_path, monkeypatch):
    args = ["verify", "--suite", "all", "--n-max", "5", "--trials", "2", "--p", "7", "--seed", "9"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, *args, "--out", str(a))[0] == 0
    monkeypatch.setenv("QVERIFY_THREADS", "2")
    assert run(capsys, *args, "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_timings_flag(capsys):
    code, out, _ = run(capsys, "verify", "--id", "LIU_SQ", "--n", "5", "--json", "--timings")
    report = json.loads(out)
    assert code == 0 and "wallMillis" in report["summary"] and "elapsedMicros" in report["cases"][0]


def test_corpus(capsys, tmp_path):
    corpus = [
        {"id": "CARLITZ", "n": 3, "params": {}, "sample": {"a": "1/2", "b": "-3"}},
        {"id": "GEN_M", "n": 4, "params": {"m": 2}, "seed": 5},
        {"id": "TH_MAIN_D", "n": 9, "params": {"d": -2}},
        {"id": "RISE_MODP2", "n": 7, "params": {"r": 2, "d": 10}},
        {"id": "CYCLO_PRODUCT", "n": 12},
    ]
    path = tmp_path / "ok.json"
    path.write_text(json.dumps(corpus))
    code, out, _ = run(capsys, "verify", "--corpus", str(path), "--json")
    report = json.loads(out)
    assert code == 0 and report["summary"]["pass"] == 5
    assert report["cases"][0]["params"]["a"] == "1/2"

    # the LIU_SQ statement does not hold modulo Phi_n^3: a genuine failure
    path.write_text(json.dumps(corpus + [{"id": "LIU_SQ", "n": 5, "params": {"r": 3}}]))
    code, out, _ = run(capsys, "verify", "--corpus", str(path), "--json")
    report = json.loads(out)
    assert code == 1 and report["cases"][-1]["status"] == "fail"


def test_fail_fast(capsys, tmp_path):
    corpus = [
        {"id": "LIU_SQ", "n": 5, "params": {"r": 3}},
        {"id": "LIU_SQ", "n": 7, "params": {}},
    ]
    path = tmp_path / "c.json"
    path.write_text(json.dumps(corpus))
    code, out, _ = run(capsys, "verify", "--corpus", str(path), "--fail-fast", "--json")
    report = json.loads(out)
    assert code == 1 and len(report["cases"]) == 1 and report["summary"]["fail"] == 1


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "verify", "--id", "NOPE")[0] == 2
    assert run(capsys, "verify", "--trials", "0")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", "--corpus", str(bad))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qverify", "cyclotomic", "6"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "q^2 - q + 1\n"
