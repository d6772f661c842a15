import io
import json
import subprocess
import sys

import pytest

from uqfm import checks as C
from uqfm.cli import main
from uqfm.matalg import r0_matrix
from uqfm.reps import import_matrix


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def verify_json(*argv):
    code, text = run("verify", "--format", "json", "--no-timing", *argv)
    return code, json.loads(text)


def test_list_has_enough_checks():
    code, text = run("list")
    rows = [line.split("\t") for line in text.strip().splitlines()]
    assert code == 0 and len(rows) >= 60
    anchors = {r[0]: r[2] for r in rows}
    assert anchors["hecke.tl"] == "Hecke braid relation"
    assert anchors["spectral.lemma41"] == "Lemma 4.1"
    assert [r[0] for r in rows] == sorted(r[0] for r in rows)


def test_suite_filter_and_schema():
    code, doc = verify_json("--suite", "frt", "--jobs", "1")
    assert code == 0
    assert set(doc) == {"version", "options", "checks"}
    assert doc["options"]["suites"] == ["frt"]
    assert doc["options"]["spins"] == [0, 1, 2] and doc["options"]["q_half"] == "5/7"
    ids = [c["check_id"] for c in doc["checks"]]
    assert ids == sorted(ids) and "hecke.tl" in ids
    assert all(C.REGISTRY[i].suite == "frt" for i in ids)
    for c in doc["checks"]:
        assert set(c) == {"check_id", "paper_anchor", "status", "residual_summary", "millis"}
        assert c["status"] == "PASS" and c["millis"] == 0


def test_output_is_deterministic_across_workers():
    argv = ("verify", "--suite", "fm-gl2", "constant-k", "--format", "json", "--no-timing")
    _, one = run(*argv, "--jobs", "1")
    _, two = run(*argv, "--jobs", "1")
    _, par = run(*argv, "--jobs", "3")
    assert one == two == par


def test_options_are_recorded():
    _, doc = verify_json("--suite", "reps", "--spin", "1", "3", "--q-half", "2/3", "--jobs", "1")
    assert doc["options"]["spins"] == [1, 3] and doc["options"]["q_half"] == "2/3"


def test_text_report():
    code, text = run("verify", "--suite", "reps", "--jobs", "1")
    assert code == 0
    assert text.strip().splitlines()[-1].endswith("0 warned, 0 failed")


def _inject(monkeypatch, check_id, status):
    monkeypatch.setitem(C.REGISTRY, check_id, C.Check(check_id, "(X)", "reps", "injected",
                                                       lambda opts: C.Outcome(status, "injected")))


def test_failure_exit_code(monkeypatch):
    _inject(monkeypatch, "reps.zz_injected", C.FAIL)
    code, doc = verify_json("--suite", "reps", "--jobs", "1")
    assert code == 1
    assert doc["checks"][-1]["status"] == "FAIL"


def test_crash_counts_as_failure(monkeypatch):
    def boom(opts):
        raise RuntimeError("boom")

    monkeypatch.setitem(C.REGISTRY, "reps.zz_crash", C.Check("reps.zz_crash", "(X)", "reps", "crash", boom))
    code, doc = verify_json("--suite", "reps", "--jobs", "1")
    assert code == 1
    assert doc["checks"][-1]["residual_summary"].startswith("RuntimeError")


def test_warn_only_fails_when_strict(monkeypatch):
    _inject(monkeypatch, "reps.zz_warn", C.WARN)
    assert run("verify", "--suite", "reps", "--jobs", "1")[0] == 0
    assert run("verify", "--suite", "reps", "--jobs", "1", "--strict")[0] == 1


def test_fail_fast_stops_early(monkeypatch):
    _inject(monkeypatch, "reps.aa_injected", C.FAIL)
    code, doc = verify_json("--suite", "reps", "--jobs", "1", "--fail-fast")
    assert code == 1
    assert [c["check_id"] for c in doc["checks"]] == ["reps.aa_injected"]


@pytest.mark.parametrize("argv", [
    ("verify", "--suite", "nope"),
    ("verify", "--q-half", "1"),
    ("verify", "--q-half", "x"),
    ("verify", "--spin", "-1"),
    ("verify", "--format", "xml"),
    ("verify", "--jobs", "0"),
    ("export-matrix", "--object", "nope", "--spin", "1", "--out", "x.json"),
    ("normalize", "--pres", "SL2", "W0"),
    ("frobnicate",),
    (),
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_export_matrix(tmp_path):
    out = tmp_path / "r0.json"
    code, text = run("export-matrix", "--object", "R0", "--spin", "1", "--out", str(out))
    assert code == 0 and "R0" in text
    assert import_matrix(out) == r0_matrix()


def test_normalize():
    code, text = run("normalize", "E*F - F*E")
    assert code == 0 and "K" in text
    assert run("normalize", "--pres", "ALG_A", "Zt1*W0")[0] == 0


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "uqfm.cli", "verify", "--suite", "reps", "--format", "json",
                           "--no-timing"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert all(c["status"] == "PASS" for c in json.loads(proc.stdout)["checks"])
