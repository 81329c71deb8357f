import json
import subprocess
import sys

import pytest

from invseq import cli, references
from invseq.references import ReferenceSequence


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_list(capsys):
    code, out, _ = run(capsys, "count", ">,<=", "--n", "1..9", "--format", "list")
    assert code == 0
    assert out.strip() == "1,2,6,20,72,272,1064,4272,17504"
    _, out, _ = run(capsys, "count", "=,!=", "--n", "1..9", "--format", "list")
    assert out.strip() == "1,2,4,10,34,154,874,5914,46234"
    _, out, _ = run(capsys, "count", "<=,>=", "--n", "3", "--format", "list")
    assert out.strip() == "3"


def test_count_triple_and_formats(capsys):
    _, out, _ = run(capsys, "count", ">,<,-", "--n", "1..6", "--format", "list")
    assert out.strip() == "1,2,6,21,79,311"
    code, out, _ = run(capsys, "count", ">=,<", "--n", "3", "--by", "last", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,count,by_last", "3,4,0:2 1:1 2:1"]
    _, out, _ = run(capsys, "count", ">=,<", "--n", "2..3", "--by", "dist")
    assert out.splitlines()[0] == "avoiders of (>=,<)"
    assert "| 3 | 4 |" in out


def test_count_json_is_reproducible(capsys):
    argv = ["count", "!=,!=", "--n", "1..6", "--format", "json", "--reproducible"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    doc = json.loads(a)
    assert "generated_at" not in doc
    assert doc["tool"] == "invseq" and doc["pattern"] == "!=,!="
    assert [r["total"] for r in doc["rows"]] == ["1", "2", "4", "10", "26", "76"]
    _, c, _ = run(capsys, *argv[:-1])
    assert "generated_at" in json.loads(c)


def test_usage_errors(capsys):
    assert run(capsys, "count", "<,~")[0] == 2
    assert run(capsys, "count", "<,<", "--n", "5..2")[0] == 2
    assert run(capsys, "count", "<")[0] == 2
    assert run(capsys, "series", "nope")[0] == 2
    assert run(capsys, "series", "catalan", "--t", "1")[0] == 2
    assert run(capsys, "oeis-check", "--id", "A999999")[0] == 2
    assert run(capsys, "bijection", "upsilon", "012")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_resource_guard(capsys):
    code, _, err = run(capsys, "count", "<,<", "--n", "13")
    assert code == 3
    assert "INVSEQ_UNSAFE_MAX_N" in err
    assert run(capsys, "classify", "--nmax", "11")[0] == 3


def test_guard_is_documented_as_unsafe(capsys):
    with pytest.raises(SystemExit):
        cli.main(["count", "--help"])
    out, _ = capsys.readouterr()
    assert "UNSAFE" in out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--level", "wilf", "--nmax", "10", "--format", "json", "--reproducible")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"][0]["num_classes"] == 30 and doc["results"][0]["passed"]
    code, out, _ = run(capsys, "classify", "--level", "strong", "--nmax", "10")
    assert code == 0 and "31 classes" in out
    code, out, _ = run(capsys, "classify", "--level", "strong", "--nmax", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["results"][0]["num_classes"] <= 31


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "table1")
    assert code == 0 and out.startswith("PASS table1")
    code, out, _ = run(capsys, "verify", "dist-symmetry", "--format", "json", "--reproducible")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert "seconds" not in json.dumps(doc)
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nope"])
    assert exc.value.code == 2


def test_verify_reports_mismatch(capsys, monkeypatch):
    from invseq import verify

    def broken():
        r = verify.SuiteReport("broken")
        r.add("always fails", False)
        return r

    monkeypatch.setitem(verify.SUITES, "table1", broken)
    code, out, _ = run(capsys, "verify", "table1")
    assert code == 1 and "FAIL" in out


def test_series(capsys):
    _, out, _ = run(capsys, "series", "thm_1_3", "--order", "6")
    assert out.strip() == "1 + 1*z + 2*z^2 + 6*z^3 + 20*z^4 + 72*z^5 + 272*z^6"
    _, out, _ = run(capsys, "series", "I_eq_le", "--order", "5", "--t", "1")
    assert out.strip() == "1 + 1*z + 2*z^2 + 3*z^3 + 5*z^4 + 8*z^5"
    _, out, _ = run(capsys, "series", "catalan", "--order", "4")
    assert out.strip() == "1 + 1*z + 2*z^2 + 5*z^3 + 14*z^4"
    _, out, _ = run(capsys, "series", "R_zt", "--order", "2", "--format", "json", "--reproducible")
    assert json.loads(out)["coefficients"] == [["1"], ["0", "1"], ["0", "1", "1"]]


def test_oeis_check(capsys):
    for oeis in ("A071356", "A000085", "A200403"):
        code, out, _ = run(capsys, "oeis-check", "--id", oeis)
        assert code == 0
        assert out.strip().endswith("match for 9 terms")
    code, out, _ = run(capsys, "oeis-check", "--all", "--format", "json", "--reproducible")
    assert code == 0 and all(r["match"] for r in json.loads(out)["results"])


def test_oeis_check_reports_mismatch(capsys, monkeypatch):
    bad = ReferenceSequence("A000000", (1, 2, 3), 1, "<,<", "pattern", "wrong on purpose")
    monkeypatch.setitem(references.REFERENCES, "A000000", bad)
    code, out, _ = run(capsys, "oeis-check", "--id", "A000000")
    assert code == 1 and "MISMATCH" in out


def test_bijection_pairs(capsys):
    code, out, _ = run(capsys, "bijection", "upsilon", "00114", "001", "--reproducible")
    assert code == 0
    doc = json.loads(out)
    assert doc["map"] == "upsilon" and doc["inverse"] is False
    assert doc["pairs"] == [{"input": "00114", "output": "42513"}, {"input": "001", "output": "321"}]
    _, out, _ = run(capsys, "bijection", "varphi", "011344421", "--reproducible")
    assert json.loads(out)["pairs"][0]["output"] == "ENEEN*N*ENEEENNN"
    _, out, _ = run(capsys, "bijection", "varphi_multi_prime", "ENEED4D2ENED3", "--inverse", "--reproducible")
    assert json.loads(out)["pairs"][0]["output"] == "011345442111"
    _, out, _ = run(capsys, "bijection", "gamma", "{3,2}", "--inverse", "--length", "6", "--reproducible")
    assert json.loads(out)["pairs"][0]["output"] == "012322"
    _, out, _ = run(
        capsys, "bijection", "swap_occurrences", "0110", "--variant", "EQGT_to_GTEQ", "--set", "{2}", "--reproducible"
    )
    assert json.loads(out)["pairs"][0]["output"] == "0100"
    code, out, _ = run(capsys, "bijection", "composite_1243_to_4213", "1423", "--reproducible")
    assert code == 0


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "invseq", "count", ">=,<", "--n", "1..5", "--format", "list"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1,2,4,8,16"
