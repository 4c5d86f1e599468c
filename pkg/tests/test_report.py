import json

import pytest

from cp2trisect.report import Check, Report, check, emit_report


def test_check_status():
    assert check("a", True, 1, 1).status == "pass"
    assert check("a", False, 1, 2).status == "fail"
    assert check("a", None, 1, "?").status == "unknown"
    with pytest.raises(ValueError):
        Check("a", "maybe", "1", "1")


def test_report_ok_and_unknown():
    r = Report("demo", [check("a", True, 1, 1), check("b", None, 1, "?")])
    assert not r.ok()
    assert r.ok(allow_unknown=True)
    r.extend([check("c", False, 1, 2)])
    assert not r.ok(allow_unknown=True)


def test_text_and_json():
    r = Report("demo", [check("a", True, "(Z, 0)", "(Z, 0)", "a claim")], seed=3, tolerances={"tol": 1e-9})
    text = emit_report(r, "text")
    assert text.splitlines()[0] == "# target: demo  seed: 3"
    assert text.rstrip().endswith("# 1/1 checks passed")
    data = json.loads(emit_report(r, "json"))
    assert data["target"] == "demo" and data["seed"] == 3
    assert data["checks"][0] == {
        "name": "a", "status": "pass", "expected": "(Z, 0)", "observed": "(Z, 0)", "paper_ref": "a claim",
    }
    with pytest.raises(ValueError):
        emit_report(r, "xml")
