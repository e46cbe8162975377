import json
import os

import pytest

import filtcat


def shipped_path():
    root = os.environ.get("FILTCAT_REPO_DIR")
    assert root, "FILTCAT_REPO_DIR must point at the repository root"
    return os.path.join(root, "instances", "coim_vs_im.json")


def test_command_roster():
    names = filtcat.command_names()
    for c in ["check", "op", "strict", "demo", "verify", "generate"]:
        assert c in names


def test_demo_verdict():
    res = filtcat.run("demo", "coim-vs-im")
    assert res.ok
    assert "f is mono+epi but not strict" in res.text
    assert res.report["ok"] is True
    assert res.report["strict"] is False


def test_image_and_coimage_dims():
    res = filtcat.run("op", "f", in_path=shipped_path(), kind="im")
    assert res.ok
    assert "dims 2,3,4,5,5" in res.text
    res = filtcat.run("op", "f", in_path=shipped_path(), kind="coim")
    assert "dims 1,2,3,4,5" in res.text


def test_verify_suite():
    res = filtcat.verify("coim-vs-im")
    assert res.ok
    assert res.report["passed"] == res.report["trials"] == 1
    assert "1/1 passed" in res.text


def test_verify_suites_listed():
    suites = filtcat.verify_suites()
    assert "rees-resolution" in suites
    assert "module-resolution" in suites


def test_canonical_text_round_trip():
    with open(shipped_path(), encoding="utf-8") as f:
        body = f.read()
    assert filtcat.canonical_text(body) == body
    # the canonical form is a fixed point
    assert filtcat.canonical_text(filtcat.canonical_text(body)) == body


def test_errors_surface_as_exceptions():
    with pytest.raises(filtcat.FiltcatError):
        filtcat.run("no-such-command")
    with pytest.raises(filtcat.FiltcatError):
        filtcat.run("op", "f", in_path=shipped_path())  # missing kind


def test_json_report_is_valid():
    res = filtcat.run("check", in_path=shipped_path())
    assert res.ok
    # report round trips through the json module unchanged in content
    assert json.loads(json.dumps(res.report)) == res.report
