"""Acceptance criteria, evaluated from the JSON report of ``symds reproduce``.

The CLI is run twice in subprocesses; each criterion prints one PASS/FAIL line.
"""

import json
import subprocess
import sys

import pytest

CMD = [sys.executable, "-m", "symds.cli", "reproduce", "--seed", "0"]


@pytest.fixture(scope="module")
def runs():
    a = subprocess.run(CMD, capture_output=True, timeout=600)
    b = subprocess.run(CMD, capture_output=True, timeout=600)
    return a, b


@pytest.fixture(scope="module")
def report(runs):
    return json.loads(runs[0].stdout)["result"]


def _line(capsys, num, name, ok, note=""):
    with capsys.disabled():
        print(f"\ncriterion {num:>2} {name}: {'PASS' if ok else 'FAIL'}{' ' + note if note else ''}")


def _criterion(report, num):
    return next(c for c in report["criteria"] if c["id"] == num)


@pytest.mark.parametrize("num", range(1, 10))
def test_criterion(report, num, capsys):
    c = _criterion(report, num)
    note = ""
    if not c["pass"] and "parts" in c["detail"]:
        note = "(" + ", ".join(k for k, v in c["detail"]["parts"].items() if not v) + ")"
    _line(capsys, num, c["name"], c["pass"], note)
    assert c["pass"], json.dumps(c["detail"].get("parts", c["detail"]))[:1500]


def test_criterion_10_determinism(runs, capsys):
    a, b = runs
    ok = a.stdout == b.stdout and len(a.stdout) > 0 and a.returncode == b.returncode
    _line(capsys, 10, "determinism", ok)
    assert ok


def test_exit_code_reflects_report(runs, report):
    assert runs[0].returncode == (0 if report["all_pass"] else 1)


def test_named_facts(report, capsys):
    bad = [f["name"] for f in report["facts"] if not f["pass"]]
    with capsys.disabled():
        print(f"\nnamed facts: {len(report['facts']) - len(bad)}/{len(report['facts'])} pass")
    assert not bad
