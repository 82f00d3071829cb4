"""Smoke tests for the python module and the command line tool."""

import json
import os
import subprocess
import sys

import pytest

MODULE_DIR = os.environ.get("CANVASLAB_PYMODULE_DIR")
if MODULE_DIR:
    sys.path.insert(0, MODULE_DIR)

canvaslab = pytest.importorskip("canvaslab")

CLI = os.environ.get("CANVASLAB_CLI")
FIXTURES = os.environ.get("CANVASLAB_FIXTURES")


def test_wheel_fixture_roundtrip():
    t = canvaslab.fixture_w5()
    assert t.n == 6
    assert t.outer == [0, 1, 2, 3, 4]
    text = t.to_text()
    again = canvaslab.Canvas.from_text(text)
    assert again.to_text() == text


def test_validation_and_criticality():
    t = canvaslab.fixture_w5()
    assert t.validate()["ok"]
    assert t.is_critical()
    witnesses = t.criticality_witnesses()
    assert len(witnesses) == 5
    assert all(w["edge"][1] == 5 for w in witnesses)

    k4 = canvaslab.fixture_k4([1, 2, 3, 4])
    assert not k4.is_critical()


def test_coloring_search():
    t = canvaslab.fixture_w5()
    phis = t.boundary_colorings()
    assert len(phis) == 1
    assert t.extend(phis[0]) is None  # the hub is stuck
    k4 = canvaslab.fixture_k4([1, 2, 3, 4])
    full = k4.extend({0: 1, 1: 2, 2: 3})
    assert full is not None
    assert full[3] == 4


def test_deficiency_values():
    t = canvaslab.fixture_w5()
    assert t.deficiency() == 2
    assert t.deficiency_via_faces() == 2
    assert t.d_value() == "16/9"
    b, q = t.boundary_sets()
    assert b == [5] and q == [5]

    c4e = canvaslab.fixture_c4e()
    assert c4e.deficiency() == 1
    assert c4e.chords() == [(0, 2)]


def test_extractor():
    k4 = canvaslab.fixture_k4([1, 2, 3, 4])
    res = k4.extract_minimal_extender()
    assert res["equals_cycle"]
    w5 = canvaslab.fixture_w5()
    res = w5.extract_minimal_extender()
    assert not res["equals_cycle"]
    assert res["vertices"] <= 19 * 5


def test_small_scan():
    rep = canvaslab.scan([3, 4], m=1, jobs=2)
    assert rep["instances"] > 0
    assert rep["critical"] == 2


def test_thomassen():
    t = canvaslab.fixture_w5()
    # Rebuild with 3-lists on the rim and a precolored vertex.
    text = t.to_text().replace(
        '"lists":[[0],[1],[2],[3],[4],[0,1,2,3,4]]',
        '"lists":[[0],[1,2,3],[1,2,3],[2,3,4],[1,3,4],[0,1,2,3,4]]',
    )
    g = canvaslab.Canvas.from_text(text)
    phi = canvaslab.thomassen_color(g, {0, 1, 2, 3, 4}, {0})
    assert phi[0] == 0
    assert len(phi) == 6


@pytest.mark.skipif(not CLI or not FIXTURES, reason="cli paths not provided")
def test_cli_exit_codes(tmp_path):
    w5 = os.path.join(FIXTURES, "w5.canvas")
    assert subprocess.run([CLI, "validate", w5]).returncode == 0

    r = subprocess.run([CLI, "color", w5, "--phi", "0=0,1=1,2=2,3=3,4=4"],
                       capture_output=True, text=True)
    assert r.returncode == 1
    assert "NO_EXTENSION" in r.stdout

    r = subprocess.run([CLI, "color", w5, "--phi", "5=0"], capture_output=True)
    assert r.returncode == 2  # hub is not a boundary vertex

    assert subprocess.run([CLI, "critical", w5], capture_output=True).returncode == 0
    k4 = os.path.join(FIXTURES, "k4-4list.canvas")
    assert subprocess.run([CLI, "critical", k4], capture_output=True).returncode == 1

    r = subprocess.run([CLI, "extract", k4], capture_output=True, text=True)
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["n"] == 3  # H collapses to the outer triangle

    truncated = tmp_path / "bad.canvas"
    truncated.write_text('{"n":6,"rotation":[[1,5,4]')
    assert subprocess.run([CLI, "validate", str(truncated)],
                          capture_output=True).returncode == 2

    shrunk = tmp_path / "short.canvas"
    with open(w5) as f:
        doc = json.load(f)
    doc["lists"][5] = [0, 1, 2, 3]
    shrunk.write_text(json.dumps(doc) + "\n")
    r = subprocess.run([CLI, "validate", str(shrunk)], capture_output=True, text=True)
    assert r.returncode == 1
    assert "short-internal-list" in r.stdout


@pytest.mark.skipif(not CLI or not FIXTURES, reason="cli paths not provided")
def test_cli_draw(tmp_path):
    w5 = os.path.join(FIXTURES, "w5.canvas")
    svg = tmp_path / "w5.svg"
    dot = tmp_path / "w5.dot"
    assert subprocess.run([CLI, "draw", w5, "--svg", str(svg), "--dot", str(dot)],
                          capture_output=True).returncode == 0
    body = svg.read_text()
    assert "<svg" in body and body.count("<circle") == 6
    dot_text = dot.read_text()
    assert dot_text.startswith("graph") and "--" in dot_text

    # Non-2-connected input is refused.
    bowtie = tmp_path / "bowtie.canvas"
    bowtie.write_text(
        '{"n":5,"rotation":[[1,2],[2,0],[3,0,1,4],[2,4],[3,2]],'
        '"outer":[0,1,2],"lists":[[1],[2],[3],[1],[2]]}\n')
    assert subprocess.run([CLI, "draw", str(bowtie)], capture_output=True).returncode == 1


@pytest.mark.skipif(not CLI or not FIXTURES, reason="cli paths not provided")
def test_cli_scan_and_replay(tmp_path):
    report = tmp_path / "report.txt"
    r = subprocess.run(
        [CLI, "scan", "--k", "3", "--m", "1", "--report", str(report)],
        capture_output=True, text=True)
    assert r.returncode == 0  # no violations at k=3
    lines = report.read_text().strip().splitlines()
    header = json.loads(lines[0])
    footer = json.loads(lines[-1])
    assert header["type"] == "header" and "seed" in header
    assert footer["type"] == "footer" and footer["violations"] == 0

    # Parameters violating the first inequality are rejected with its name.
    r = subprocess.run(
        [CLI, "scan", "--k", "3", "--params", "1/2,1/12,2/3"],
        capture_output=True, text=True)
    assert r.returncode == 2
    assert "3e <= 2a" in r.stderr


@pytest.mark.skipif(not CLI or not FIXTURES, reason="cli paths not provided")
def test_certificate_replay_via_python():
    res = canvaslab.replay_certificate("{not json")
    assert not res["well_formed"]
