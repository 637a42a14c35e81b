"""End-to-end runs of the command line entry point, in process."""
import json

import pytest

from gentle_silt import io_json
from gentle_silt.cli import main
from gentle_silt.curves import permissible_curve
from gentle_silt.fixtures import type_a
from gentle_silt.surfaces import surface_from_algebra

from conftest import fixture_path


def test_check_ok(capsys):
    rc = main(["check", fixture_path("A3_rl")])
    out = capsys.readouterr().out
    assert rc == 0
    assert "gentle: yes" in out
    assert "type: A3[><]" in out
    assert "surface: disk" in out


def test_check_not_gentle(tmp_path, capsys):
    obj = {
        "vertices": ["0", "1", "2", "3"],
        "arrows": [
            {"id": "a", "source": "0", "target": "1"},
            {"id": "b", "source": "0", "target": "2"},
            {"id": "c", "source": "0", "target": "3"},
        ],
        "relations": [],
    }
    f = tmp_path / "fork.json"
    f.write_text(io_json.dumps(obj))
    rc = main(["check", str(f)])
    out = capsys.readouterr().out
    assert rc == 2
    assert "gentle: no" in out
    assert "source of more than two arrows" in out


def test_check_infinite_dimensional(tmp_path, capsys):
    obj = {
        "vertices": ["0", "1"],
        "arrows": [
            {"id": "a", "source": "0", "target": "1"},
            {"id": "b", "source": "1", "target": "0"},
        ],
        "relations": [],
    }
    f = tmp_path / "loop.json"
    f.write_text(io_json.dumps(obj))
    rc = main(["check", str(f)])
    out = capsys.readouterr().out
    assert rc == 0
    # the path algebra of a cycle without relations is hereditary but
    # infinite dimensional; check still reports, it just has no surface
    assert "type: general gentle" in out
    assert "surface: none" in out


def test_verify_a2(capsys):
    rc = main(["verify", fixture_path("A2_r"), "--mode", "exhaustive"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "pairs: 5 (checked 5)" in out
    assert "verdict: pass" in out
    assert "max global dimension: 1" in out


def test_verify_writes_report_and_dot(tmp_path, capsys):
    rep = tmp_path / "rep.json"
    dot = tmp_path / "x.dot"
    rc = main([
        "verify", fixture_path("A2_r"), "--mode", "exhaustive",
        "--out", str(rep), "--dot", str(dot),
    ])
    capsys.readouterr()
    assert rc == 0
    obj = io_json.read_json(str(rep))
    assert obj["schema"] == "gentle-silt/report/1"
    assert obj["verdict"] == "pass"
    assert obj["counts"] == {"pairs": 5, "checked": 5}
    text = dot.read_text()
    assert text.count(" -- ") == 5


def test_verify_jobs_agree(tmp_path, capsys):
    outs = []
    for jobs in ("1", "2"):
        p = tmp_path / f"r{jobs}.json"
        rc = main([
            "verify", fixture_path("A3_rr"), "--mode", "exhaustive",
            "--jobs", jobs, "--out", str(p),
        ])
        assert rc == 0
        outs.append(p.read_text())
    capsys.readouterr()
    assert outs[0] == outs[1]


def test_verify_sampling(capsys):
    rc = main([
        "verify", fixture_path("A4_rlr"), "--mode", "exhaustive",
        "--sample", "5",
    ])
    out = capsys.readouterr().out
    assert rc == 0
    assert "pairs: 42 (checked 9)" in out


def test_enumerate_exhaustive_on_annulus_fails(capsys):
    rc = main(["enumerate", fixture_path("Atilde_1_1"), "--mode", "exhaustive"])
    err = capsys.readouterr().err
    assert rc == 2
    assert "cycles have infinitely many pairs" in err


def test_enumerate_kronecker_depth(tmp_path, capsys):
    p = tmp_path / "pairs.json"
    rc = main([
        "enumerate", fixture_path("Atilde_1_1"), "--mode", "depth:8",
        "--out", str(p),
    ])
    capsys.readouterr()
    assert rc == 0
    obj = io_json.read_json(str(p))
    assert obj["count"] == 13
    assert len(obj["events"]) == 1


def test_embed_matches_library(tmp_path, capsys):
    pres = type_a(">")
    s = surface_from_algebra(pres)
    c = permissible_curve(s, ("1",), ())
    cf = tmp_path / "curve.json"
    cf.write_text(io_json.dumps(io_json.curve_to_obj(s, c)))
    out = tmp_path / "cx.json"
    rc = main(["embed", fixture_path("A2_r"), str(cf), "--out", str(out)])
    capsys.readouterr()
    assert rc == 0
    obj = io_json.read_json(str(out))
    assert obj["schema"] == "gentle-silt/complex/1"
    from gentle_silt.embedding import embed_curve

    assert obj == io_json.complex_to_obj(embed_curve(s, c))


def test_surface_command(tmp_path, capsys):
    p = tmp_path / "s.json"
    rc = main(["surface", fixture_path("Atilde_2_1"), "--out", str(p)])
    capsys.readouterr()
    assert rc == 0
    obj = io_json.read_json(str(p))
    assert obj["schema"] == "gentle-silt/surface/1"
    assert obj["kind"] == "annulus"


def test_classify_report(tmp_path, capsys):
    rep = tmp_path / "rep.json"
    main([
        "verify", fixture_path("A3_rl"), "--mode", "exhaustive",
        "--out", str(rep),
    ])
    capsys.readouterr()
    rc = main(["classify", str(rep)])
    out = capsys.readouterr().out
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].split() == ["form", "factors", "count"]
    rows = {tuple(l.split()[:2]): int(l.split()[2]) for l in lines[1:-2]}
    assert rows == {("1", "A3"): 11, ("2", "A1+A1+A1"): 1, ("2", "A1+A2"): 2}
    assert "records: 14" in out
    assert "verdict: pass" in out


def test_classify_failing_report(tmp_path, capsys):
    rep = tmp_path / "rep.json"
    main([
        "verify", fixture_path("A2_r"), "--mode", "exhaustive",
        "--out", str(rep),
    ])
    capsys.readouterr()
    obj = io_json.read_json(str(rep))
    obj["verdict"] = "fail"
    obj["failures"] = ["made up"]
    rep.write_text(io_json.dumps(obj))
    rc = main(["classify", str(rep)])
    capsys.readouterr()
    assert rc == 1


def test_export_dot_kinds(tmp_path, capsys):
    rc = main(["export-dot", fixture_path("A3_rl")])
    out = capsys.readouterr().out
    assert rc == 0 and out.startswith("digraph")

    pairs = tmp_path / "pairs.json"
    main([
        "enumerate", fixture_path("A2_r"), "--mode", "exhaustive",
        "--out", str(pairs),
    ])
    capsys.readouterr()
    rc = main(["export-dot", str(pairs)])
    out = capsys.readouterr().out
    assert rc == 0 and out.count(" -- ") == 5

    rep = tmp_path / "rep.json"
    main([
        "verify", fixture_path("A2_r"), "--mode", "exhaustive",
        "--out", str(rep),
    ])
    capsys.readouterr()
    rc = main(["export-dot", str(rep)])
    out = capsys.readouterr().out
    assert rc == 0
    # one digraph per endomorphism quiver, plus the undirected exchange graph
    assert out.count("digraph") == 5
    assert 'graph "exchange"' in out


def test_missing_file(capsys):
    rc = main(["check", "/nonexistent/x.json"])
    err = capsys.readouterr().err
    assert rc == 2
    assert err.startswith("error: cannot read")


def test_schema_violation_exit(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"vertices": "oops", "arrows": []}))
    rc = main(["check", str(f)])
    err = capsys.readouterr().err
    assert rc == 2
    assert "schema violation at /vertices" in err


def test_jobs_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("GENTLE_SILT_JOBS", "2")
    p = tmp_path / "r.json"
    rc = main([
        "verify", fixture_path("A2_l"), "--mode", "exhaustive",
        "--out", str(p),
    ])
    capsys.readouterr()
    assert rc == 0
    assert io_json.read_json(str(p))["verdict"] == "pass"
    monkeypatch.setenv("GENTLE_SILT_JOBS", "zero")
    rc = main(["verify", fixture_path("A2_l"), "--mode", "exhaustive"])
    err = capsys.readouterr().err
    assert rc == 2 and "GENTLE_SILT_JOBS" in err
