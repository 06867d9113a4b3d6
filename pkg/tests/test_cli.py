"""CLI surface: subcommands, exit codes, and byte-deterministic output."""

import json
from importlib import resources

from resint.cli import main


def _data(name):
    return resources.files("resint.data").joinpath(name)


def test_verify_bundled_e6_exits_zero(tmp_path, capsys):
    report = tmp_path / "r.json"
    code = main(["--json", str(report), "verify", str(_data("e6.scenario.json"))])
    assert code == 0
    out = capsys.readouterr().out
    assert "summary: 12 pass" in out
    data = json.loads(report.read_text())
    assert data["summary"]["pass"] == 12


def test_verify_failing_expectation_exits_one(tmp_path):
    doc = {
        "format": 1,
        "name": "boom",
        "ring": {"vars": ["x", "y"]},
        "polys": {},
        "ideals": {"X": ["x"], "Y": ["y"]},
        "checks": [{"kind": "ideal_equals", "args": ["X", "Y"]}],
    }
    path = tmp_path / "s.json"
    path.write_text(json.dumps(doc))
    assert main(["--json", str(tmp_path / "r.json"), "verify", str(path)]) == 1


def test_verify_missing_file_exits_two(capsys):
    assert main(["verify", "/nonexistent/scenario.json"]) == 2
    assert "error" in capsys.readouterr().err


def test_verify_resolves_bundled_names(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["--json", str(tmp_path / "r.json"), "verify", "e6"]) == 0


def test_verify_check_error_exits_two(tmp_path):
    doc = {
        "format": 1,
        "ring": {"vars": ["x"]},
        "polys": {},
        "ideals": {"U": ["1"]},
        "checks": [{"kind": "codim_equals", "args": ["U", 0]}],
    }
    path = tmp_path / "s.json"
    path.write_text(json.dumps(doc))
    assert main(["--json", str(tmp_path / "r.json"), "verify", str(path)]) == 2


def test_family_counts(capsys):
    assert main(["family", "pfaffian-submax", "--m", "5"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 5
    assert main(["family", "e6", "--ideal", "J23"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 6
    assert main(["family", "typeA-left", "--k", "2", "--n", "5", "--s", "1"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 3


def test_family_errors(capsys):
    assert main(["family", "e6"]) == 2
    assert "available" in capsys.readouterr().err
    assert main(["family", "pfaffian-containing", "--m", "5", "--j", "1"]) == 2
    capsys.readouterr()


def test_op_quotient(capsys):
    assert main(["op", "quotient", "--ring", "x,y", "--gens", "x*y", "--by", "y"]) == 0
    assert capsys.readouterr().out.strip() == "x"


def test_op_codim(capsys):
    assert main(["op", "codim", "--ring", "a,b,c,d,e", "--gens", "a;b;c"]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_op_member_pluecker_relation(capsys):
    ring = "p_12,p_13,p_14,p_23,p_24,p_34"
    rel = "p_12*p_34 - p_13*p_24 + p_14*p_23"
    assert main(["op", "member", "--ring", ring, "--gens", rel, "--poly", rel]) == 0
    assert capsys.readouterr().out.strip() == "true"


def test_op_mu(capsys):
    assert main(["op", "mu", "--ring", "x,y", "--gens", "x;y;x+y"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_op_parse_error_exits_two(capsys):
    assert main(["op", "codim", "--ring", "x", "--gens", "x +"]) == 2
    capsys.readouterr()


def test_graph_gk_dot(tmp_path):
    out = tmp_path / "g.dot"
    assert main(["graph", "gk", "E", "6", "6", "--dot", str(out)]) == 0
    text = out.read_text()
    node_lines = [l for l in text.splitlines() if "label=" in l and "->" not in l]
    assert len(node_lines) == 8
    # byte determinism
    out2 = tmp_path / "g2.dot"
    main(["graph", "gk", "E", "6", "6", "--dot", str(out2)])
    assert out.read_bytes() == out2.read_bytes()


def test_graph_crystal_counts(capsys):
    assert main(["graph", "crystal", "A", "5", "2"]) == 0
    out = capsys.readouterr().out
    nodes = [l for l in out.splitlines() if "label=" in l and "->" not in l]
    assert len(nodes) == 15
    assert main(["graph", "crystal", "D", "5", "5"]) == 0
    out = capsys.readouterr().out
    nodes = [l for l in out.splitlines() if "label=" in l and "->" not in l]
    assert len(nodes) == 16


def test_graph_invalid_parameters(capsys):
    assert main(["graph", "gk", "E", "6", "4"]) == 2
    capsys.readouterr()


def test_verify_jobs_agree_with_sequential(tmp_path):
    r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert main(["--json", str(r1), "verify", str(_data("e6.scenario.json"))]) == 0
    assert main(["--json", str(r2), "--jobs", "4", "verify", str(_data("e6.scenario.json"))]) == 0
    def strip(path):
        data = json.loads(path.read_text())
        for c in data["checks"]:
            c.pop("millis")
        return data
    assert strip(r1) == strip(r2)


def test_exact_flag_upgrades_partial(tmp_path):
    doc = {
        "format": 1,
        "ring": {"vars": ["x", "y"]},
        "polys": {},
        "ideals": {"a": ["x*y"], "X": ["x"], "Y": ["y"]},
        "checks": [
            {"kind": "colon_equals", "args": ["a", "X", "Y"], "mode": "containment-only"}
        ],
    }
    path = tmp_path / "s.json"
    path.write_text(json.dumps(doc))
    assert main(["--json", str(tmp_path / "r1.json"), "verify", str(path)]) == 1
    assert main(["--json", str(tmp_path / "r2.json"), "verify", str(path), "--exact"]) == 0
