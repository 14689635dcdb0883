from __future__ import annotations

import json

import pytest

from unfoldium.cli import main
from unfoldium.graph_core import cube_graph, parse_edge_set
from unfoldium.render import ascii_art
from unfoldium.unfold import canonical_form, layout

CROSS = "1-5,2-6,3-7,4-8,5-6,6-7,7-8"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "graph, expected",
    [("cube", "matrix_tree=384 enumerated=384"), ("k4", "matrix_tree=16 enumerated=16"),
     ("path2", "matrix_tree=1 enumerated=1")],
)
def test_count_trees(capsys, graph, expected):
    code, out, _ = run(capsys, "count-trees", "--graph", graph)
    assert code == 0
    assert out.strip() == expected


def test_count_trees_json(capsys):
    code, out, _ = run(capsys, "count-trees", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc == {"schema": 1, "command": "count-trees", "graph": "cube", "matrix_tree": 384,
                   "enumerated": 384, "agree": True}


def test_count_trees_mismatch_exits_2(capsys, monkeypatch):
    import unfoldium.cli as cli

    monkeypatch.setattr(cli, "count_spanning_trees_matrix_tree", lambda g: 383)
    code, _, err = run(capsys, "count-trees")
    assert code == 2
    assert "mismatch" in err


def test_burnside_text(capsys):
    code, out, _ = run(capsys, "burnside")
    assert code == 0
    lines = {line.split()[0]: line.split()[1:] for line in out.splitlines()}
    assert lines["Rot2_180"] == ["6", "16", "96"]
    assert lines["Ref1"] == ["6", "0", "0"]
    assert "burnside_sum=528 group_order=48" in out
    assert "orbits=11" in out


def test_burnside_json(capsys):
    code, out, _ = run(capsys, "burnside", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["burnside_sum"] == 528 and doc["orbit_count"] == 11
    rows = {r["class"]: r for r in doc["classes"]}
    assert rows["Ref2"]["fixed_per_element"] == [16, 16, 16]
    assert "." not in json.dumps(doc["classes"])  # integers only


def test_orbits(capsys):
    code, out, _ = run(capsys, "orbits", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["orbit_count"] == 11
    assert sorted(o["size"] for o in doc["orbits"]) == [24] * 6 + [48] * 5
    assert all(o["size"] * o["stabilizer_order"] == 48 for o in doc["orbits"])


def test_unfold_cross(capsys):
    code, out, _ = run(capsys, "unfold", "1-5,2-6,3-7,4-8,5-6,6-7,7-8")
    assert code == 0
    assert "Top-Left via 5-8" in out
    assert out.rstrip().endswith("..#.\n####\n..#.")


def test_unfold_json(capsys):
    code, out, _ = run(capsys, "unfold", "1-5,2-6,3-7,4-8,5-6,6-7,7-8", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["placements"]["Top"] == [-2, 0]
    assert len(doc["hinges"]) == 5
    assert doc["orbit_size"] == 24
    assert len(doc["shape"]) == 6


@pytest.mark.parametrize(
    "tree, code, message",
    [
        ("1-2,2-3,3-4,1-4,5-6,6-7,7-8", 2, "contains a circuit"),
        ("1-2", 2, "expected 7 edges"),
        ("1-9", 1, "parse error"),
        ("hello", 1, "parse error"),
    ],
)
def test_unfold_errors(capsys, tree, code, message):
    got, _, err = run(capsys, "unfold", tree)
    assert got == code
    assert message in err


def test_shapes_ascii(capsys):
    code, out, _ = run(capsys, "shapes", "--render", "ascii")
    assert code == 0
    blocks = [b for b in out.strip().split("\n\n") if b]
    assert len(blocks) == 11
    cross = ascii_art(canonical_form(layout(parse_edge_set(cube_graph(), CROSS))))
    assert sum(b.endswith("\n" + cross) for b in blocks) == 1


def test_shapes_json(capsys):
    code, out, _ = run(capsys, "shapes", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["shape_count"] == 11
    assert sum(s["tree_count"] for s in doc["shapes"]) == 384


def test_shapes_one_sided(capsys):
    code, out, _ = run(capsys, "shapes", "--one-sided", "--json")
    assert code == 0
    assert json.loads(out)["shape_count"] == 20


def test_shapes_svg(capsys, tmp_path):
    code, _, _ = run(capsys, "shapes", "--render", "svg", "--out-dir", str(tmp_path))
    assert code == 0
    files = sorted(p.name for p in tmp_path.glob("shape_*.svg"))
    assert files == [f"shape_{i:02d}.svg" for i in range(1, 12)]
    index = json.loads((tmp_path / "index.json").read_text())
    assert index["schema"] == 1
    assert sum(s["tree_count"] for s in index["shapes"]) == 384
    assert all(s["representative"].count("-") == 7 for s in index["shapes"])


def test_shapes_io_error(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _, err = run(capsys, "shapes", "--render", "svg", "--out-dir", str(blocker))
    assert code == 3
    assert "cannot write" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "summary: 12/12" in out


def test_verify_json_is_stable(capsys):
    _, first, _ = run(capsys, "verify", "--json")
    _, second, _ = run(capsys, "verify", "--json")
    assert first == second
    doc = json.loads(first)
    assert doc["schema"] == 1
    assert doc["summary"] == {"passed": 12, "total": 12, "ok": True}
    assert [c["id"] for c in doc["checks"]] == list(range(1, 13))


def test_verify_bad_generator(capsys):
    code, out, _ = run(capsys, "verify", "--json", "--inject-bad-generator")
    doc = json.loads(out)
    assert code == 2
    checks = {c["name"]: c for c in doc["checks"]}
    assert not checks["group_generation"]["pass"]
    assert checks["group_generation"]["actual"]["order"] == 24


def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_no_color(capsys, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    _, out, _ = run(capsys, "verify")
    assert "\033[" not in out
