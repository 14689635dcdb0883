from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest
from hypothesis import given
from hypothesis import strategies as st

from unfoldium import render
from unfoldium import symmetry as sym
from unfoldium.graph_core import complement, cube_graph, enumerate_spanning_trees, parse_edge_set
from unfoldium.unfold import (
    CanonicalShape,
    FaceId,
    NotATreeError,
    canonical_cells,
    canonical_form,
    classify_shapes,
    edge_connected,
    faces_of_edge,
    fold_back,
    hinge_tree,
    layout,
    net_problems,
    transform_net,
)

CROSS_CUT = "1-5,2-6,3-7,4-8,5-6,6-7,7-8"


@pytest.fixture(scope="module")
def cube():
    return cube_graph()


@pytest.fixture(scope="module")
def trees(cube):
    return enumerate_spanning_trees(cube)


@pytest.fixture(scope="module")
def shapes(trees):
    return classify_shapes(trees)


def test_faces_and_edges(cube):
    for f in FaceId:
        assert len(f.edges()) == 4
        assert all(e in cube.edges for e in f.edges())
    for e in cube.edges:
        assert len(faces_of_edge(e)) == 2


def test_hinge_tree_of_cross_cut(cube):
    # uncut edges are 1-2, 1-4, 2-3, 3-4 and 5-8 (5-6 is cut)
    tree = hinge_tree(parse_edge_set(cube, CROSS_CUT))
    links = {frozenset((a, b)): e for a, b, e in tree.links}
    assert links == {
        frozenset((FaceId.Bottom, FaceId.Front)): (1, 2),
        frozenset((FaceId.Bottom, FaceId.Left)): (1, 4),
        frozenset((FaceId.Bottom, FaceId.Right)): (2, 3),
        frozenset((FaceId.Bottom, FaceId.Back)): (3, 4),
        frozenset((FaceId.Top, FaceId.Left)): (5, 8),
    }
    assert tree.is_tree()


def test_hinge_tree_for_all_cuts(cube, trees):
    for t in trees:
        tree = hinge_tree(t)
        assert len(tree.links) == 5 and tree.is_tree()
        assert cube.mask_of(e for _, _, e in tree.links) == complement(cube, t)


def test_hinge_tree_rejects_non_trees(cube):
    with pytest.raises(NotATreeError, match="circuit"):
        hinge_tree(parse_edge_set(cube, "1-2,2-3,3-4,1-4,5-6,6-7,7-8"))
    with pytest.raises(NotATreeError, match="expected 7 edges"):
        hinge_tree(parse_edge_set(cube, "1-2"))


def test_layout_of_cross_cut(cube):
    net = layout(parse_edge_set(cube, CROSS_CUT))
    # hand unfolding: Left flips out across 1-4, Top follows it across 5-8
    assert net.placements == {
        FaceId.Bottom: (0, 0),
        FaceId.Front: (0, -1),
        FaceId.Right: (1, 0),
        FaceId.Back: (0, 1),
        FaceId.Left: (-1, 0),
        FaceId.Top: (-2, 0),
    }
    assert net.corner_map[FaceId.Bottom] == {1: (0, 0), 2: (1, 0), 3: (1, 1), 4: (0, 1)}
    assert net.corner_map[FaceId.Left] == {1: (0, 0), 4: (0, 1), 5: (-1, 0), 8: (-1, 1)}
    assert net.corner_map[FaceId.Top] == {5: (-1, 0), 8: (-1, 1), 6: (-2, 0), 7: (-2, 1)}
    assert render.ascii_art(net) == "..#.\n####\n..#."


def test_all_layouts_valid(trees):
    for t in trees:
        net = layout(t)
        assert net_problems(net) == []
        assert len(set(net.cells)) == 6
        assert edge_connected(net.cells)


def test_fold_back_recovers_cut(trees):
    assert all(fold_back(layout(t)) == t for t in trees)


def test_layout_injective(trees):
    keys = {tuple(sorted((f.name, c) for f, c in layout(t).placements.items())) for t in trees}
    assert len(keys) == 384


def test_corner_maps_are_unit_squares(trees):
    for t in trees[::17]:
        net = layout(t)
        for face, corners in net.corner_map.items():
            x, y = net.placements[face]
            assert set(corners.values()) == {(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)}
            # adjacent vertices of the face are adjacent corners
            c = face.cycle
            for i in range(4):
                (ax, ay), (bx, by) = corners[c[i]], corners[c[(i + 1) % 4]]
                assert abs(ax - bx) + abs(ay - by) == 1


# --- canonical forms ---------------------------------------------------------------


def test_strip_canonical():
    row = [(x, 3) for x in range(6)]
    assert canonical_cells(row).cells == tuple((0, y) for y in range(6))


def test_cross_congruence_invariance(cube):
    net = layout(parse_edge_set(cube, CROSS_CUT))
    base = canonical_form(net)
    for k in range(8):
        assert canonical_form(transform_net(net, k)) == base


def test_canonical_idempotent(shapes):
    for shape in shapes:
        assert canonical_form(shape) == shape


@given(st.integers(0, 383), st.integers(0, 7), st.integers(-20, 20), st.integers(-20, 20))
def test_congruence_soundness(i, k, dx, dy):
    trees = enumerate_spanning_trees(cube_graph())
    net = transform_net(layout(trees[i]), k)
    moved = [(x + dx, y + dy) for x, y in net.cells]
    assert canonical_cells(moved) == canonical_form(layout(trees[i]))


def test_one_sided_differs_only_by_mirror():
    assert canonical_cells([(0, 0), (1, 0), (1, 1)], mirror=False) == canonical_cells(
        [(0, 0), (1, 0), (1, 1)]
    )


def test_shape_text_round_trip(shapes):
    for shape in shapes:
        text = shape.to_text()
        assert len(text.splitlines()) == 6
        assert CanonicalShape.from_text(text) == shape


# --- classification -----------------------------------------------------------------


def test_eleven_shapes(shapes):
    assert len(shapes) == 11
    assert sum(len(v) for v in shapes.values()) == 384
    assert list(shapes) == sorted(shapes)
    for shape in shapes:
        assert len(shape.cells) == 6
        assert edge_connected(list(shape.cells))


def test_cross_is_among_shapes(cube, shapes):
    assert canonical_form(layout(parse_edge_set(cube, CROSS_CUT))) in shapes


def test_shapes_match_orbits(trees, shapes):
    report = sym.compute_orbits(sym.full_group(), trees)
    shape_of = {t: s for s, ts in shapes.items() for t in ts}
    for orbit in report.orbits:
        assert len({shape_of[t] for t in orbit}) == 1
    assert len({shape_of[o[0]] for o in report.orbits}) == len(report.orbits) == 11
    assert sorted(len(v) for v in shapes.values()) == sorted(report.sizes)


def test_one_sided_count(trees):
    # informational: chiral nets split in two, symmetric ones do not
    one_sided = classify_shapes(trees, mirror=False)
    chiral = sum(1 for s in classify_shapes(trees) if canonical_form(s, mirror=False) != canonical_form(
        CanonicalShape(tuple((-x, y) for x, y in s.cells)), mirror=False))
    assert len(one_sided) == 11 + chiral


# --- rendering ------------------------------------------------------------------------


def test_ascii_strip():
    assert render.ascii_art(canonical_cells([(x, 0) for x in range(6)])) == "#\n#\n#\n#\n#\n#"


def test_svg_shape(shapes):
    shape = next(iter(shapes))
    root = ET.fromstring(render.svg(shape).split("\n", 1)[1])
    rects = root.findall("{http://www.w3.org/2000/svg}rect")
    assert len(rects) == 6
    assert {r.get("width") for r in rects} == {"32"}


def test_svg_net_has_hinges(cube):
    net = layout(parse_edge_set(cube, CROSS_CUT))
    root = ET.fromstring(render.svg(net).split("\n", 1)[1])
    assert len(root.findall("{http://www.w3.org/2000/svg}line")) == 5
    assert len(root.findall("{http://www.w3.org/2000/svg}rect")) == 6
