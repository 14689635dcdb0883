"""Unfolding a cut cube into a planar net and comparing nets up to congruence.

Cells are unit squares named by their lower-left corner. A face's corner map
sends each of its four cube vertices to a lattice point of its cell.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .graph_core import Edge, complement, cube_graph, format_edge, make_edge, tree_violation

Point = tuple[int, int]


class FaceId(Enum):
    Bottom = (1, 2, 3, 4)
    Top = (5, 6, 7, 8)
    Front = (1, 2, 6, 5)
    Right = (2, 3, 7, 6)
    Back = (3, 4, 8, 7)
    Left = (4, 1, 5, 8)

    @property
    def cycle(self) -> tuple[int, int, int, int]:
        return self.value

    def edges(self) -> list[Edge]:
        c = self.cycle
        return [make_edge(c[i], c[(i + 1) % 4]) for i in range(4)]

    def neighbours_in_face(self, v: int) -> tuple[int, int]:
        c = self.cycle
        i = c.index(v)
        return c[i - 1], c[(i + 1) % 4]


ROOT_FACE = FaceId.Bottom
ROOT_CORNERS = {1: (0, 0), 2: (1, 0), 3: (1, 1), 4: (0, 1)}


def faces_of_edge(e: Edge) -> tuple[FaceId, FaceId]:
    found = tuple(f for f in FaceId if e in f.edges())
    if len(found) != 2:
        raise ValueError(f"{format_edge(e)} is not a cube edge")
    return found  # type: ignore[return-value]


class UnfoldError(ValueError):
    pass


class NotATreeError(UnfoldError):
    pass


class OverlapError(UnfoldError):
    pass


@dataclass(frozen=True)
class HingeTree:
    nodes: tuple[FaceId, ...]
    links: tuple[tuple[FaceId, FaceId, Edge], ...]

    def adjacency(self) -> dict[FaceId, list[tuple[FaceId, Edge]]]:
        adj: dict[FaceId, list[tuple[FaceId, Edge]]] = {f: [] for f in self.nodes}
        for a, b, e in self.links:
            adj[a].append((b, e))
            adj[b].append((a, e))
        return adj

    def is_tree(self) -> bool:
        if len(self.links) != len(self.nodes) - 1:
            return False
        adj = self.adjacency()
        seen = {self.nodes[0]}
        stack = [self.nodes[0]]
        while stack:
            for nb, _ in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(self.nodes)


def hinge_tree(cut: int) -> HingeTree:
    """Faces joined along the edges left uncut by ``cut``."""
    g = cube_graph()
    problem = tree_violation(g, cut)
    if problem:
        raise NotATreeError(f"cut is not a spanning tree: {problem}")
    links = []
    for e in g.edges_of(complement(g, cut)):
        a, b = faces_of_edge(e)
        links.append((a, b, e))
    tree = HingeTree(tuple(FaceId), tuple(links))
    if not tree.is_tree():
        raise UnfoldError("uncut edges do not form a tree on the faces")
    return tree


@dataclass(frozen=True)
class Net:
    placements: dict[FaceId, Point]
    corner_map: dict[FaceId, dict[int, Point]]
    hinges: tuple[tuple[FaceId, FaceId, Edge], ...]

    @property
    def cells(self) -> list[Point]:
        return [self.placements[f] for f in FaceId]


def _cell_of(corners: dict[int, Point]) -> Point:
    return min(corners.values())


def _unfold_across(
    parent_corners: dict[int, Point], parent: FaceId, child: FaceId, e: Edge
) -> dict[int, Point]:
    """Corner map for ``child``, flipped out of ``parent`` across shared edge ``e``."""
    u, v = e
    pu, pv = parent_corners[u], parent_corners[v]
    # inward step from the shared side, taken from the parent's vertex next to u
    (q,) = [w for w in parent.neighbours_in_face(u) if w != v]
    pq = parent_corners[q]
    out = (pu[0] - pq[0], pu[1] - pq[1])
    corners = {u: pu, v: pv}
    for w in child.cycle:
        if w in corners:
            continue
        anchor = u if u in child.neighbours_in_face(w) else v
        pa = corners[anchor]
        corners[w] = (pa[0] + out[0], pa[1] + out[1])
    return corners


def layout(cut: int) -> Net:
    """Lay the six faces out in the plane, Bottom first, breadth-first over the hinges."""
    tree = hinge_tree(cut)
    adj = tree.adjacency()
    corner_map = {ROOT_FACE: dict(ROOT_CORNERS)}
    placements = {ROOT_FACE: (0, 0)}
    occupied = {(0, 0): ROOT_FACE}
    queue = deque([ROOT_FACE])
    while queue:
        face = queue.popleft()
        for child, e in sorted(adj[face], key=lambda item: item[1]):
            if child in placements:
                continue
            corners = _unfold_across(corner_map[face], face, child, e)
            cell = _cell_of(corners)
            if cell in occupied:
                raise OverlapError(f"{child.name} and {occupied[cell].name} both land on {cell}")
            corner_map[child] = corners
            placements[child] = cell
            occupied[cell] = child
            queue.append(child)
    return Net(placements, corner_map, tree.links)


def edge_connected(cells: list[Point]) -> bool:
    cell_set = set(cells)
    if not cell_set:
        return False
    start = next(iter(cell_set))
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in cell_set and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cell_set)


def net_problems(net: Net) -> list[str]:
    """Violated net invariants; empty when the net is a valid hexomino unfolding."""
    problems = []
    cells = net.cells
    if len(net.placements) != 6:
        problems.append(f"{len(net.placements)} faces placed")
    if len(set(cells)) != len(cells):
        problems.append("overlapping cells")
    if not edge_connected(cells):
        problems.append("cells not edge-connected")
    for a, b, (u, v) in net.hinges:
        (ax, ay), (bx, by) = net.placements[a], net.placements[b]
        if abs(ax - bx) + abs(ay - by) != 1:
            problems.append(f"{a.name}/{b.name} not in adjacent cells")
        for w in (u, v):
            if net.corner_map[a][w] != net.corner_map[b][w]:
                problems.append(f"{a.name}/{b.name} disagree on vertex {w}")
    return problems


def fold_back(net: Net) -> int:
    """Recover the cut tree from the geometry of a net alone.

    Two faces are hinged when their cells share a side and both corner maps
    put the same pair of cube vertices on that side's endpoints.
    """
    g = cube_graph()
    faces = list(FaceId)
    hinge_mask = 0
    for i, a in enumerate(faces):
        at_a = {p: w for w, p in net.corner_map[a].items()}
        for b in faces[i + 1:]:
            at_b = {p: w for w, p in net.corner_map[b].items()}
            shared = set(at_a) & set(at_b)
            if len(shared) != 2:
                continue
            labels_a = {at_a[p] for p in shared}
            labels_b = {at_b[p] for p in shared}
            if labels_a == labels_b:
                hinge_mask |= 1 << g.edge_index(*labels_a)
    return complement(g, hinge_mask)


# --- congruence -----------------------------------------------------------------


def transform_point(p: Point, k: int) -> Point:
    """Congruence ``k`` of the square lattice: ``k % 4`` quarter turns, mirrored if ``k >= 4``."""
    x, y = p
    if k >= 4:
        x = -x
    for _ in range(k % 4):
        x, y = -y, x
    return (x, y)


def transform_cell(cell: Point, k: int) -> Point:
    x, y = cell
    corners = [transform_point(c, k) for c in ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))]
    return min(corners)


def transform_net(net: Net, k: int) -> Net:
    corner_map = {f: {w: transform_point(p, k) for w, p in cm.items()} for f, cm in net.corner_map.items()}
    placements = {f: _cell_of(cm) for f, cm in corner_map.items()}
    return Net(placements, corner_map, net.hinges)


@dataclass(frozen=True, order=True)
class CanonicalShape:
    cells: tuple[Point, ...]

    def to_text(self) -> str:
        return "\n".join(f"{x} {y}" for x, y in self.cells)

    @classmethod
    def from_text(cls, text: str) -> CanonicalShape:
        cells = tuple(tuple(int(t) for t in line.split()) for line in text.strip().splitlines())
        return cls(cells)  # type: ignore[arg-type]


def _normalize(cells: list[Point]) -> tuple[Point, ...]:
    ordered = sorted(cells)
    ox, oy = ordered[0]
    return tuple((x - ox, y - oy) for x, y in ordered)


def canonical_cells(cells: list[Point], mirror: bool = True) -> CanonicalShape:
    ks = range(8) if mirror else range(4)
    return CanonicalShape(min(_normalize([transform_cell(c, k) for c in cells]) for k in ks))


def canonical_form(net: Net | CanonicalShape, mirror: bool = True) -> CanonicalShape:
    """Lexicographically least translated cell list over the lattice congruences.

    With ``mirror=False`` only rotations are used (one-sided shapes).
    """
    cells = list(net.cells)
    return canonical_cells(cells, mirror=mirror)


def classify_shapes(trees: list[int], mirror: bool = True) -> dict[CanonicalShape, list[int]]:
    """Group cut trees by the shape of their nets, keys in canonical order."""
    groups: dict[CanonicalShape, list[int]] = {}
    for t in trees:
        groups.setdefault(canonical_form(layout(t), mirror=mirror), []).append(t)
    return {shape: sorted(groups[shape]) for shape in sorted(groups)}
