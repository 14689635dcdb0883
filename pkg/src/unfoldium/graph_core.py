"""Graphs, edge-set masks, spanning trees and the Matrix-Tree count.

Vertices are labelled ``1..n``. An :class:`EdgeSet` is an integer bit mask
over the graph's canonical edge indexing (bit ``i`` set means edge ``i`` is
present).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

MAX_EDGES = 64

# Fixed embedding of the cube: label -> (x, y, z).
CUBE_COORDS: dict[int, tuple[int, int, int]] = {
    1: (0, 0, 0),
    2: (1, 0, 0),
    3: (1, 1, 0),
    4: (0, 1, 0),
    5: (0, 0, 1),
    6: (1, 0, 1),
    7: (1, 1, 1),
    8: (0, 1, 1),
}

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


class CapacityError(GraphError):
    pass


class EdgeParseError(GraphError):
    pass


def make_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...]
    _index: dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index: dict[Edge, int] = {}
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u < v <= self.vertex_count):
                raise GraphError(f"edge {u}-{v} is not normalized or out of range")
            if (u, v) in index:
                raise GraphError(f"duplicate edge {u}-{v}")
            index[(u, v)] = i
        object.__setattr__(self, "_index", index)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.edges)) - 1

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._index[make_edge(u, v)]
        except KeyError:
            raise GraphError(f"{u}-{v} is not an edge of this graph") from None

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def mask_of(self, edges: Iterable[Edge]) -> int:
        mask = 0
        for u, v in edges:
            mask |= 1 << self.edge_index(u, v)
        return mask

    def edges_of(self, mask: int) -> list[Edge]:
        return [e for i, e in enumerate(self.edges) if mask >> i & 1]


def graph_from_edges(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph with edges normalized and sorted lexicographically."""
    return Graph(vertex_count, tuple(sorted(make_edge(u, v) for u, v in edges)))


def cube_graph() -> Graph:
    """The cube graph: two labels are adjacent iff their coordinates differ in one place."""
    edges = []
    for u, v in combinations(sorted(CUBE_COORDS), 2):
        diff = sum(a != b for a, b in zip(CUBE_COORDS[u], CUBE_COORDS[v]))
        if diff == 1:
            edges.append((u, v))
    return graph_from_edges(8, edges)


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(1, n + 1), 2))


def path2() -> Graph:
    return graph_from_edges(2, [(1, 2)])


BUNDLED_GRAPHS = {
    "cube": cube_graph,
    "k4": lambda: complete_graph(4),
    "path2": path2,
}


# --- union-find ---------------------------------------------------------------


class UnionFind:
    """Disjoint sets over ``1..n`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of ``x`` and ``y``; False if they were already joined."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


# --- spanning trees -----------------------------------------------------------


def tree_violation(g: Graph, s: int) -> str | None:
    """Describe why ``s`` is not a spanning tree of ``g``, or None if it is.

    Returned reasons start with ``"expected N edges"``, ``"contains a circuit"``
    or ``"disconnected"``.
    """
    n = g.vertex_count
    k = s.bit_count()
    if k != n - 1:
        return f"expected {n - 1} edges, got {k}"
    uf = UnionFind(n)
    for u, v in g.edges_of(s):
        if not uf.union(u, v):
            return f"contains a circuit (closed by edge {u}-{v})"
    # n-1 successful unions on n vertices always connect; kept for n-1 != k paths
    roots = {uf.find(v) for v in range(1, n + 1)}
    if len(roots) != 1:
        return "disconnected"
    return None


def is_spanning_tree(g: Graph, s: int) -> bool:
    return tree_violation(g, s) is None


def enumerate_spanning_trees(g: Graph) -> list[int]:
    """All spanning trees of ``g`` as masks, ascending.

    Tries every ``(n-1)``-subset of the edges, so this is only meant for
    small graphs like the cube (792 subsets).
    """
    if g.edge_count > MAX_EDGES:
        raise CapacityError(f"{g.edge_count} edges exceeds the {MAX_EDGES}-bit mask width")
    n = g.vertex_count
    if n - 1 > g.edge_count:
        return []
    trees = []
    for combo in combinations(range(g.edge_count), n - 1):
        mask = 0
        for i in combo:
            mask |= 1 << i
        if is_spanning_tree(g, mask):
            trees.append(mask)
    trees.sort()
    return trees


def complement(g: Graph, s: int) -> int:
    return g.full_mask & ~s


# --- Matrix-Tree --------------------------------------------------------------


def laplacian(g: Graph) -> list[list[int]]:
    """``D - A`` as an ``n x n`` integer matrix (row ``i`` is vertex ``i + 1``)."""
    n = g.vertex_count
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u - 1][u - 1] += 1
        lap[v - 1][v - 1] += 1
        lap[u - 1][v - 1] -= 1
        lap[v - 1][u - 1] -= 1
    return lap


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def count_spanning_trees_matrix_tree(g: Graph, deleted_vertex: int | None = None) -> int:
    """Number of spanning trees via the determinant of a reduced Laplacian.

    ``deleted_vertex`` picks which row/column to strike out; by default the
    last one. Every choice gives the same value.
    """
    n = g.vertex_count
    if n <= 1:
        return 1
    k = n - 1 if deleted_vertex is None else deleted_vertex - 1
    if not 0 <= k < n:
        raise GraphError(f"vertex {deleted_vertex} out of range 1..{n}")
    lap = laplacian(g)
    minor = [[x for j, x in enumerate(row) if j != k] for i, row in enumerate(lap) if i != k]
    return bareiss_determinant(minor)


# --- text formats -------------------------------------------------------------


def format_edge(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


def format_edge_set(g: Graph, s: int) -> str:
    return ",".join(format_edge(e) for e in g.edges_of(s))


def parse_edge(text: str) -> Edge:
    parts = text.strip().split("-")
    if len(parts) != 2:
        raise EdgeParseError(f"cannot parse edge {text!r}; expected 'u-v'")
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeParseError(f"cannot parse edge {text!r}; expected integer labels") from None
    if u == v:
        raise EdgeParseError(f"edge {text!r} is a self-loop")
    return make_edge(u, v)


def parse_edge_set(g: Graph, text: str) -> int:
    """Parse ``"1-5,2-6,..."`` into a mask; unknown or repeated edges are parse errors."""
    mask = 0
    for item in text.split(","):
        if not item.strip():
            continue
        u, v = parse_edge(item)
        try:
            bit = 1 << g.edge_index(u, v)
        except GraphError as exc:
            raise EdgeParseError(str(exc)) from None
        if mask & bit:
            raise EdgeParseError(f"edge {u}-{v} listed twice")
        mask |= bit
    return mask
