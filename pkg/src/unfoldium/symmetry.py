"""The 48-element isometry group of the cube acting on its spanning trees.

Permutations act on the right: ``x^(gh) = (x^g)^h``, so the product
``g * h`` means "apply g, then h". An isometry is stored as the tuple of
images of the labels ``1..8``.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd

from .graph_core import CUBE_COORDS, Edge, Graph, cube_graph, is_spanning_tree, make_edge

Perm = tuple[int, ...]

# Generators and named elements, as printed in cycle notation.
RHO_1 = "(1234)(5678)"  # 90 degrees about the vertical face axis
RHO_2 = "(12)(35)(46)(78)"  # 180 degrees about the axis through midpoints of 1-2 and 7-8
RHO_3 = "(136)(475)"  # 120 degrees about the diagonal 2-8
ALPHA = "(17)(28)(35)(46)"  # antipodal map
RHO_0 = RHO_2
PHI_0 = "(15)(26)(37)(48)"  # reflection in the plane z = 1/2
GENERATORS = (RHO_1, RHO_3, ALPHA)
ROTATION_GENERATORS = (RHO_1, RHO_3)

GROUP_ORDER = 48


class IsometryClass(str, Enum):
    Identity = "Identity"
    Rot1_90 = "Rot1_90"
    Rot1_180 = "Rot1_180"
    Rot2_180 = "Rot2_180"
    Rot3_120 = "Rot3_120"
    Antipodal = "Antipodal"
    Ref1 = "Ref1"
    Ref2 = "Ref2"
    RotoRef90 = "RotoRef90"
    RotoRef60 = "RotoRef60"

    def __str__(self) -> str:
        return self.value


CLASS_SIZES = {
    IsometryClass.Identity: 1,
    IsometryClass.Rot1_90: 6,
    IsometryClass.Rot1_180: 3,
    IsometryClass.Rot2_180: 6,
    IsometryClass.Rot3_120: 8,
    IsometryClass.Antipodal: 1,
    IsometryClass.Ref1: 6,
    IsometryClass.Ref2: 3,
    IsometryClass.RotoRef90: 6,
    IsometryClass.RotoRef60: 8,
}


class SymmetryError(ValueError):
    pass


class GroupOrderError(SymmetryError):
    """Closure of the generators did not have the expected order."""


class ClassificationError(SymmetryError):
    pass


# --- permutations -------------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([0-9]*)\)")


def parse_cycles(text: str, n: int = 8) -> Perm:
    """Parse disjoint-cycle notation such as ``"(12)(35)(46)(78)"``.

    Labels are single digits, so this handles ``n <= 9``.
    """
    compact = text.replace(" ", "")
    if _CYCLE_RE.sub("", compact):
        raise SymmetryError(f"cannot parse cycle notation {text!r}")
    images = list(range(1, n + 1))
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(compact):
        labels = [int(c) for c in body]
        for x in labels:
            if not 1 <= x <= n or x in seen:
                raise SymmetryError(f"bad or repeated label {x} in {text!r}")
            seen.add(x)
        for a, b in zip(labels, labels[1:] + labels[:1]):
            images[a - 1] = b
    return tuple(images)


def format_cycles(perm: Perm) -> str:
    out = []
    seen: set[int] = set()
    for start in range(1, len(perm) + 1):
        if start in seen or perm[start - 1] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = perm[start - 1]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = perm[x - 1]
        out.append("(" + "".join(map(str, cycle)) + ")")
    return "".join(out) or "()"


def compose(g: Perm, h: Perm) -> Perm:
    """``g`` then ``h``."""
    return tuple(h[x - 1] for x in g)


def inverse(g: Perm) -> Perm:
    inv = [0] * len(g)
    for i, x in enumerate(g, start=1):
        inv[x - 1] = i
    return tuple(inv)


def perm_order(g: Perm) -> int:
    order = 1
    seen: set[int] = set()
    for start in range(1, len(g) + 1):
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = g[x - 1]
            length += 1
        order = order * length // gcd(order, length)
    return order


def closure(generators: list[Perm]) -> list[Perm]:
    """Breadth-first closure; identity first, products formed as ``elem * gen``."""
    n = len(generators[0])
    identity = tuple(range(1, n + 1))
    found = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        elem = queue.popleft()
        for gen in generators:
            prod = compose(elem, gen)
            if prod not in found:
                found.add(prod)
                order.append(prod)
                queue.append(prod)
    return order


# --- isometries ---------------------------------------------------------------


def _centered(v: int) -> tuple[int, int, int]:
    x, y, z = CUBE_COORDS[v]
    return (2 * x - 1, 2 * y - 1, 2 * z - 1)


def orthogonal_matrix(perm: Perm) -> tuple[tuple[int, ...], ...]:
    """The linear map on centered coordinates that moves each vertex like ``perm``."""
    origin = _centered(perm[0])
    # 2, 4, 5 are the neighbours of 1 along x, y, z.
    cols = []
    for nb in (2, 4, 5):
        img = _centered(perm[nb - 1])
        cols.append(tuple((a - b) // 2 for a, b in zip(img, origin)))
    matrix = tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))
    for v in CUBE_COORDS:
        p = _centered(v)
        image = tuple(sum(matrix[i][j] * p[j] for j in range(3)) for i in range(3))
        if image != _centered(perm[v - 1]):
            raise ClassificationError(f"{format_cycles(perm)} is not induced by a linear isometry")
    return matrix


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


@dataclass(frozen=True)
class Isometry:
    vertex_perm: Perm
    edge_perm: tuple[int, ...] = field(compare=False)
    klass: IsometryClass = field(compare=False)

    @classmethod
    def from_perm(cls, perm: Perm, graph: Graph | None = None) -> Isometry:
        g = graph or cube_graph()
        if sorted(perm) != list(range(1, g.vertex_count + 1)):
            raise SymmetryError(f"{perm} is not a permutation of 1..{g.vertex_count}")
        edge_perm = []
        for u, v in g.edges:
            image = make_edge(perm[u - 1], perm[v - 1])
            try:
                edge_perm.append(g.edge_index(*image))
            except ValueError:
                raise SymmetryError(
                    f"{format_cycles(perm)} maps edge {u}-{v} to a non-edge"
                ) from None
        edge_perm_t = tuple(edge_perm)
        return cls(perm, edge_perm_t, classify_perm(perm, edge_perm_t))

    @classmethod
    def parse(cls, text: str) -> Isometry:
        return cls.from_perm(parse_cycles(text))

    def __mul__(self, other: Isometry) -> Isometry:
        return Isometry.from_perm(compose(self.vertex_perm, other.vertex_perm))

    def __str__(self) -> str:
        return format_cycles(self.vertex_perm)

    @property
    def order(self) -> int:
        return perm_order(self.vertex_perm)

    @property
    def is_rotation(self) -> bool:
        return _det3(orthogonal_matrix(self.vertex_perm)) == 1

    @property
    def fixed_vertices(self) -> list[int]:
        return [v for v, img in enumerate(self.vertex_perm, start=1) if v == img]


def classify_perm(perm: Perm, edge_perm: tuple[int, ...]) -> IsometryClass:
    m = orthogonal_matrix(perm)
    det = _det3(m)
    trace = m[0][0] + m[1][1] + m[2][2]
    n_fixed = sum(1 for v, img in enumerate(perm, start=1) if v == img)
    n_invariant = sum(1 for i, j in enumerate(edge_perm) if i == j)
    C = IsometryClass
    if det == 1:
        if trace == 3:
            return C.Identity
        if trace == 1:
            return C.Rot1_90
        if trace == 0:
            return C.Rot3_120
        if trace == -1 and n_invariant == 2:
            return C.Rot2_180
        if trace == -1 and n_invariant == 0:
            return C.Rot1_180
    elif det == -1:
        if trace == -3:
            return C.Antipodal
        if trace == -1:
            return C.RotoRef90
        if trace == 0:
            return C.RotoRef60
        if trace == 1 and n_fixed == 4:
            return C.Ref1
        if trace == 1 and n_fixed == 0:
            return C.Ref2
    raise ClassificationError(
        f"no class for {format_cycles(perm)} (det={det}, trace={trace}, "
        f"fixed={n_fixed}, invariant edges={n_invariant})"
    )


def classify(iso: Isometry) -> IsometryClass:
    return classify_perm(iso.vertex_perm, iso.edge_perm)


# --- the group ----------------------------------------------------------------


@dataclass(frozen=True)
class SymmetryGroup:
    elements: tuple[Isometry, ...]
    index: dict[Perm, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, iso: Isometry) -> bool:
        return iso.vertex_perm in self.index

    @property
    def identity(self) -> Isometry:
        return self.elements[0]

    def get(self, perm: Perm | str) -> Isometry:
        if isinstance(perm, str):
            perm = parse_cycles(perm)
        return self.elements[self.index[perm]]

    def of_class(self, klass: IsometryClass) -> list[Isometry]:
        return [g for g in self.elements if g.klass is klass]

    def census(self) -> dict[IsometryClass, int]:
        counts = Counter(g.klass for g in self.elements)
        return {k: counts.get(k, 0) for k in IsometryClass}

    def rotations(self) -> list[Isometry]:
        return [g for g in self.elements if g.is_rotation]

    def center(self) -> list[Isometry]:
        return [
            g
            for g in self.elements
            if all(compose(g.vertex_perm, h.vertex_perm) == compose(h.vertex_perm, g.vertex_perm)
                   for h in self.elements)
        ]

    def is_closed(self) -> bool:
        for g in self.elements:
            if inverse(g.vertex_perm) not in self.index:
                return False
            for h in self.elements:
                if compose(g.vertex_perm, h.vertex_perm) not in self.index:
                    return False
        return True


def generate_group(generators: list[str] | tuple[str, ...]) -> SymmetryGroup:
    perms = closure([parse_cycles(text) for text in generators])
    graph = cube_graph()
    elements = tuple(Isometry.from_perm(p, graph) for p in perms)
    return SymmetryGroup(elements, {g.vertex_perm: i for i, g in enumerate(elements)})


def generate_full_group(generators: list[str] | tuple[str, ...] = GENERATORS) -> SymmetryGroup:
    """Closure of the generators, checked to have order 48."""
    group = generate_group(generators)
    if len(group) != GROUP_ORDER:
        raise GroupOrderError(
            f"generators {', '.join(generators)} close to a group of order {len(group)}, "
            f"expected {GROUP_ORDER}"
        )
    return group


@lru_cache(maxsize=1)
def full_group() -> SymmetryGroup:
    """Cached group built from the standard generators."""
    return generate_full_group()


# --- actions on edges and trees ------------------------------------------------


def act_on_tree(iso: Isometry, s: int) -> int:
    image = 0
    for i, j in enumerate(iso.edge_perm):
        if s >> i & 1:
            image |= 1 << j
    return image


def invariant_edges(iso: Isometry) -> int:
    """Mask of edges carried to themselves, fixed or reversed."""
    mask = 0
    for i, j in enumerate(iso.edge_perm):
        if i == j:
            mask |= 1 << i
    return mask


def fixed_trees(iso: Isometry, trees: list[int]) -> list[int]:
    return [t for t in trees if act_on_tree(iso, t) == t]


def burnside_sum(group: SymmetryGroup, trees: list[int]) -> int:
    return sum(len(fixed_trees(g, trees)) for g in group)


def burnside_orbit_count(group: SymmetryGroup, trees: list[int]) -> int:
    total = burnside_sum(group, trees)
    count, rem = divmod(total, len(group))
    if rem:
        raise SymmetryError(f"Burnside sum {total} is not divisible by |G| = {len(group)}")
    return count


@dataclass(frozen=True)
class ClassRow:
    klass: IsometryClass
    elements: int
    fixed_per_element: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.fixed_per_element)

    @property
    def constant(self) -> bool:
        return len(set(self.fixed_per_element)) <= 1


def fixed_table(group: SymmetryGroup, trees: list[int]) -> list[ClassRow]:
    rows = []
    for klass in IsometryClass:
        members = group.of_class(klass)
        rows.append(ClassRow(klass, len(members), tuple(len(fixed_trees(g, trees)) for g in members)))
    return rows


@dataclass(frozen=True)
class OrbitReport:
    orbits: tuple[tuple[int, ...], ...]
    fixed_table: tuple[ClassRow, ...]
    burnside_sum: int
    burnside_value: int

    @property
    def sizes(self) -> list[int]:
        return sorted((len(o) for o in self.orbits), reverse=True)

    @property
    def representatives(self) -> list[int]:
        return [o[0] for o in self.orbits]

    def orbit_of(self, tree: int) -> tuple[int, ...]:
        for orbit in self.orbits:
            if tree in orbit:
                return orbit
        raise KeyError(tree)


def orbit(group: SymmetryGroup, s: int) -> list[int]:
    return sorted({act_on_tree(g, s) for g in group})


def compute_orbits(group: SymmetryGroup, trees: list[int]) -> OrbitReport:
    """Partition ``trees`` into orbits, each sorted so its smallest mask comes first."""
    remaining = set(trees)
    orbits = []
    for t in sorted(trees):
        if t not in remaining:
            continue
        members = orbit(group, t)
        remaining.difference_update(members)
        orbits.append(tuple(members))
    total = burnside_sum(group, trees)
    if total % len(group):
        raise SymmetryError(f"Burnside sum {total} is not divisible by |G| = {len(group)}")
    return OrbitReport(
        orbits=tuple(orbits),
        fixed_table=tuple(fixed_table(group, trees)),
        burnside_sum=total,
        burnside_value=total // len(group),
    )


def edge_stabilizer(group: SymmetryGroup, e: Edge, graph: Graph | None = None) -> list[Isometry]:
    g = graph or cube_graph()
    i = g.edge_index(*e)
    return [iso for iso in group if iso.edge_perm[i] == i]


def edge_orbit(group: SymmetryGroup, e: Edge, graph: Graph | None = None) -> set[int]:
    g = graph or cube_graph()
    i = g.edge_index(*e)
    return {iso.edge_perm[i] for iso in group}


# --- symmetric growth of invariant trees ---------------------------------------


def grow_invariant_trees(iso: Isometry, seed: Edge, graph: Graph | None = None) -> list[int]:
    """Spanning trees invariant under ``iso`` whose only invariant edge is ``seed``.

    Starting from the seed, each step sprouts an unused edge from a vertex of
    the growing tree and adds its image under ``iso`` with it, so the partial
    tree stays invariant. Additions that close a circuit or bring in a second
    invariant edge are rejected. Every order of sprouting is explored.
    """
    if iso.klass not in (IsometryClass.Rot2_180, IsometryClass.Ref2):
        raise SymmetryError(f"grow needs a Rot2_180 or Ref2 isometry, got {iso.klass}")
    g = graph or cube_graph()
    seed = make_edge(*seed)
    seed_idx = g.edge_index(*seed)
    if iso.edge_perm[seed_idx] != seed_idx:
        raise SymmetryError(f"seed {seed[0]}-{seed[1]} is not invariant under {iso}")

    target = g.vertex_count - 1
    inv = invariant_edges(iso)
    results: set[int] = set()
    seen: set[int] = set()

    def vertices(mask: int) -> set[int]:
        return {v for e in g.edges_of(mask) for v in e}

    def grow(mask: int) -> None:
        if mask in seen:
            return
        seen.add(mask)
        if mask.bit_count() == target:
            if is_spanning_tree(g, mask):
                results.add(mask)
            return
        inside = vertices(mask)
        for i, (u, v) in enumerate(g.edges):
            bit = 1 << i
            if mask & bit or inv & bit:
                continue
            if (u in inside) == (v in inside):
                # not a sprout: both ends inside would close a circuit
                continue
            j = iso.edge_perm[i]
            pair = bit | 1 << j
            new_vertices = vertices(pair) - inside
            # two new edges must bring two new vertices, else a circuit forms
            if len(new_vertices) != pair.bit_count():
                continue
            grow(mask | pair)

    grow(1 << seed_idx)
    return sorted(results)
