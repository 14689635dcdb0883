"""Exhaustive recomputation of the edge unfoldings of the cube."""

from .graph_core import (
    Graph,
    complement,
    count_spanning_trees_matrix_tree,
    cube_graph,
    enumerate_spanning_trees,
    is_spanning_tree,
)
from .symmetry import (
    Isometry,
    IsometryClass,
    SymmetryGroup,
    act_on_tree,
    burnside_orbit_count,
    classify,
    compute_orbits,
    edge_stabilizer,
    fixed_trees,
    generate_full_group,
    grow_invariant_trees,
    invariant_edges,
)
from .unfold import CanonicalShape, Net, canonical_form, classify_shapes, hinge_tree, layout

__version__ = "0.1.0"
