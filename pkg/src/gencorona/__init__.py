"""General coronas of graphs and the trees with domination subdivision number 3."""

from .characterize import (
    ClassReport,
    CoronaWitness,
    LabeledTreeAB,
    f_closure,
    f_extend,
    f_member,
    recognize_general_corona,
    verify_equivalences,
    verify_witness,
)
from .corona import (
    CoronaGraph,
    InvalidPartitionError,
    NeighborhoodPartition,
    contract_internal_pair,
    general_corona,
    glue_at_edge,
    glue_at_external_vertex,
    is_refinement,
    singleton_partition,
    split_internal,
    trivial_partition,
    two_subdivision,
    validate_partition,
)
from .domination import (
    dominating_2packings_with_leaves,
    domination_number,
    domination_number_bruteforce,
    has_unique_dominating_2packing_with_leaves,
    is_2packing,
    is_dominating,
)
from .graph import (
    External,
    Graph,
    GraphError,
    Internal,
    NotATreeError,
    are_isomorphic_trees,
    distance,
    from_edge_list,
    is_tree,
    leaves,
    longest_path,
    support_vertices,
    tree_canonical_code,
)
from .subdivision import TreeClass, classify_tree, subdivide_edge, subdivide_edge_set, subdivision_number
from .trees import count_free_trees, free_trees

__version__ = "0.1.0"

__all__ = [
    "ClassReport",
    "CoronaGraph",
    "CoronaWitness",
    "External",
    "Graph",
    "GraphError",
    "Internal",
    "InvalidPartitionError",
    "LabeledTreeAB",
    "NeighborhoodPartition",
    "NotATreeError",
    "TreeClass",
    "are_isomorphic_trees",
    "classify_tree",
    "contract_internal_pair",
    "count_free_trees",
    "distance",
    "dominating_2packings_with_leaves",
    "domination_number",
    "domination_number_bruteforce",
    "f_closure",
    "f_extend",
    "f_member",
    "free_trees",
    "from_edge_list",
    "general_corona",
    "glue_at_edge",
    "glue_at_external_vertex",
    "has_unique_dominating_2packing_with_leaves",
    "is_2packing",
    "is_dominating",
    "is_refinement",
    "is_tree",
    "leaves",
    "longest_path",
    "recognize_general_corona",
    "singleton_partition",
    "split_internal",
    "subdivide_edge",
    "subdivide_edge_set",
    "subdivision_number",
    "support_vertices",
    "tree_canonical_code",
    "trivial_partition",
    "two_subdivision",
    "validate_partition",
    "verify_equivalences",
    "verify_witness",
]
