"""Resolving partitions, partition dimension and metric dimension of small graphs."""

from .anatomy import GenTreeAnatomy, TreeAnatomy, gen_tree_anatomy, support_profile, tree_anatomy
from .bounds import BoundEntry, BoundsReport, bounds_report, dim_formula
from .constructions import (
    construct_gentree,
    construct_path,
    construct_spider,
    construct_star,
    construct_thm1,
    construct_thm3,
    thm3_precondition,
)
from .errors import *  # noqa: F401,F403
from .graph import (
    BlockDecomposition,
    Graph,
    all_pairs_distances,
    block_decomposition,
    from_edge_list,
    is_connected,
    is_generalized_tree,
    is_path_graph,
    is_star_graph,
    is_tree,
)
from .lab import (
    BuildSequence,
    BuildStep,
    SweepResult,
    all_trees,
    random_generalized_tree,
    random_tree,
    sweep,
    tree_from_prufer,
)
from .resolver import (
    ResolutionVerdict,
    VertexPartition,
    is_resolving_partition,
    is_resolving_set,
    metric_dimension_exact,
    metric_representation,
    partition_dimension_exact,
    partition_representation,
)

__version__ = "0.1.0"
