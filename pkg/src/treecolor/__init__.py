"""Ancestor-distinct coloring of rooted trees.

Color every node of a rooted tree so that no node shares a color with any
of its ancestors.  The package covers: tree parsing/enumeration, coloring
verification and the two canonical minimum colorings, necessary conditions
on candidate class-size partitions, an exact colorability solver with a
brute-force oracle, balance optimization, and exhaustive censuses of trees
where the necessary conditions fail to be sufficient.
"""

from .checks import (
    CheckFailure,
    CheckReport,
    check_necessary,
    check_node_bounds,
    check_unique_path,
    iter_partitions,
    node_color_bound,
    prefix_comparisons,
    unique_path_depth,
)
from .coloring import (
    Coloring,
    Partition,
    Violation,
    canonical_by_depth,
    canonical_by_height,
    is_valid_coloring,
    min_colors,
    normalize_partition,
    partition_of,
    verify_coloring,
)
from .experiments import (
    CensusReport,
    ConjectureReport,
    TnscRecord,
    catalan_census,
    find_tnsc,
)
from .optimize import Objective, greedy_balance, objective_value, optimize
from .render import save_tree_figure, to_dot, write_dot
from .solver import (
    BUDGET_EXCEEDED,
    COLORABLE,
    DEFAULT_BUDGET,
    NOT_COLORABLE,
    BudgetExceededError,
    SolveResult,
    all_colorable_partitions,
    is_colorable,
    oracle_colorable_partitions,
    oracle_colorings,
)
from .trees import (
    Profile,
    RootedTree,
    TreeParseError,
    ancestor,
    canonical_form,
    catalan_number,
    complete_to_full,
    depth_profile,
    enumerate_trees,
    height_profile,
    parse_tree,
    perfect_binary_tree,
    serialize_tree,
    siblings,
    strip_leaves,
    subtree_leaf_count,
)

__version__ = "0.1.0"
