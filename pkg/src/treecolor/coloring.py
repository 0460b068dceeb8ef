"""Colorings under the ancestor-distinct rule.

A coloring assigns every node a positive integer color; it is *valid* when
no node shares a color with any of its ancestors (equivalently, every
root-to-leaf path carries pairwise distinct colors).  Validity is a checked
property, not a construction invariant.  Color labels carry no meaning:
two colorings are equivalent when they induce the same partition of the
nodes, so comparisons go through sorted class sizes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .trees import RootedTree

Partition = tuple[int, ...]


def normalize_partition(sizes: Iterable[int]) -> Partition:
    """Sort class sizes non-increasing and drop empty classes.

    Zero entries are permitted (a color that colors nothing) and removed;
    negative entries are rejected.
    """
    out = []
    for s in sizes:
        s = int(s)
        if s < 0:
            raise ValueError(f"class sizes must be non-negative, got {s}")
        if s > 0:
            out.append(s)
    out.sort(reverse=True)
    return tuple(out)


@dataclass(frozen=True)
class Coloring:
    """A total color assignment, one positive integer per preorder node id."""

    tree: RootedTree
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.tree.n:
            raise ValueError(
                f"coloring size mismatch: {len(self.colors)} colors for "
                f"{self.tree.n} nodes"
            )
        if any(c < 1 for c in self.colors):
            raise ValueError("color indices must be positive integers")


@dataclass(frozen=True)
class Violation:
    """An ancestor/descendant pair sharing a color."""

    ancestor: int
    node: int


def _colors_of(tree: RootedTree, coloring: Coloring | Sequence[int]) -> tuple[int, ...]:
    if isinstance(coloring, Coloring):
        if coloring.tree.n != tree.n:
            raise ValueError("coloring belongs to a tree of different size")
        return coloring.colors
    colors = tuple(int(c) for c in coloring)
    if len(colors) != tree.n:
        raise ValueError(
            f"coloring size mismatch: {len(colors)} colors for {tree.n} nodes"
        )
    return colors


def verify_coloring(
    tree: RootedTree, coloring: Coloring | Sequence[int]
) -> Violation | None:
    """Return None if valid, else one offending ancestor/descendant pair.

    Walks the tree once, carrying the colors seen on the current root path.
    """
    colors = _colors_of(tree, coloring)
    on_path: dict[int, int] = {}
    stack: list[tuple[int, bool]] = [(0, False)]
    while stack:
        v, leaving = stack.pop()
        if leaving:
            del on_path[colors[v]]
            continue
        c = colors[v]
        if c in on_path:
            return Violation(ancestor=on_path[c], node=v)
        on_path[c] = v
        stack.append((v, True))
        for child in reversed(tree.children[v]):
            stack.append((child, False))
    return None


def is_valid_coloring(tree: RootedTree, coloring: Coloring | Sequence[int]) -> bool:
    return verify_coloring(tree, coloring) is None


def canonical_by_depth(tree: RootedTree) -> Coloring:
    """Color every node by its depth: all depth-d nodes get color d+1."""
    return Coloring(tree, tuple(d + 1 for d in tree.depth))


def canonical_by_height(tree: RootedTree) -> Coloring:
    """Color every node by its height: all height-g nodes get color g+1.

    Heights strictly decrease along any root path, so this is always valid,
    and its partition is the height profile itself.
    """
    return Coloring(tree, tuple(g + 1 for g in tree.height))


def min_colors(tree: RootedTree) -> int:
    """Minimum number of colors of any valid coloring: height + 1.

    A deepest leaf and its ancestors already need h+1 distinct colors, and
    either canonical coloring achieves that many.
    """
    return tree.root_height + 1


def partition_of(coloring: Coloring) -> Partition:
    """Class sizes of a coloring, sorted non-increasing; labels are ignored."""
    return normalize_partition(Counter(coloring.colors).values())
