"""Rooted trees: parsing, profiles, structural queries, and exhaustive enumeration.

Trees are immutable once built.  Node ids are dense integers assigned in
preorder, so the root is always node 0 and every subtree occupies a
contiguous id range.  The text format is nested parentheses: each ``(...)``
pair is one node, its children listed inside from left to right, e.g.
``"((()())())"`` is a root with two children, the first of which carries two
leaves.

Binary trees distinguish a left and a right child even when only one child
is present.  That distinction cannot be spelled in the paren format, so each
node carries a ``slot`` (its position under its parent: 0 = left, 1 = right
for binary trees).  Parsing assigns slots positionally; the binary
enumerator and ``strip_leaves`` are the only sources of right-only children.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

__all__ = [
    "Profile",
    "RootedTree",
    "TreeParseError",
    "ancestor",
    "canonical_form",
    "catalan_number",
    "complete_to_full",
    "depth_profile",
    "enumerate_trees",
    "height_profile",
    "parse_tree",
    "perfect_binary_tree",
    "serialize_tree",
    "siblings",
    "strip_leaves",
    "subtree_leaf_count",
]


class TreeParseError(ValueError):
    """Malformed tree text; ``offset`` is the character position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Profile:
    """Node counts per level: ``counts[g]`` nodes at height (or depth) ``g``.

    Always has length ``h + 1`` for a tree of height ``h`` and sums to the
    node count.  Height profiles are non-increasing; both axes have no zero
    entries (levels of a tree are contiguously occupied).
    """

    counts: tuple[int, ...]
    axis: str  # "height" | "depth"

    def __post_init__(self) -> None:
        if self.axis not in ("height", "depth"):
            raise ValueError(f"unknown profile axis {self.axis!r}")
        if not self.counts or any(c < 1 for c in self.counts):
            raise ValueError("profile levels must all be occupied")
        if self.axis == "height" and any(
            a < b for a, b in zip(self.counts, self.counts[1:])
        ):
            raise ValueError("height profile must be non-increasing")

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def tree_height(self) -> int:
        return len(self.counts) - 1

    def prefix_sums(self) -> tuple[int, ...]:
        out, total = [], 0
        for c in self.counts:
            total += c
            out.append(total)
        return tuple(out)


@dataclass(frozen=True)
class RootedTree:
    """Immutable rooted tree over preorder node ids ``0..n-1``.

    ``parent[0]`` is ``None``; ``children[v]`` lists v's children in stored
    order; ``slot[v]`` is v's position under its parent (0 for the root).
    ``depth`` and ``height`` are precomputed per node.
    """

    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...]
    height: tuple[int, ...]
    slot: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def root_height(self) -> int:
        return self.height[0]

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"node id {v} out of range for tree of size {self.n}")

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.children[v])

    @cached_property
    def subtree_sizes(self) -> tuple[int, ...]:
        sizes = [1] * self.n
        for v in range(self.n - 1, 0, -1):  # children have larger ids
            sizes[self.parent[v]] += sizes[v]
        return tuple(sizes)

    @cached_property
    def subtree_leaf_counts(self) -> tuple[int, ...]:
        counts = [0 if self.children[v] else 1 for v in range(self.n)]
        for v in range(self.n - 1, 0, -1):
            counts[self.parent[v]] += counts[v]
        return tuple(counts)

    @cached_property
    def is_binary(self) -> bool:
        return all(
            len(cs) <= 2 and all(self.slot[c] in (0, 1) for c in cs)
            for cs in self.children
        )

    @cached_property
    def is_full_binary(self) -> bool:
        return self.is_binary and all(len(cs) != 1 for cs in self.children)


class _Builder:
    """Accumulates nodes in preorder, then computes depths and heights."""

    def __init__(self) -> None:
        self.parent: list[int | None] = []
        self.children: list[list[int]] = []
        self.slot: list[int] = []

    def add(self, parent: int | None, slot: int | None = None) -> int:
        v = len(self.parent)
        self.parent.append(parent)
        self.children.append([])
        if parent is None:
            self.slot.append(0)
        else:
            self.slot.append(slot if slot is not None else len(self.children[parent]))
            self.children[parent].append(v)
        return v

    def finish(self) -> RootedTree:
        n = len(self.parent)
        if n == 0:
            raise ValueError("a tree needs at least one node")
        depth = [0] * n
        for v in range(1, n):
            depth[v] = depth[self.parent[v]] + 1
        height = [0] * n
        for v in range(n - 1, 0, -1):
            p = self.parent[v]
            height[p] = max(height[p], height[v] + 1)
        return RootedTree(
            parent=tuple(self.parent),
            children=tuple(tuple(cs) for cs in self.children),
            depth=tuple(depth),
            height=tuple(height),
            slot=tuple(self.slot),
        )


def parse_tree(text: str) -> RootedTree:
    """Parse nested-paren tree text.  Whitespace is ignored.

    Raises :class:`TreeParseError` with the offending offset on bad input.
    """
    builder = _Builder()
    stack: list[int] = []
    root_seen = False
    for i, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch == "(":
            if root_seen and not stack:
                raise TreeParseError("trailing input after the root node", i)
            parent = stack[-1] if stack else None
            stack.append(builder.add(parent))
            root_seen = True
        elif ch == ")":
            if not stack:
                raise TreeParseError("unmatched ')'", i)
            stack.pop()
        else:
            raise TreeParseError(f"unexpected character {ch!r}", i)
    if not root_seen:
        raise TreeParseError("empty input", len(text))
    if stack:
        raise TreeParseError("unclosed '('", len(text))
    return builder.finish()


def serialize_tree(tree: RootedTree) -> str:
    """Render a tree in the paren format, children in stored order."""
    enc = [""] * tree.n
    for v in range(tree.n - 1, -1, -1):
        enc[v] = "(" + "".join(enc[c] for c in tree.children[v]) + ")"
    return enc[0]


def canonical_form(tree: RootedTree) -> str:
    """Order-independent encoding: equal strings iff isomorphic as unordered
    rooted trees.  Child encodings are sorted, so the result is also valid
    paren text for a canonical representative."""
    enc = [""] * tree.n
    for v in range(tree.n - 1, -1, -1):
        enc[v] = "(" + "".join(sorted(enc[c] for c in tree.children[v])) + ")"
    return enc[0]


def height_profile(tree: RootedTree) -> Profile:
    counts = Counter(tree.height)
    return Profile(tuple(counts[g] for g in range(tree.root_height + 1)), "height")


def depth_profile(tree: RootedTree) -> Profile:
    counts = Counter(tree.depth)
    return Profile(tuple(counts[d] for d in range(tree.root_height + 1)), "depth")


def siblings(tree: RootedTree, v: int) -> tuple[int, ...]:
    """Other children of v's parent; empty for the root."""
    tree._check_node(v)
    p = tree.parent[v]
    if p is None:
        return ()
    return tuple(c for c in tree.children[p] if c != v)


def ancestor(tree: RootedTree, v: int, steps: int) -> int | None:
    """The ``steps``-th ancestor of v (0 = v itself), or None beyond the root."""
    tree._check_node(v)
    if steps < 0:
        raise ValueError("steps must be non-negative")
    u: int | None = v
    for _ in range(steps):
        if u is None:
            return None
        u = tree.parent[u]
    return u


def subtree_leaf_count(tree: RootedTree, v: int) -> int:
    tree._check_node(v)
    return tree.subtree_leaf_counts[v]


def strip_leaves(tree: RootedTree) -> RootedTree:
    """Remove every leaf of a full binary tree; the surviving skeleton is a
    binary tree (internal-only child keeps its left/right slot).

    Inverse of :func:`complete_to_full`.  The single-node tree is rejected:
    its skeleton would be empty.
    """
    if not tree.is_full_binary:
        raise ValueError("strip_leaves needs a full binary tree")
    if tree.n == 1:
        raise ValueError("stripping the lone root would leave an empty tree")
    builder = _Builder()

    def walk(v: int, parent: int | None, slot: int) -> None:
        nv = builder.add(parent, slot)
        for c in tree.children[v]:
            if tree.children[c]:
                walk(c, nv, tree.slot[c])

    walk(0, None, 0)
    return builder.finish()


def complete_to_full(tree: RootedTree) -> RootedTree:
    """Give every binary-tree node exactly two children by adding leaves in
    the vacant slots; maps n nodes to 2n+1.  Inverse of :func:`strip_leaves`.
    """
    if not tree.is_binary:
        raise ValueError("complete_to_full needs a binary tree")
    builder = _Builder()

    def walk(v: int, parent: int | None, slot: int) -> None:
        nv = builder.add(parent, slot)
        by_slot = {tree.slot[c]: c for c in tree.children[v]}
        for s in (0, 1):
            c = by_slot.get(s)
            if c is None:
                builder.add(nv, s)
            else:
                walk(c, nv, s)

    walk(0, None, 0)
    return builder.finish()


def _level_sequences(n: int) -> Iterator[list[int]]:
    # Successor generation over canonical level sequences, lexicographically
    # decreasing from the path [1..n] down to the star [1,2,2,...]; yields
    # each unordered rooted tree exactly once.
    levels = list(range(1, n + 1))
    while True:
        yield levels
        p = None
        for i in range(n - 1, -1, -1):
            if levels[i] > 2:
                p = i
                break
        if p is None:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        step = p - q
        nxt = levels[:p]
        for i in range(p, n):
            nxt.append(nxt[i - step])
        levels = nxt


def _tree_from_levels(levels: list[int]) -> RootedTree:
    builder = _Builder()
    latest: dict[int, int] = {}
    for lv in levels:
        parent = latest[lv - 1] if lv > 1 else None
        latest[lv] = builder.add(parent)
    return builder.finish()


def _binary_shapes(n: int) -> Iterator[tuple | None]:
    # shape = None (absent) or (left, right)
    if n == 0:
        yield None
        return
    for left_size in range(n):
        for left in _binary_shapes(left_size):
            for right in _binary_shapes(n - 1 - left_size):
                yield (left, right)


def _tree_from_binary_shape(shape: tuple) -> RootedTree:
    builder = _Builder()

    def walk(node: tuple, parent: int | None, slot: int) -> None:
        v = builder.add(parent, slot)
        left, right = node
        if left is not None:
            walk(left, v, 0)
        if right is not None:
            walk(right, v, 1)

    walk(shape, None, 0)
    return builder.finish()


def _full_shapes(n: int) -> Iterator[tuple]:
    # shape = () for a leaf or (left, right) for an internal node; n odd
    if n == 1:
        yield ()
        return
    for left_size in range(1, n - 1, 2):
        for left in _full_shapes(left_size):
            for right in _full_shapes(n - 1 - left_size):
                yield (left, right)


def _tree_from_full_shape(shape: tuple) -> RootedTree:
    builder = _Builder()

    def walk(node: tuple, parent: int | None, slot: int) -> None:
        v = builder.add(parent, slot)
        if node:
            walk(node[0], v, 0)
            walk(node[1], v, 1)

    walk(shape, None, 0)
    return builder.finish()


TREE_CLASSES = ("rooted", "binary", "full_binary")


def enumerate_trees(tree_class: str, n: int) -> Iterator[RootedTree]:
    """Stream all trees of the given class and size, in deterministic order.

    ``rooted``: one representative per isomorphism class (unordered children).
    ``binary`` / ``full_binary``: one tree per distinct left/right shape,
    counted by Catalan numbers.  ``full_binary`` requires odd n.
    """
    if tree_class not in TREE_CLASSES:
        raise ValueError(f"unknown tree class {tree_class!r}")
    if n < 1:
        raise ValueError(f"tree size must be positive, got {n}")
    if tree_class == "rooted":
        for levels in _level_sequences(n):
            yield _tree_from_levels(levels)
    elif tree_class == "binary":
        for shape in _binary_shapes(n):
            yield _tree_from_binary_shape(shape)
    else:
        if n % 2 == 0:
            raise ValueError(f"full binary trees have odd size, got {n}")
        for shape in _full_shapes(n):
            yield _tree_from_full_shape(shape)


def perfect_binary_tree(height: int) -> RootedTree:
    """The perfect binary tree of the given height: 2^(h+1) - 1 nodes, all
    leaves at depth h."""
    if height < 0:
        raise ValueError("height must be non-negative")
    shape: tuple = ()
    for _ in range(height):
        shape = (shape, shape)
    return _tree_from_full_shape(shape)


def catalan_number(n: int) -> int:
    """(2n)! / ((n+1)! n!)"""
    return math.comb(2 * n, n) // (n + 1)
