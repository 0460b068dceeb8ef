"""Necessary conditions a partition must satisfy to be colorable.

Given a tree with height profile (n_0, ..., n_h) and a candidate partition
A = (a_1, ..., a_c) of class sizes, ``check_necessary`` verifies:

  * sum:        a_1 + ... + a_c = n  (every node gets a color)
  * root_unit:  some a_i = 1         (the root's color is unique to it)
  * prefix_k:   the k largest class sizes sum to at most n_0 + ... + n_(k-1)

The prefix form is equivalent to quantifying over all k-subsets of classes,
since the bound depends only on k and the worst subset is the k largest.
These conditions are necessary but not sufficient; ``check_unique_path`` and
``check_node_bounds`` add two sharper structure-aware necessary tests.

All checks are pure and report every failed comparison rather than raising.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterator

from .coloring import Partition, normalize_partition
from .trees import Profile, RootedTree, depth_profile


@dataclass(frozen=True)
class CheckFailure:
    condition: str  # "sum" | "root_unit" | "prefix_k" | "unique_path" | "node_bound"
    lhs: int
    rhs: int
    k: int | None = None  # prefix length, or violated size threshold

    def to_json(self) -> dict:
        return {"condition": self.condition, "k": self.k, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    failures: tuple[CheckFailure, ...]

    def to_json(self) -> dict:
        return {"passed": self.passed, "failures": [f.to_json() for f in self.failures]}


def _report(failures: list[CheckFailure]) -> CheckReport:
    return CheckReport(passed=not failures, failures=tuple(failures))


def prefix_comparisons(
    partition: Partition, profile: Profile
) -> list[tuple[int, int, int]]:
    """(k, lhs, rhs) rows with lhs = sum of k largest classes and rhs = the
    first k height counts; rhs saturates at n once k exceeds the height."""
    partition = normalize_partition(partition)
    bounds = profile.prefix_sums()
    rows = []
    lhs = 0
    for k, size in enumerate(partition, start=1):
        lhs += size
        rhs = bounds[min(k, len(bounds)) - 1]
        rows.append((k, lhs, rhs))
    return rows


def check_necessary(partition: Partition, profile: Profile) -> CheckReport:
    """The global conditions: sum, one unit class, and all prefix bounds."""
    if profile.axis != "height":
        raise ValueError("check_necessary expects a height profile")
    partition = normalize_partition(partition)
    failures: list[CheckFailure] = []
    n = profile.n
    total = sum(partition)
    if total != n:
        failures.append(CheckFailure("sum", lhs=total, rhs=n))
    if partition and partition[-1] != 1:
        failures.append(CheckFailure("root_unit", lhs=partition[-1], rhs=1))
    for k, lhs, rhs in prefix_comparisons(partition, profile):
        if lhs > rhs:
            failures.append(CheckFailure("prefix_k", lhs=lhs, rhs=rhs, k=k))
    return _report(failures)


def unique_path_depth(tree: RootedTree) -> int:
    """Largest d such that depths 0..d each hold exactly one node."""
    counts = depth_profile(tree).counts
    d = 0
    while d + 1 < len(counts) and counts[d + 1] == 1:
        d += 1
    return d


def check_unique_path(partition: Partition, tree: RootedTree) -> CheckReport:
    """If the tree starts with a unary chain down to depth d, those d+1 nodes
    are each alone in their class, so the partition needs d+1 unit classes."""
    partition = normalize_partition(partition)
    needed = unique_path_depth(tree) + 1
    units = sum(1 for s in partition if s == 1)
    if units < needed:
        return _report([CheckFailure("unique_path", lhs=needed, rhs=units)])
    return _report([])


def node_color_bound(tree: RootedTree, v: int) -> int:
    """Capacity of v's color class: 1 + the leaf counts of the subtrees
    hanging off v's ancestors' path (siblings of v and of each proper
    ancestor below the root).

    Any node sharing v's color must avoid v's ancestors and descendants,
    which confines the class to those side subtrees, with at most one node
    per leaf there.  The root's bound is 1.
    """
    tree._check_node(v)
    leaf_counts = tree.subtree_leaf_counts
    total = 1
    u = v
    while tree.parent[u] is not None:
        p = tree.parent[u]
        for w in tree.children[p]:
            if w != u:
                total += leaf_counts[w]
        u = p
    return total


def check_node_bounds(partition: Partition, tree: RootedTree) -> CheckReport:
    """Every node must sit in a class no larger than its own capacity bound,
    so for each size threshold t, the classes of size >= t (which together
    hold sum_{a_j >= t} a_j nodes) can only draw on nodes whose bound is at
    least t.  Checks that counting condition at every distinct class size.
    """
    partition = normalize_partition(partition)
    bounds = sorted(node_color_bound(tree, v) for v in range(tree.n))
    failures: list[CheckFailure] = []
    demand = 0
    idx = 0
    while idx < len(partition):
        t = partition[idx]
        while idx < len(partition) and partition[idx] == t:
            demand += partition[idx]
            idx += 1
        available = len(bounds) - bisect.bisect_left(bounds, t)
        if demand > available:
            failures.append(CheckFailure("node_bound", lhs=demand, rhs=available, k=t))
    return _report(failures)


def iter_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All integer partitions of n as non-increasing tuples, largest part
    first, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None or max_part > n:
        max_part = n

    def rec(remaining: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(acc)
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, acc)
            acc.pop()

    if n == 0:
        yield ()
        return
    yield from rec(n, max_part, [])
