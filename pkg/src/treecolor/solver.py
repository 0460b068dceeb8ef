"""Exact colorability decisions and the brute-force coloring oracle.

``is_colorable`` runs a depth-first search over nodes in preorder: the state
is the remaining budget per class plus the classes already used on the
current root path, and each step picks a class for the current node.  Two
devices keep it exact yet fast at desk scale:

  * symmetry breaking: classes of equal size are interchangeable until first
    used, so only the lowest-indexed unused class of each size is branched on;
  * admissible pruning: on entering a node, every pending forest hanging
    below an ancestor (the not-yet-visited subtrees) must still be fillable
    from the remaining budgets, where "fillable" is bounded by the same
    prefix inequalities that hold for any colorable partition, applied to the
    forest's height counts.  The bound never underestimates what a valid
    completion could place, so pruning never changes answers.

Search effort is metered in node expansions; exceeding the budget is an
explicit third verdict, never reported as not_colorable.
"""

from __future__ import annotations

import sys
import time
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterator

from .checks import check_necessary, iter_partitions
from .coloring import Coloring, Partition, normalize_partition, verify_coloring
from .trees import RootedTree, height_profile

DEFAULT_BUDGET = 100_000_000

COLORABLE = "colorable"
NOT_COLORABLE = "not_colorable"
BUDGET_EXCEEDED = "budget_exceeded"


class BudgetExceededError(RuntimeError):
    """An operation that needs a definite verdict ran out of search budget."""


class _BudgetHit(Exception):
    pass


@dataclass(frozen=True)
class SolveResult:
    status: str  # COLORABLE | NOT_COLORABLE | BUDGET_EXCEEDED
    witness: Coloring | None
    nodes_expanded: int
    elapsed: float

    def to_json(self) -> dict:
        out: dict = {"status": self.status, "nodes_expanded": self.nodes_expanded}
        if self.witness is not None:
            out["witness"] = list(self.witness.colors)
        return out


class _Search:
    def __init__(self, tree: RootedTree, sizes: tuple[int, ...], budget: int):
        self.tree = tree
        self.n = tree.n
        self.sizes = sizes
        self.m = len(sizes)
        self.budget = budget
        self.expanded = 0
        self.remaining = list(sizes)
        self.used = [0] * self.m
        self.assigned = [-1] * self.n
        self.next_out = tuple(v + s for v, s in enumerate(tree.subtree_sizes))
        ids_by_height: list[list[int]] = [[] for _ in range(tree.root_height + 1)]
        for v in range(self.n):
            ids_by_height[tree.height[v]].append(v)  # ascending: ids in id order
        self.ids_by_height = ids_by_height
        self.leaf_ids = list(tree.leaves)  # ascending

    def _span_caps(self, start: int, end: int) -> list[int]:
        # Prefix sums of the forest's height counts: caps[k-1] bounds how many
        # nodes any k classes can take inside [start, end).
        caps: list[int] = []
        total = 0
        span = end - start
        for ids in self.ids_by_height:
            total += bisect_right(ids, end - 1) - bisect_left(ids, start)
            caps.append(total)
            if total == span:
                break
        return caps

    def _fillable(self, avail_desc: list[int], caps: list[int], span: int) -> bool:
        # Max placeable <= min over k of caps(k) + (budgets outside the top k).
        ub = sum(avail_desc)
        if ub < span:
            return False
        suffix = ub
        for k in range(1, len(avail_desc) + 1):
            suffix -= avail_desc[k - 1]
            cap = caps[k - 1] if k <= len(caps) else caps[-1]
            if cap + suffix < ub:
                ub = cap + suffix
                if ub < span:
                    return False
        return True

    def _feasible(self, v: int) -> bool:
        tree = self.tree
        path: list[int] = []  # classes on root..parent(v), root first
        u = tree.parent[v]
        anc: list[int] = []
        while u is not None:
            anc.append(u)
            u = tree.parent[u]
        anc.reverse()  # root first
        path = [self.assigned[a] for a in anc]
        # Pending forests, innermost first: v's own subtree (all path classes
        # excluded), then everything still unvisited under each ancestor
        # (classes above and including that ancestor excluded).
        levels = [(self.next_out[v], len(path))]
        for i in range(len(anc) - 1, -1, -1):
            levels.append((self.next_out[anc[i]], i + 1))
        total_remaining = self.n - v
        excl_prefix = [0]
        for c in path:
            excl_prefix.append(excl_prefix[-1] + self.remaining[c])
        # Per-class leaf capacity: a class holds pairwise-incomparable nodes,
        # at most one per leaf of the pending regions it is allowed in.  The
        # class of the ancestor at path index i is shut out of everything
        # below that ancestor's deeper path, leaving it the leaves at ids
        # >= next_out[anc at path index i].
        d = len(path)
        leaf_ids = self.leaf_ids
        pending_leaves = len(leaf_ids) - bisect_left(leaf_ids, v)
        for i, c in enumerate(path):
            if self.remaining[c] > len(leaf_ids) - bisect_left(
                leaf_ids, self.next_out[anc[i]]
            ):
                return False
        allowed_max = 0
        on_path = set(path)
        for j in range(self.m):
            if j not in on_path and self.remaining[j] > allowed_max:
                allowed_max = self.remaining[j]
        if allowed_max > pending_leaves:
            return False
        for end, excl_len in levels:
            span = end - v
            if total_remaining - excl_prefix[excl_len] < span:
                return False
            excluded = set(path[:excl_len])
            avail = sorted(
                (
                    self.remaining[j]
                    for j in range(self.m)
                    if self.remaining[j] > 0 and j not in excluded
                ),
                reverse=True,
            )
            if not self._fillable(avail, self._span_caps(v, end), span):
                return False
        return True

    def _candidates(self, v: int) -> list[int]:
        forbidden = set()
        u = self.tree.parent[v]
        while u is not None:
            forbidden.add(self.assigned[u])
            u = self.tree.parent[u]
        cands: list[int] = []
        seen_sizes: set[int] = set()
        for j in range(self.m):
            if self.remaining[j] == 0 or j in forbidden:
                continue
            if self.used[j] == 0:
                if self.sizes[j] in seen_sizes:
                    continue  # interchangeable with an earlier unused class
                seen_sizes.add(self.sizes[j])
            cands.append(j)
        cands.sort(key=lambda j: (-self.remaining[j], j))
        return cands

    def run(self) -> bool:
        return self._descend(0)

    def _descend(self, v: int) -> bool:
        if v == self.n:
            return True
        if not self._feasible(v):
            return False
        for j in self._candidates(v):
            self.expanded += 1
            if self.expanded > self.budget:
                raise _BudgetHit
            self.assigned[v] = j
            self.remaining[j] -= 1
            self.used[j] += 1
            if self._descend(v + 1):
                return True
            self.assigned[v] = -1
            self.remaining[j] += 1
            self.used[j] -= 1
        return False


def is_colorable(
    tree: RootedTree, partition: Partition, budget: int | None = None
) -> SolveResult:
    """Decide exactly whether some valid coloring has these class sizes.

    Deterministic; a colorable verdict carries a witness whose partition
    equals the (normalized) input.
    """
    sizes = normalize_partition(partition)
    if sum(sizes) != tree.n:
        raise ValueError(
            f"partition sums to {sum(sizes)} but the tree has {tree.n} nodes"
        )
    if budget is None:
        budget = DEFAULT_BUDGET
    limit = 3 * tree.n + 200
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)
    search = _Search(tree, sizes, budget)
    start = time.perf_counter()
    try:
        found = search.run()
    except _BudgetHit:
        return SolveResult(
            BUDGET_EXCEEDED, None, search.expanded, time.perf_counter() - start
        )
    elapsed = time.perf_counter() - start
    if not found:
        return SolveResult(NOT_COLORABLE, None, search.expanded, elapsed)
    witness = Coloring(tree, tuple(j + 1 for j in search.assigned))
    assert verify_coloring(tree, witness) is None
    return SolveResult(COLORABLE, witness, search.expanded, elapsed)


def all_colorable_partitions(
    tree: RootedTree, budget: int | None = None
) -> list[Partition]:
    """Every normalized partition realizable by a valid coloring, largest
    first.  Candidates are pre-filtered by the necessary conditions (which
    never exclude a colorable partition), then settled by the exact solver.
    """
    profile = height_profile(tree)
    min_classes = tree.root_height + 1
    out: list[Partition] = []
    for part in iter_partitions(tree.n, max_part=profile.counts[0]):
        if len(part) < min_classes:
            continue
        if not check_necessary(part, profile).passed:
            continue
        result = is_colorable(tree, part, budget)
        if result.status == BUDGET_EXCEEDED:
            raise BudgetExceededError(
                f"search budget exhausted deciding partition {part}"
            )
        if result.status == COLORABLE:
            out.append(part)
    out.sort(reverse=True)
    return out


def oracle_colorings(tree: RootedTree) -> Iterator[Coloring]:
    """Brute-force stream of every valid coloring, one per label-permutation
    class: nodes take, in preorder, any already-used color absent from their
    root path, or the next fresh color.  Independent of the solver.
    """
    n = tree.n
    colors = [0] * n

    def rec(v: int, max_used: int) -> Iterator[Coloring]:
        if v == n:
            yield Coloring(tree, tuple(colors))
            return
        on_path = set()
        u = tree.parent[v]
        while u is not None:
            on_path.add(colors[u])
            u = tree.parent[u]
        for c in range(1, max_used + 2):
            if c in on_path:
                continue
            colors[v] = c
            yield from rec(v + 1, max(max_used, c))
        colors[v] = 0

    yield from rec(0, 0)


def oracle_colorable_partitions(tree: RootedTree) -> list[Partition]:
    """Partition set derived purely from the brute-force oracle."""
    from .coloring import partition_of

    seen = {partition_of(c) for c in oracle_colorings(tree)}
    return sorted(seen, reverse=True)
