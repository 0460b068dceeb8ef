"""Balance objectives over colorings and exact/heuristic optimization.

All objectives are minimized.  Entropy maximization is exposed as minimizing
its negation, i.e. the sum of a*log(a) over class sizes; any log base gives
the same argmin, natural log is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping

from .coloring import Coloring, Partition, normalize_partition
from .solver import COLORABLE, all_colorable_partitions, is_colorable
from .trees import RootedTree

CostTable = Mapping[int, float] | Callable[[int], float]


@dataclass(frozen=True)
class Objective:
    kind: str  # "max" | "moment" | "entropy" | "cost"
    p: float | None = None
    cost: CostTable | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("max", "moment", "entropy", "cost"):
            raise ValueError(f"unknown objective kind {self.kind!r}")
        if self.kind == "moment" and (self.p is None or self.p <= 0):
            raise ValueError("moment objective needs a positive exponent")
        if self.kind == "cost" and self.cost is None:
            raise ValueError("cost objective needs a cost table")

    @staticmethod
    def min_max() -> "Objective":
        return Objective("max")

    @staticmethod
    def moment(p: float) -> "Objective":
        return Objective("moment", p=p)

    @staticmethod
    def entropy() -> "Objective":
        return Objective("entropy")

    @staticmethod
    def total_cost(cost: CostTable) -> "Objective":
        return Objective("cost", cost=cost)


def objective_value(partition: Partition, objective: Objective) -> float:
    partition = normalize_partition(partition)
    if objective.kind == "max":
        return float(max(partition))
    if objective.kind == "moment":
        return float(sum(a**objective.p for a in partition))
    if objective.kind == "entropy":
        return float(sum(a * math.log(a) for a in partition))
    cost = objective.cost
    if callable(cost):
        return float(sum(cost(a) for a in partition))
    try:
        return float(sum(cost[a] for a in partition))
    except KeyError as exc:
        raise ValueError(f"cost table has no entry for class size {exc.args[0]}")


def optimize(
    tree: RootedTree,
    objective: Objective,
    colors: str | int = "chi",
    budget: int | None = None,
) -> tuple[Coloring, Partition]:
    """Best colorable partition under a color budget, with a witness.

    ``colors`` is ``"chi"`` for exactly the minimum h+1 classes, or an
    integer cap c >= h+1 for at most c classes.  Exhaustive over the
    solver-enumerated partition set; ties go to the lexicographically
    smallest sorted partition, and the witness is the solver's.
    """
    min_classes = tree.root_height + 1
    if colors == "chi":
        keep = lambda p: len(p) == min_classes
    else:
        cap = int(colors)
        if cap < min_classes:
            raise ValueError(
                f"{cap} colors is below the minimum {min_classes} for this tree"
            )
        keep = lambda p: len(p) <= cap
    candidates = [p for p in all_colorable_partitions(tree, budget) if keep(p)]
    best = min(candidates, key=lambda p: (objective_value(p, objective), p))
    result = is_colorable(tree, best, budget)
    assert result.status == COLORABLE
    return result.witness, best


def greedy_balance(tree: RootedTree, colors: int) -> tuple[Coloring, Partition]:
    """Heuristic coloring for trees beyond exact range: visit nodes by
    decreasing height (so ancestors come first) and give each the least
    loaded class absent from its root path.  Always valid; no optimality
    claim.
    """
    min_classes = tree.root_height + 1
    if colors < min_classes:
        raise ValueError(
            f"{colors} colors is below the minimum {min_classes} for this tree"
        )
    load = [0] * colors
    assigned = [0] * tree.n
    order = sorted(range(tree.n), key=lambda v: (-tree.height[v], v))
    for v in order:
        forbidden = set()
        u = tree.parent[v]
        while u is not None:
            forbidden.add(assigned[u])
            u = tree.parent[u]
        choice = min(
            (j for j in range(1, colors + 1) if j not in forbidden),
            key=lambda j: (load[j - 1], j),
        )
        assigned[v] = choice
        load[choice - 1] += 1
    coloring = Coloring(tree, tuple(assigned))
    return coloring, normalize_partition(load)
