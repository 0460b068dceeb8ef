"""Figure output: Graphviz DOT text and matplotlib renderings.

Matplotlib is imported lazily with the Agg backend so figure paths work in
headless runs and importing the package stays cheap.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .trees import RootedTree, parse_tree

# Distinct fills, reused cyclically; order fixed so output is deterministic.
PALETTE = (
    "#a6cee3",
    "#fb9a99",
    "#b2df8a",
    "#fdbf6f",
    "#cab2d6",
    "#ffff99",
    "#1f78b4",
    "#33a02c",
    "#e31a1c",
    "#ff7f00",
    "#6a3d9a",
    "#b15928",
)


def _class_fills(colors: Sequence[int]) -> dict[int, str]:
    distinct = sorted(set(colors))
    return {c: PALETTE[i % len(PALETTE)] for i, c in enumerate(distinct)}


def to_dot(tree: RootedTree, colors: Sequence[int] | None = None) -> str:
    """DOT digraph with one fill color per color class."""
    lines = ["digraph tree {", '  node [style=filled, fontname="Helvetica"];']
    fills = _class_fills(colors) if colors is not None else {}
    for v in range(tree.n):
        if colors is not None:
            label = f"{v}\\nc{colors[v]}"
            lines.append(f'  {v} [label="{label}", fillcolor="{fills[colors[v]]}"];')
        else:
            lines.append(f'  {v} [label="{v}", fillcolor="white"];')
    for v in range(tree.n):
        for c in tree.children[v]:
            lines.append(f"  {v} -> {c};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(path: str | Path, tree: RootedTree, colors: Sequence[int] | None = None) -> None:
    Path(path).write_text(to_dot(tree, colors))


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def tree_positions(tree: RootedTree) -> list[tuple[float, float]]:
    """Leaves at consecutive x in preorder, internals centered over their
    children, y = -depth."""
    x = [0.0] * tree.n
    next_leaf = 0
    for v in range(tree.n):
        if not tree.children[v]:
            x[v] = float(next_leaf)
            next_leaf += 1
    for v in range(tree.n - 1, -1, -1):  # children carry larger ids
        if tree.children[v]:
            x[v] = sum(x[c] for c in tree.children[v]) / len(tree.children[v])
    return [(x[v], -float(tree.depth[v])) for v in range(tree.n)]


def draw_tree(ax, tree: RootedTree, colors: Sequence[int] | None = None, node_size: float = 550.0) -> None:
    pos = tree_positions(tree)
    for v in range(tree.n):
        for c in tree.children[v]:
            ax.plot(
                [pos[v][0], pos[c][0]],
                [pos[v][1], pos[c][1]],
                color="0.4",
                linewidth=1.0,
                zorder=1,
            )
    fills = _class_fills(colors) if colors is not None else None
    xs = [p[0] for p in pos]
    ys = [p[1] for p in pos]
    face = [fills[colors[v]] for v in range(tree.n)] if fills else "white"
    ax.scatter(xs, ys, s=node_size, c=face, edgecolors="black", zorder=2)
    for v in range(tree.n):
        label = str(colors[v]) if colors is not None else str(v)
        ax.annotate(label, pos[v], ha="center", va="center", fontsize=8, zorder=3)
    ax.set_axis_off()


def save_tree_figure(
    path: str | Path,
    tree: RootedTree,
    colors: Sequence[int] | None = None,
    title: str | None = None,
) -> None:
    plt = _pyplot()
    width = max(3.0, 0.7 * (len(tree.leaves) + 1))
    height = max(2.5, 0.9 * (tree.root_height + 1))
    fig, ax = plt.subplots(figsize=(width, height))
    draw_tree(ax, tree, colors)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_census_figures(directory: str | Path, report) -> list[Path]:
    """One drawing per census record plus a per-size summary bar chart."""
    from .coloring import canonical_by_height

    plt = _pyplot()
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for i, rec in enumerate(report.records):
        tree = parse_tree(rec.canonical)
        failing = ", ".join("(" + ",".join(map(str, p)) + ")" for p in rec.failing)
        path = directory / f"tnsc_{report.tree_class}_n{rec.n}_{i:02d}.png"
        save_tree_figure(
            path,
            tree,
            canonical_by_height(tree).colors,
            title=f"n={rec.n}  profile={rec.profile}  uncolorable: {failing}",
        )
        written.append(path)
    sizes = sorted(report.scanned)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(sizes, [report.scanned[n] for n in sizes], color="0.8", label="classes scanned")
    ax.bar(
        sizes,
        [sum(1 for r in report.records if r.n == n) for n in sizes],
        color="#e31a1c",
        label="with uncolorable passing partition",
    )
    ax.set_xlabel("tree size")
    ax.set_ylabel("isomorphism classes")
    ax.set_title(f"necessary-condition gap census ({report.tree_class})")
    ax.legend(fontsize=8)
    fig.tight_layout()
    summary = directory / f"tnsc_{report.tree_class}_summary.png"
    fig.savefig(summary, dpi=150)
    plt.close(fig)
    written.append(summary)
    return written


def save_conjecture_figure(directory: str | Path, report) -> Path:
    plt = _pyplot()
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    hs = [row["h"] for row in report.rows]
    tested = [row["partitions_tested"] for row in report.rows]
    bad = [len(row["counterexamples"]) for row in report.rows]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(hs, tested, color="#a6cee3", label="partitions tested")
    ax.bar(hs, bad, color="#e31a1c", label="counterexamples")
    ax.set_xlabel("perfect tree height")
    ax.set_ylabel("partitions")
    ax.set_xticks(hs)
    ax.set_yscale("log")
    ax.set_title("sufficiency check on perfect binary trees")
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = directory / "conjecture.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_catalan_figure(directory: str | Path, census: dict) -> Path:
    plt = _pyplot()
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    ns = [row["n"] for row in census["rows"]]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.plot(ns, [r["binary_count"] for r in census["rows"]], "o-", label="binary, size n")
    ax.plot(ns, [r["full_binary_count"] for r in census["rows"]], "s--", label="full binary, size 2n+1")
    ax.plot(ns, [r["catalan"] for r in census["rows"]], "k:", label="closed form")
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    ax.set_yscale("log")
    ax.set_title("Catalan cross-count")
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = directory / "catalan.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
