"""Command-line interface.

Standard output carries exactly one JSON document (JSON lines for the tnsc
census); diagnostics go to standard error.  Exit codes:

  0  success / positive verdict
  1  negative verdict (invalid coloring, not colorable, failed check,
     conjecture counterexample, count mismatch)
  2  usage or parse error
  3  search budget exceeded

The env var ``TREECOLOR_BUDGET`` overrides the default node-expansion cap;
``--budget`` overrides both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import experiments, render
from .checks import check_necessary, check_node_bounds, check_unique_path
from .coloring import (
    Coloring,
    canonical_by_depth,
    canonical_by_height,
    min_colors,
    normalize_partition,
    partition_of,
    verify_coloring,
)
from .optimize import Objective, greedy_balance, objective_value, optimize
from .solver import (
    BUDGET_EXCEEDED,
    COLORABLE,
    DEFAULT_BUDGET,
    BudgetExceededError,
    all_colorable_partitions,
    is_colorable,
)
from .trees import (
    RootedTree,
    TreeParseError,
    canonical_form,
    depth_profile,
    height_profile,
    parse_tree,
    serialize_tree,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CLASS_ALIASES = {"rooted": "rooted", "binary": "binary", "full": "full_binary"}


class _UsageError(Exception):
    pass


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2))


def _emit_lines(docs) -> None:
    for doc in docs:
        print(json.dumps(doc, separators=(",", ":")))


def _fail_usage(message: str) -> int:
    print(json.dumps({"error": message}))
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _load_tree(args) -> RootedTree:
    if args.file is not None:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise _UsageError(f"cannot read {args.file}: {exc}")
    else:
        text = args.tree
    return parse_tree(text)


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok != "")
    except ValueError:
        raise _UsageError(f"{what} must be comma-separated integers, got {text!r}")


def _budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("TREECOLOR_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _UsageError(f"TREECOLOR_BUDGET must be an integer, got {env!r}")
    return DEFAULT_BUDGET


def _parse_objective(text: str) -> Objective:
    if text == "max":
        return Objective.min_max()
    if text == "entropy":
        return Objective.entropy()
    if text.startswith("moment:"):
        try:
            return Objective.moment(float(text.split(":", 1)[1]))
        except ValueError:
            raise _UsageError(f"bad moment exponent in {text!r}")
    if text.startswith("cost:"):
        path = text.split(":", 1)[1]
        try:
            raw = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise _UsageError(f"cannot load cost table {path}: {exc}")
        if isinstance(raw, list):
            table = {i + 1: float(c) for i, c in enumerate(raw)}
        elif isinstance(raw, dict):
            table = {int(k): float(v) for k, v in raw.items()}
        else:
            raise _UsageError("cost table must be a JSON list or object")
        return Objective.total_cost(table)
    raise _UsageError(
        f"unknown objective {text!r}; use max, moment:P, entropy, or cost:FILE"
    )


def _parse_color_budget(text: str, what: str = "--colors"):
    if text == "chi":
        return "chi"
    try:
        return int(text)
    except ValueError:
        raise _UsageError(f"{what} must be 'chi' or an integer, got {text!r}")


def _render_outputs(args, tree: RootedTree, colors) -> None:
    if getattr(args, "dot", None):
        render.write_dot(args.dot, tree, colors)
    if getattr(args, "figure", None):
        render.save_tree_figure(args.figure, tree, colors)


def _cmd_parse(args) -> int:
    tree = _load_tree(args)
    _emit(
        {
            "n": tree.n,
            "height": tree.root_height,
            "binary": tree.is_binary,
            "full_binary": tree.is_full_binary,
            "serialized": serialize_tree(tree),
            "canonical": canonical_form(tree),
        }
    )
    return EXIT_OK


def _cmd_profile(args) -> int:
    tree = _load_tree(args)
    _emit(
        {
            "n": tree.n,
            "height": tree.root_height,
            "by_height": list(height_profile(tree).counts),
            "by_depth": list(depth_profile(tree).counts),
        }
    )
    return EXIT_OK


def _cmd_color(args) -> int:
    tree = _load_tree(args)
    coloring = (
        canonical_by_depth(tree) if args.canonical == "depth" else canonical_by_height(tree)
    )
    _render_outputs(args, tree, coloring.colors)
    _emit(
        {
            "canonical": args.canonical,
            "min_colors": min_colors(tree),
            "colors": list(coloring.colors),
            "partition": list(partition_of(coloring)),
        }
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    tree = _load_tree(args)
    if args.coloring_file is not None:
        try:
            raw = json.loads(Path(args.coloring_file).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise _UsageError(f"cannot load coloring {args.coloring_file}: {exc}")
        colors = tuple(int(c) for c in raw)
    elif args.coloring is not None:
        colors = _parse_ints(args.coloring, "--coloring")
    else:
        raise _UsageError("verify needs --coloring or --coloring-file")
    try:
        coloring = Coloring(tree, colors)
    except ValueError as exc:
        raise _UsageError(str(exc))
    violation = verify_coloring(tree, coloring)
    _render_outputs(args, tree, colors)
    if violation is None:
        _emit({"valid": True, "partition": list(partition_of(coloring))})
        return EXIT_OK
    _emit(
        {
            "valid": False,
            "violation": {"ancestor": violation.ancestor, "node": violation.node},
        }
    )
    return EXIT_NEGATIVE


def _cmd_check(args) -> int:
    tree = _load_tree(args)
    partition = normalize_partition(_parse_ints(args.partition, "--partition"))
    necessary = check_necessary(partition, height_profile(tree))
    unique_path = check_unique_path(partition, tree)
    node_bounds = check_node_bounds(partition, tree)
    passed = necessary.passed and unique_path.passed and node_bounds.passed
    _emit(
        {
            "partition": list(partition),
            "passed": passed,
            "necessary": necessary.to_json(),
            "unique_path": unique_path.to_json(),
            "node_bounds": node_bounds.to_json(),
        }
    )
    return EXIT_OK if passed else EXIT_NEGATIVE


def _cmd_solve(args) -> int:
    tree = _load_tree(args)
    partition = normalize_partition(_parse_ints(args.partition, "--partition"))
    if sum(partition) != tree.n:
        raise _UsageError(
            f"partition sums to {sum(partition)} but the tree has {tree.n} nodes"
        )
    result = is_colorable(tree, partition, _budget(args))
    if result.witness is not None:
        _render_outputs(args, tree, result.witness.colors)
    _emit(result.to_json())
    if result.status == COLORABLE:
        return EXIT_OK
    if result.status == BUDGET_EXCEEDED:
        return EXIT_BUDGET
    return EXIT_NEGATIVE


def _cmd_partitions(args) -> int:
    tree = _load_tree(args)
    parts = all_colorable_partitions(tree, _budget(args))
    if args.colors is not None:
        cap = _parse_color_budget(args.colors)
        chi = min_colors(tree)
        if cap == "chi":
            parts = [p for p in parts if len(p) == chi]
        else:
            parts = [p for p in parts if len(p) <= cap]
    _emit(
        {
            "n": tree.n,
            "min_colors": min_colors(tree),
            "count": len(parts),
            "partitions": [list(p) for p in parts],
        }
    )
    return EXIT_OK


def _cmd_optimize(args) -> int:
    tree = _load_tree(args)
    objective = _parse_objective(args.objective)
    colors = _parse_color_budget(args.colors)
    if args.greedy:
        if colors == "chi":
            colors = min_colors(tree)
        coloring, partition = greedy_balance(tree, colors)
    else:
        coloring, partition = optimize(tree, objective, colors, _budget(args))
    _render_outputs(args, tree, coloring.colors)
    _emit(
        {
            "objective": args.objective,
            "partition": list(partition),
            "value": objective_value(partition, objective),
            "colors": list(coloring.colors),
            "exact": not args.greedy,
        }
    )
    return EXIT_OK


def _cmd_tnsc(args) -> int:
    tree_class = CLASS_ALIASES[args.tree_class]
    report = experiments.find_tnsc(tree_class, args.nmax, _budget(args))
    _emit_lines(report.jsonl())
    if args.figures:
        paths = render.save_census_figures(args.figures, report)
        print(f"wrote {len(paths)} figure(s) under {args.figures}", file=sys.stderr)
    if not report.complete:
        print(
            f"{len(report.unresolved)} (tree, partition) pair(s) exceeded the budget",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_conjecture(args) -> int:
    report = experiments.test_perfect_conjecture(args.hmax, _budget(args))
    _emit(report.to_json())
    if args.figures:
        path = render.save_conjecture_figure(args.figures, report)
        print(f"wrote {path}", file=sys.stderr)
    if not report.complete:
        return EXIT_BUDGET
    if report.counterexamples:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_catalan(args) -> int:
    census = experiments.catalan_census(args.nmax)
    _emit(census)
    if args.figures:
        path = render.save_catalan_figure(args.figures, census)
        print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK if census["all_match"] else EXIT_NEGATIVE


def _add_tree_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--tree", help="tree text, e.g. '((()())())'")
    group.add_argument("--file", help="path to a file holding tree text")


def _add_render_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dot", metavar="PATH", help="write a Graphviz DOT file")
    parser.add_argument("--figure", metavar="PATH", help="render a matplotlib figure")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecolor",
        description="Ancestor-distinct coloring of rooted trees",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse tree text and report structure")
    _add_tree_source(p)
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("profile", help="node counts by height and by depth")
    _add_tree_source(p)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("color", help="construct a canonical coloring")
    _add_tree_source(p)
    p.add_argument("--canonical", choices=("depth", "height"), required=True)
    _add_render_flags(p)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="check a coloring against the rule")
    _add_tree_source(p)
    p.add_argument("--coloring", help="comma-separated colors, preorder")
    p.add_argument("--coloring-file", help="JSON array of colors, preorder")
    _add_render_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("check", help="necessary conditions on a partition")
    _add_tree_source(p)
    p.add_argument("--partition", required=True, help="comma-separated class sizes")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="decide colorability of a partition exactly")
    _add_tree_source(p)
    p.add_argument("--partition", required=True, help="comma-separated class sizes")
    p.add_argument("--budget", type=int, help="node-expansion cap")
    _add_render_flags(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("partitions", help="enumerate all colorable partitions")
    _add_tree_source(p)
    p.add_argument("--colors", help="'chi' or an integer class cap")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("optimize", help="best-balanced coloring for an objective")
    _add_tree_source(p)
    p.add_argument(
        "--objective",
        default="max",
        help="max | moment:P | entropy | cost:FILE (all minimized)",
    )
    p.add_argument("--colors", default="chi", help="'chi' or an integer class cap")
    p.add_argument("--greedy", action="store_true", help="heuristic instead of exact")
    p.add_argument("--budget", type=int)
    _add_render_flags(p)
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("tnsc", help="census of necessary-condition gaps")
    p.add_argument("--class", dest="tree_class", choices=sorted(CLASS_ALIASES), required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--figures", metavar="DIR", help="render figures alongside the report")
    p.set_defaults(func=_cmd_tnsc)

    p = sub.add_parser("conjecture", help="sufficiency check on perfect binary trees")
    p.add_argument("--hmax", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--figures", metavar="DIR")
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("catalan", help="Catalan cross-count of tree enumerations")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--figures", metavar="DIR")
    p.set_defaults(func=_cmd_catalan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TreeParseError as exc:
        print(json.dumps({"error": str(exc), "offset": exc.offset}))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _UsageError as exc:
        return _fail_usage(str(exc))
    except ValueError as exc:
        return _fail_usage(str(exc))
    except BudgetExceededError as exc:
        print(json.dumps({"error": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
