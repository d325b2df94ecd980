"""Command-line entry point: construct, analyze, verify.

Exit codes are a stable contract for CI: 0 success, 1 failed check,
2 invalid input, 3 resource cap exceeded. Every flag has an environment
override with the LATPLAN_ prefix (e.g. LATPLAN_MAX_ORDER).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .checks import (
    CorpusSpec,
    DEFAULT_MAX_ORDER,
    GroupAnalysis,
    corpus_from_file,
    run_corpus,
)
from .classify import InfiniteFamilySpec, parse_any_spec, truncate_infinite_family
from .errors import (
    GroupConstructionError,
    InvalidParameters,
    LatplanError,
    OrderCapExceeded,
)
from .families import construct_family
from .graphs import SimpleGraph, to_dot
from .groups import (
    DEFAULT_CONSTRUCTION_CAP,
    FiniteGroup,
    from_cayley_table,
    from_permutations,
    group_from_json,
    group_to_json,
    parse_cayley_text,
    parse_permutations_text,
)
from .planarity import embedding_to_json, witness_to_json

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_CAP_EXCEEDED = 3


def _env_default(name: str, fallback):
    raw = os.environ.get(f"LATPLAN_{name}")
    if raw is None:
        return fallback
    try:
        return type(fallback)(raw) if fallback is not None else raw
    except (TypeError, ValueError):
        return fallback


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latplan",
        description="Finite groups, subgroup lattices, and planarity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a group and write its JSON")
    c.add_argument("--family", help="family spec, e.g. qd16 or modular:p=2,m=4")
    c.add_argument("--cyclic", type=int, help="cyclic group of this order")
    c.add_argument("--table", help="Cayley-table text file")
    c.add_argument("--perms", help="permutation generator file")
    c.add_argument("--out", help="output path (default: stdout)")
    c.add_argument(
        "--max-order",
        type=int,
        default=_env_default("MAX_ORDER", DEFAULT_CONSTRUCTION_CAP),
        help="construction order cap",
    )

    a = sub.add_parser("analyze", help="lattice, planarity, and family analysis")
    a.add_argument("group", help="group JSON file produced by construct")
    a.add_argument("--dot", help="write the subgroup graph in DOT format here")
    a.add_argument(
        "--format",
        choices=("json", "text"),
        default=_env_default("FORMAT", "json"),
    )
    a.add_argument(
        "--max-order",
        type=int,
        default=_env_default("MAX_ORDER", DEFAULT_MAX_ORDER),
        help="lattice order cap",
    )

    v = sub.add_parser("verify", help="run the theorem checks over a corpus")
    v.add_argument(
        "--corpus",
        default=_env_default("CORPUS", "default"),
        help="default | empty | path to a corpus file",
    )
    v.add_argument("--report", help="write the JSON report here")
    v.add_argument(
        "--format",
        choices=("json", "text"),
        default=_env_default("FORMAT", "text"),
    )
    v.add_argument(
        "--max-order",
        type=int,
        default=_env_default("MAX_ORDER", DEFAULT_MAX_ORDER),
        help="cap for corpus family enumeration",
    )
    return parser


def _construct_group(args) -> FiniteGroup:
    chosen = [x for x in (args.family, args.cyclic, args.table, args.perms) if x]
    if len(chosen) != 1:
        raise InvalidParameters(
            "exactly one of --family/--cyclic/--table/--perms is required"
        )
    cap = args.max_order
    if args.cyclic is not None:
        return construct_family(parse_any_spec(f"cyclic:{args.cyclic}"), order_cap=cap)
    if args.family:
        spec = parse_any_spec(args.family)
        if isinstance(spec, InfiniteFamilySpec):
            result = truncate_infinite_family(spec, order_cap=cap)
            return result
        return construct_family(spec, order_cap=cap)
    if args.table:
        with open(args.table, "r", encoding="utf-8") as fh:
            return from_cayley_table(parse_cayley_text(fh.read()), order_cap=cap)
    with open(args.perms, "r", encoding="utf-8") as fh:
        degree, gens = parse_permutations_text(fh.read())
    return from_permutations(degree, gens, order_cap=cap)


def cmd_construct(args) -> int:
    result = _construct_group(args)
    if isinstance(result, SimpleGraph):
        payload = {
            "kind": "graph",
            "vertex_count": result.vertex_count,
            "edges": sorted(list(e) for e in result.edges),
            "labels": list(result.labels) if result.labels else None,
        }
        summary = f"graph with {result.vertex_count} vertices"
    else:
        payload = group_to_json(result)
        preview = ", ".join(result.labels[:6])
        if result.order > 6:
            preview += ", ..."
        summary = f"group of order {result.order}: {preview}"
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_analyze(args) -> int:
    with open(args.group, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    group = group_from_json(data, order_cap=max(args.max_order, DEFAULT_CONSTRUCTION_CAP))
    analysis = GroupAnalysis(args.group, group, args.max_order)
    payload = {
        "order": group.order,
        "subgroup_count": len(analysis.lattice.subgroups),
        "planar": analysis.planar.planar,
        "outerplanar": analysis.outerplanar.planar,
        "hasse_planar": analysis.hasse.planar,
        "family": analysis.tag.family,
        "parameters": dict(analysis.tag.parameters),
    }
    if analysis.planar.witness is not None:
        payload["witness"] = witness_to_json(analysis.planar.witness)
    else:
        payload["embedding"] = embedding_to_json(analysis.planar.embedding)
    if args.dot:
        from .lattice import subgroup_graph

        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(subgroup_graph(analysis.lattice)))
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key in (
            "order",
            "subgroup_count",
            "planar",
            "outerplanar",
            "hasse_planar",
            "family",
        ):
            print(f"{key}: {payload[key]}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.corpus in ("default", "empty"):
        spec = CorpusSpec() if args.corpus == "default" else "empty"
        if args.corpus == "default" and args.max_order != DEFAULT_MAX_ORDER:
            spec = CorpusSpec(max_order=args.max_order)
        report = run_corpus(spec)
    else:
        report = run_corpus(corpus_from_file(args.corpus))
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=2)
            fh.write("\n")
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.render_text(), end="")
    return EXIT_OK if report.summary["failed"] == 0 else EXIT_CHECK_FAILED


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "construct": cmd_construct,
        "analyze": cmd_analyze,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except OrderCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except (InvalidParameters, GroupConstructionError) as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (OSError, json.JSONDecodeError, LatplanError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
