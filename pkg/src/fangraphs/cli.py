"""Command-line entry point: ``fangraphs {build,invariants,verify,decompose,betti}``.

Exit codes: 0 success or all match, 1 usage or validation error, 2 mismatch,
3 oracle capacity exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import formulas
from .algebra import edge_ideal
from .betti import CapacityError, betti_table_hochster, betti_table_taylor, oracle_invariants
from .fans import CompositeSpec, FanGraphSpec, FanSpecError, compose, realize
from .graph import GraphError, SimpleGraph
from .harness import (
    FAMILIES,
    GeneratorConfig,
    campaign_document,
    decomposition_report,
    Instance,
    formula_report,
    run_campaign,
)
from .io import dumps, graph_to_dict, load_input, write_json
from .report import InvariantReport

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_CAPACITY = 0, 1, 2, 3


def _emit(doc, out: Optional[str]) -> None:
    if out:
        write_json(out, doc)
    else:
        sys.stdout.write(dumps(doc))


def _graph_of(obj) -> SimpleGraph:
    if isinstance(obj, SimpleGraph):
        return obj
    if isinstance(obj, FanGraphSpec):
        return realize(obj)[0]
    return compose(obj).graph


def cmd_build(args) -> int:
    obj = load_input(args.spec)
    if isinstance(obj, FanGraphSpec):
        g, labels = realize(obj)
        doc = graph_to_dict(g)
        doc["labels"] = [
            {"block": i, "position": j, "local": k, "label": x} for (i, j, k), x in sorted(labels.items())
        ]
    elif isinstance(obj, CompositeSpec):
        comp = compose(obj)
        doc = graph_to_dict(comp.graph)
        doc["labels"] = {
            "left": [[a, b] for a, b in sorted(comp.left_labels.items())],
            "right": [[a, b] for a, b in sorted(comp.right_labels.items())],
            "joined": comp.joined,
        }
    else:
        raise FanSpecError("build expects a fan spec or a composite spec")
    _emit(doc, args.out)
    return EXIT_OK


def _instance_for(obj) -> Instance:
    if isinstance(obj, FanGraphSpec):
        return Instance("input", "fans", obj)
    return Instance("input", obj.op, obj)


def _format_report(name: str, rep: dict) -> str:
    cells = "  ".join(f"{k}={rep.get(k)}" for k in ("dim", "depth", "reg") if rep.get(k) is not None)
    return f"{name:>8}: {cells}"


def cmd_invariants(args) -> int:
    obj = load_input(args.input)
    doc: dict = {}
    status = EXIT_OK
    if args.method in ("formula", "both"):
        if isinstance(obj, SimpleGraph):
            raise FanSpecError("closed-form formulas need a fan or composite spec, not a raw graph")
        rep, failed = formula_report(_instance_for(obj))
        doc["formula"] = rep.to_dict() if rep else None
        if failed:
            doc["failed_hypothesis"] = failed
    if args.method in ("oracle", "both"):
        doc["oracle"] = oracle_invariants(edge_ideal(_graph_of(obj)), args.field).to_dict()
    if args.method == "both":
        f, o = doc["formula"], doc["oracle"]
        diff = []
        if f:
            diff = InvariantReport(f["dim"], f["depth"], f["reg"], "formula").disagreements(
                InvariantReport(o["dim"], o["depth"], o["reg"], "oracle")
            )
        doc["verdict"] = "mismatch" if diff else ("formula-inapplicable" if "failed_hypothesis" in doc else "match")
        if diff:
            status = EXIT_MISMATCH
    if args.format == "table":
        lines = [_format_report(k, doc[k]) for k in ("formula", "oracle") if doc.get(k)]
        if "verdict" in doc:
            lines.append(f" verdict: {doc['verdict']}")
        if "failed_hypothesis" in doc:
            lines.append(f"    note: {doc['failed_hypothesis']}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        _emit(doc, args.out)
    return status


def cmd_verify(args) -> int:
    config = GeneratorConfig(args.family, args.max_vertices, args.samples, args.seed)
    records, summary = run_campaign(config, args.field, args.jobs)
    doc = campaign_document(records, summary, args.timings)
    if args.out:
        write_json(args.out, doc)
    if args.format == "table" or args.out:
        counts = summary["verdicts"]
        print(f"{config.family} (max {config.max_vertices} vertices, field {args.field}): {summary['total']} instances")
        for verdict, count in counts.items():
            print(f"  {verdict:>22}: {count}")
        for rec in records:
            if rec.verdict == "mismatch":
                print(f"  MISMATCH {rec.instance_id} on {','.join(rec.mismatched)}: {rec.instance}")
    else:
        sys.stdout.write(dumps(doc))
    return EXIT_MISMATCH if summary["verdicts"]["mismatch"] else EXIT_OK


def cmd_decompose(args) -> int:
    obj = load_input(args.graph)
    g = _graph_of(obj)
    if args.vertex not in g:
        raise GraphError(f"unknown vertex {args.vertex}")
    rep = decomposition_report(g, args.vertex, args.field)
    if args.format == "table":
        for key in ("J", "K", "J_plus_K", "J_cap_K"):
            print(f"{key:>8} = {rep[key]}")
        for name, ok in rep["contracts"].items():
            print(f"{name:>14}: {'pass' if ok else 'FAIL'}")
    else:
        _emit(rep, args.out)
    return EXIT_OK if all(rep["contracts"].values()) else EXIT_MISMATCH


def cmd_betti(args) -> int:
    ideal = edge_ideal(_graph_of(load_input(args.input)))
    fn = betti_table_taylor if args.route == "taylor" else betti_table_hochster
    table = fn(ideal, args.field)
    if args.format == "table":
        print(table.format())
        print(f"pd={table.pd} depth={table.depth} reg={table.reg}")
    else:
        _emit(table.to_dict(), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fangraphs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="json"):
        p.add_argument("--out", help="write JSON output to FILE instead of stdout")
        p.add_argument("--format", choices=("json", "table"), default=fmt_default)

    def field_flag(p):
        p.add_argument("--field", choices=("f2", "q"), default="f2", help="coefficient field for the oracle")

    p = sub.add_parser("build", help="realize a fan or composite spec as a graph file")
    p.add_argument("spec")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("invariants", help="dim/depth/reg by formula, oracle, or both")
    p.add_argument("input")
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="both")
    field_flag(p)
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="run a formula-versus-oracle campaign")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--max-vertices", type=int, default=11)
    p.add_argument("--samples", type=int, default=150)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--timings", action="store_true", help="include per-phase timings in records")
    field_flag(p)
    common(p, "table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="check the vertex-splitting identities at one vertex")
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, required=True)
    field_flag(p)
    common(p, "table")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("betti", help="graded Betti table of the edge-ideal quotient")
    p.add_argument("input")
    p.add_argument("--route", choices=("hochster", "taylor"), default="hochster")
    field_flag(p)
    common(p, "table")
    p.set_defaults(func=cmd_betti)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (FanSpecError, GraphError, formulas.HypothesisError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
