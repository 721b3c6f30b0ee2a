"""Command-line front end.

Subcommands: validate, assoc, glue, min-subdec, sidorenko-sweep,
entropy-report. Output is JSON on standard output; exit codes are 0 for
success, 1 for a semantic failure (validation violation, assertion, guard),
2 for unreadable or unrecognized input.
"""

import argparse
import json
import sys

from . import serialize
from .dists import MarginalMismatch, glue_markov_tree
from .markov import validate_markov_tree, validate_tree_decomposition
from .sidorenko import (
    associated_distribution,
    degree_condition,
    entropy_bound_report,
    sidorenko_check,
)
from .strong import minimum_subdecomposition, validate_strong
from .graphs import connected_graphs_up_to, hom_count

SWEEP_VERTEX_LIMIT = 6


def _load(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise _InputError("cannot read %s: %s" % (path, e))
    try:
        kind = serialize.detect_kind(doc)
        return kind, serialize.LOADERS[kind](doc)
    except (KeyError, TypeError, ValueError) as e:
        raise _InputError("cannot parse %s: %s" % (path, e))


class _InputError(Exception):
    pass


def _emit(doc, out=None):
    text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    kind, obj = _load(args.path)
    if kind == "markov":
        report = validate_markov_tree(obj)
    elif kind == "tree-decomposition":
        report = validate_tree_decomposition(obj)
    elif kind == "strong-decomposition":
        report = validate_strong(obj)
    elif kind == "graph":
        # graph construction already enforces its invariants
        from .markov import ValidationReport

        report = ValidationReport()
    else:
        raise _InputError("no validator for document kind %r" % kind)
    _emit({"kind": kind, **serialize.report_to_json(report)})
    return 0 if report.ok else 1


def cmd_assoc(args):
    kind, sd = _load(args.decomp)
    if kind != "strong-decomposition":
        raise _InputError("%s is not a strong decomposition" % args.decomp)
    gkind, g = _load(args.target)
    if gkind != "graph":
        raise _InputError("%s is not a graph" % args.target)
    if g.num_edges() == 0:
        _emit({"error": "target has no edges"})
        return 1
    report = validate_strong(sd)
    if not report.ok:
        _emit(serialize.report_to_json(report))
        return 1
    try:
        ad = associated_distribution(sd, g)
        bound = entropy_bound_report(sd, g) if degree_condition(g) else None
    except AssertionError as e:
        _emit({"error": str(e)})
        return 1
    _emit(serialize.distribution_to_json(ad.dist), out=args.out)
    summary = {"atoms": ad.dist.support_size()}
    if bound is not None:
        summary["bound_report"] = serialize.bound_report_to_json(bound)
    if args.out:
        _emit(summary)
    return 0


def cmd_glue(args):
    try:
        with open(args.instance) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise _InputError("cannot read %s: %s" % (args.instance, e))
    try:
        m = serialize.markov_from_json(doc["markov"])
        bag_dists = [serialize.distribution_from_json(d) for d in doc["bag_dists"]]
    except (KeyError, TypeError, ValueError) as e:
        raise _InputError("cannot parse %s: %s" % (args.instance, e))
    report = validate_markov_tree(m)
    if not report.ok:
        _emit(serialize.report_to_json(report))
        return 1
    try:
        joint = glue_markov_tree(m, bag_dists)
    except MarginalMismatch as e:
        _emit({"error": str(e), "edge": list(e.edge or ()), "witness": e.witness})
        return 1
    _emit(serialize.distribution_to_json(joint), out=args.out)
    return 0


def cmd_min_subdec(args):
    kind, sd = _load(args.decomp)
    if kind != "strong-decomposition":
        raise _InputError("%s is not a strong decomposition" % args.decomp)
    u = [int(x) for x in args.u.split(",") if x != ""]
    if not u:
        raise _InputError("--u must list at least one vertex")
    sub = minimum_subdecomposition(sd, u)
    _emit(
        {
            "decomposition": serialize.strong_to_json(sub.decomposition),
            "embedding": list(sub.embedding),
        },
        out=args.out,
    )
    return 0


def cmd_sidorenko_sweep(args):
    kind, sd = _load(args.decomp)
    if kind != "strong-decomposition":
        raise _InputError("%s is not a strong decomposition" % args.decomp)
    if args.max_n > SWEEP_VERTEX_LIMIT:
        _emit({"error": "max-n %d exceeds limit %d" % (args.max_n, SWEEP_VERTEX_LIMIT)})
        return 1
    host = sd.host
    rows = []
    for g in connected_graphs_up_to(args.max_n):
        if g.num_edges() == 0:
            continue
        gap = sidorenko_check(host, g)
        rows.append(
            {
                "target": serialize.graph_to_json(g),
                "hom_count": hom_count(host, g),
                "gap": {"num": str(gap.numerator), "den": str(gap.denominator)},
                "gap_nonnegative": gap >= 0,
                "degree_ok": degree_condition(g),
            }
        )
    _emit({"host": serialize.graph_to_json(host), "rows": rows}, out=args.out)
    return 0 if all(r["gap_nonnegative"] for r in rows) else 1


def cmd_entropy_report(args):
    kind, sd = _load(args.decomp)
    if kind != "strong-decomposition":
        raise _InputError("%s is not a strong decomposition" % args.decomp)
    gkind, g = _load(args.target)
    if gkind != "graph":
        raise _InputError("%s is not a graph" % args.target)
    if not degree_condition(g):
        _emit({"error": "target fails the degree condition"})
        return 1
    if g.num_edges() == 0:
        _emit({"error": "target has no edges"})
        return 1
    report = entropy_bound_report(sd, g)
    _emit(serialize.bound_report_to_json(report), out=args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="homglue",
        description="Markov-tree gluing, strong tree decompositions, and "
        "Sidorenko-style bound checks at desk scale.",
    )
    parser.add_argument("--format", choices=["json"], default="json")
    parser.add_argument("--seed", type=int, default=0, help="reserved for randomized sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a JSON document")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("assoc", help="associated distribution of a decomposition")
    p.add_argument("decomp")
    p.add_argument("target")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_assoc)

    p = sub.add_parser("glue", help="glue bag distributions along a Markov tree")
    p.add_argument("instance", help='JSON with "markov" and "bag_dists"')
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("min-subdec", help="minimum sub-decomposition containing --u")
    p.add_argument("decomp")
    p.add_argument("--u", required=True, help="comma-separated vertex list")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_min_subdec)

    p = sub.add_parser("sidorenko-sweep", help="gap table over small connected targets")
    p.add_argument("decomp")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sidorenko_sweep)

    p = sub.add_parser("entropy-report", help="entropy/bound report for one target")
    p.add_argument("decomp")
    p.add_argument("target")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_entropy_report)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    except (ValueError, MarginalMismatch) as e:
        sys.stderr.write("error: %s\n" % e)
        return 1


if __name__ == "__main__":
    sys.exit(main())
