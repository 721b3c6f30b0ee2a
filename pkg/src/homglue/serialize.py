"""JSON encoding and decoding for every document kind the CLI handles.

Formats:
  Graph               {"n": int, "edges": [[u, v], ...]}            (u < v, sorted)
  MarkovTree          {"ground_size": k, "bags": [[...], ...], "tree": [[i, j], ...]}
  TreeDecomposition   {"host": Graph, "markov": MarkovTree}
  StrongDecomposition {"level": k, "host": Graph,
                       "payload": {"base": MarkovTree}
                                | {"decomp": TreeDecomposition,
                                   "children": [StrongDecomposition, ...]}}
  SparseDistribution  {"index_set": [...], "target_size": n,
                       "mass": [{"key": [...], "num": str, "den": str}, ...]}
All round trips are bit-exact.
"""

from fractions import Fraction

from .dists import SparseDistribution
from .graphs import Graph
from .markov import MarkovTree, TreeDecomposition
from .strong import StrongDecomposition


def graph_to_json(g):
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(doc):
    return Graph(doc["n"], [tuple(e) for e in doc["edges"]])


def markov_to_json(m):
    return {
        "ground_size": m.ground_size,
        "bags": [list(b) for b in m.bags],
        "tree": [list(e) for e in m.tree],
    }


def markov_from_json(doc):
    return MarkovTree(
        doc["ground_size"],
        [tuple(b) for b in doc["bags"]],
        [tuple(e) for e in doc["tree"]],
    )


def tree_decomposition_to_json(d):
    return {"host": graph_to_json(d.host), "markov": markov_to_json(d.markov)}


def tree_decomposition_from_json(doc):
    return TreeDecomposition(
        graph_from_json(doc["host"]), markov_from_json(doc["markov"])
    )


def strong_to_json(sd):
    out = {"level": sd.level, "host": graph_to_json(sd.host)}
    if sd.level == 0:
        out["payload"] = {"base": markov_to_json(sd.base)}
    else:
        out["payload"] = {
            "decomp": tree_decomposition_to_json(sd.decomp),
            "children": [strong_to_json(c) for c in sd.children],
        }
    return out


def strong_from_json(doc):
    host = graph_from_json(doc["host"])
    payload = doc["payload"]
    if "base" in payload:
        return StrongDecomposition(doc["level"], host, base=markov_from_json(payload["base"]))
    return StrongDecomposition(
        doc["level"],
        host,
        decomp=tree_decomposition_from_json(payload["decomp"]),
        children=tuple(strong_from_json(c) for c in payload["children"]),
    )


def distribution_to_json(p):
    return {
        "index_set": list(p.index_set),
        "target_size": p.target_size,
        "mass": [
            {"key": list(k), "num": str(q.numerator), "den": str(q.denominator)}
            for k, q in sorted(p.mass.items())
        ],
    }


def distribution_from_json(doc):
    mass = {
        tuple(e["key"]): Fraction(int(e["num"]), int(e["den"])) for e in doc["mass"]
    }
    return SparseDistribution(doc["index_set"], doc["target_size"], mass)


def report_to_json(report):
    return {"ok": report.ok, "violations": report.violations}


def bound_report_to_json(r):
    return {
        "entropy_bits": "%.12f" % r.entropy_bits,
        "rhs_bits": "%.12f" % r.rhs_bits,
        "log_hom_bits": "%.12f" % r.log_hom_bits,
        "degree_ok": r.degree_ok,
        "sidorenko_gap": {
            "num": str(r.sidorenko_gap.numerator),
            "den": str(r.sidorenko_gap.denominator),
        },
    }


def detect_kind(doc):
    """Identify a document by its keys: graph, markov, tree-decomposition,
    strong-decomposition, or distribution."""
    if not isinstance(doc, dict):
        raise ValueError("document is not a JSON object")
    if "payload" in doc:
        return "strong-decomposition"
    if "host" in doc and "markov" in doc:
        return "tree-decomposition"
    if "ground_size" in doc:
        return "markov"
    if "index_set" in doc:
        return "distribution"
    if "n" in doc and "edges" in doc:
        return "graph"
    raise ValueError("unrecognized document kind")


LOADERS = {
    "graph": graph_from_json,
    "markov": markov_from_json,
    "tree-decomposition": tree_decomposition_from_json,
    "strong-decomposition": strong_from_json,
    "distribution": distribution_from_json,
}
