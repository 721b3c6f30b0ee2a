"""Distributions on homomorphism sets built from strong decompositions, and
the desk-scale verification suite around Sidorenko's property: degree
condition, forest homomorphism bound, entropy chain, and the brute-force
density gap.
"""

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .dists import (
    SparseDistribution,
    check_marginal_consistency,
    entropy,
    glue_markov_tree,
    marginal,
)
from .graphs import hom_count, is_forest, is_homomorphism, is_tree, max_degree, vertex_set
from .strong import minimum_subdecomposition, strong_isomorphism


@dataclass(frozen=True)
class AssociatedDistribution:
    """Distribution on Hom(host(sd), target) built by recursive gluing."""

    sd: object
    target: object
    dist: SparseDistribution


@dataclass
class BoundReport:
    entropy_bits: float
    rhs_bits: float
    log_hom_bits: float
    degree_ok: bool
    sidorenko_gap: Fraction


def brw_distribution(t, g):
    """Tree-indexed branching random walk distribution on Hom(t, g).

    The lexicographically smallest edge of t lands on a uniformly random
    ordered edge of g; every remaining vertex, attached in BFS order, steps
    to a uniformly random neighbor of its parent's image. Every edge of t
    then has the uniform ordered-edge marginal, which is what makes these
    distributions gluable.
    """
    if not is_tree(t) or t.num_edges() == 0:
        raise ValueError("source must be a tree with at least one edge")
    if g.num_edges() == 0:
        raise ValueError("target has no edges")

    r0, r1 = t.edges[0]
    order = []
    parent = {}
    seen = {r0, r1}
    queue = deque([r0, r1])
    while queue:
        v = queue.popleft()
        for w in t.neighbors(v):
            if w not in seen:
                seen.add(w)
                parent[w] = v
                order.append(w)
                queue.append(w)

    root_p = Fraction(1, 2 * g.num_edges())
    mass = {}
    img = [-1] * t.n

    def attach(i, prob):
        if i == len(order):
            mass[tuple(img)] = prob
            return
        w = order[i]
        pv = img[parent[w]]
        step = Fraction(1, g.degree(pv))
        for z in g.neighbors(pv):
            img[w] = z
            attach(i + 1, prob * step)
        img[w] = -1

    for a, b in g.edges:
        for x, y in ((a, b), (b, a)):
            img[r0], img[r1] = x, y
            attach(0, root_p)
    return SparseDistribution(range(t.n), g.n, mass)


def associated_distribution(sd, g, _entropy_witness=None):
    """The level-k distribution on Hom(host(sd), g).

    Level 0 is the branching random walk; level k glues the per-bag
    level-(k-1) distributions along the decomposition's Markov tree.
    Marginal agreement across every tree edge is asserted exactly before
    gluing; a failure means the decomposition (or this code) is broken.

    _entropy_witness, if a list, collects (lhs, rhs) pairs of the entropy
    identity at each gluing step for test instrumentation.
    """
    if g.num_edges() == 0:
        raise ValueError("target has no edges")
    if sd.level == 0:
        return AssociatedDistribution(sd, g, brw_distribution(sd.host, g))

    m = sd.decomp.markov
    bag_dists = []
    for i, bag in enumerate(m.bags):
        child = associated_distribution(sd.children[i], g, _entropy_witness)
        # child lives on 0..|bag|-1; lift its keys to the bag's vertices
        bag_dists.append(SparseDistribution(bag, g.n, _relabel_keys(child.dist, bag)))
    for entry in check_marginal_consistency(m, bag_dists):
        assert entry["ok"], (
            "marginal agreement failed on tree edge %s: %s"
            % (entry["edge"], entry.get("witness"))
        )
    joint = glue_markov_tree(m, bag_dists)
    if isinstance(_entropy_witness, list):
        lhs = entropy(joint)
        rhs = sum(entropy(d) for d in bag_dists)
        for a, b in m.tree:
            shared = vertex_set(set(m.bags[a]) & set(m.bags[b]))
            rhs -= entropy(marginal(bag_dists[a], shared))
        _entropy_witness.append((lhs, rhs))
    for key in joint.mass:
        assert is_homomorphism(sd.host, g, key), "support atom is not a homomorphism"
    return AssociatedDistribution(sd, g, joint)


def _relabel_keys(dist, new_index_set):
    # index sets are both sorted, so the positional identification is direct
    if len(dist.index_set) != len(new_index_set):
        raise ValueError("index set size mismatch")
    return dict(dist.mass)


def projection_consistency_check(sd, g, u):
    """Compare the marginal of the full associated distribution on the
    minimum sub-decomposition containing u with that sub-decomposition's own
    associated distribution (through the recorded embedding).

    Returns {"ok": bool, "u": ..., "embedding": ...} plus a witness on
    failure.
    """
    u = vertex_set(u, sd.host.n)
    msd = minimum_subdecomposition(sd, u)
    full = associated_distribution(sd, g).dist
    sub = associated_distribution(msd.decomposition, g).dist
    projected = marginal(full, msd.embedding)
    # transport sub onto the embedded vertex names: embedding is monotone,
    # so keys line up positionally
    transported = SparseDistribution(msd.embedding, g.n, dict(sub.mass))
    result = {"ok": projected == transported, "u": list(u), "embedding": list(msd.embedding)}
    if not result["ok"]:
        for key in sorted(set(projected.mass) | set(transported.mass)):
            if projected.mass.get(key) != transported.mass.get(key):
                result["witness"] = {
                    "key": list(key),
                    "projected": str(projected.mass.get(key, 0)),
                    "sub": str(transported.mass.get(key, 0)),
                }
                break
    return result


def isomorphism_transport_check(sd1, sd2, iso, g):
    """Verify that the associated distribution of sd2 is the pullback of
    sd1's under the strong isomorphism iso (vertex_map: sd1 -> sd2)."""
    phi = iso.vertex_map
    d1 = associated_distribution(sd1, g).dist
    d2 = associated_distribution(sd2, g).dist
    transported = {}
    for key, p in d1.mass.items():
        # atom on host1 becomes the atom h2 with h2[phi[v]] = h1[v]
        key2 = [None] * len(key)
        for v, x in enumerate(key):
            key2[phi[v]] = x
        transported[tuple(key2)] = p
    result = {"ok": transported == d2.mass}
    if not result["ok"]:
        for key in sorted(set(transported) | set(d2.mass)):
            if transported.get(key) != d2.mass.get(key):
                result["witness"] = {
                    "key": list(key),
                    "transported": str(transported.get(key, 0)),
                    "actual": str(d2.mass.get(key, 0)),
                }
                break
    return result


def degree_condition(g):
    """max_degree(g) <= 4|E(g)|/|V(g)|, evaluated in exact integers."""
    if g.n == 0:
        return True
    return max_degree(g) * g.n <= 4 * g.num_edges()


def forest_hom_bound_check(f, g):
    """Check hom(f,g) <= 2^e(f) * n^v(f) * (2e(g)/n^2)^e(f) exactly.

    Requires f to be a forest and g to satisfy the degree condition.
    Returns {"ok", "lhs", "rhs"} with exact rationals.
    """
    if not is_forest(f):
        raise ValueError("source graph is not a forest")
    if not degree_condition(g):
        raise ValueError("target fails the degree condition")
    lhs = Fraction(hom_count(f, g))
    ef = f.num_edges()
    rhs = Fraction(2) ** ef * Fraction(g.n) ** f.n * Fraction(
        2 * g.num_edges(), g.n * g.n
    ) ** ef
    return {"ok": lhs <= rhs, "lhs": lhs, "rhs": rhs}


def sidorenko_check(h, g, cap=None):
    """Exact Sidorenko gap hom(h,g)/n^v(h) - (2e(g)/n^2)^e(h)."""
    kwargs = {} if cap is None else {"cap": cap}
    count = hom_count(h, g, **kwargs)
    density = Fraction(count, g.n ** h.n)
    edge_density = Fraction(2 * g.num_edges(), g.n * g.n)
    return density - edge_density ** h.num_edges()


def entropy_bound_report(sd, g):
    """Entropy of the associated distribution against the support bound and
    the constant-free right-hand side e(H) log2(2e(G)/n^2) + v(H) log2 n.

    The comparison with the right-hand side is informational only (the
    theory guarantees it up to an unspecified additive constant); the
    support bound H(Y) <= log2 hom(H, G) is asserted.
    """
    if not degree_condition(g):
        raise ValueError("target fails the degree condition")
    ad = associated_distribution(sd, g)
    h_bits = entropy(ad.dist)
    n, e_g = g.n, g.num_edges()
    host = sd.host
    rhs = host.num_edges() * math.log2(2 * e_g / (n * n)) + host.n * math.log2(n)
    log_hom = math.log2(hom_count(host, g))
    assert h_bits <= log_hom + 1e-9, "entropy exceeds the support bound"
    return BoundReport(
        entropy_bits=h_bits,
        rhs_bits=rhs,
        log_hom_bits=log_hom,
        degree_ok=True,
        sidorenko_gap=sidorenko_check(host, g),
    )
