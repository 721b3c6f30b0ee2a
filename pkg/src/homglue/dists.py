"""Exact finite distributions over vertex assignments, stored support-only
with Fraction masses, plus the gluing operations: pairwise conditional
independent coupling and Markov-tree gluing with its entropy identity.

Probabilities stay exact rationals throughout; floating point appears only
when entropy (in bits) is computed.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import vertex_set


class MarginalMismatch(ValueError):
    """Two distributions disagree on a shared marginal."""

    def __init__(self, message, witness=None, edge=None):
        super().__init__(message)
        self.witness = witness
        self.edge = edge


@dataclass(frozen=True)
class SparseDistribution:
    """Probability mass function over assignments index_set -> 0..target_size-1.

    Keys are value tuples aligned with the sorted index_set; only strictly
    positive atoms are stored, and the masses must sum to exactly 1.
    """

    index_set: tuple
    target_size: int
    mass: dict

    def __init__(self, index_set, target_size, mass):
        index_set = vertex_set(index_set)
        if target_size < 0:
            raise ValueError("target_size must be nonnegative")
        norm = {}
        total = Fraction(0)
        for key, p in mass.items():
            key = tuple(key)
            if len(key) != len(index_set):
                raise ValueError("key %s has wrong arity" % (key,))
            if any(not (0 <= x < target_size) for x in key):
                raise ValueError("key %s has out-of-range value" % (key,))
            p = Fraction(p)
            if p <= 0:
                raise ValueError("mass at %s must be strictly positive" % (key,))
            if key in norm:
                raise ValueError("duplicate key %s" % (key,))
            norm[key] = p
            total += p
        if total != 1:
            raise ValueError("total mass is %s, not 1" % total)
        object.__setattr__(self, "index_set", index_set)
        object.__setattr__(self, "target_size", target_size)
        object.__setattr__(self, "mass", norm)

    def support_size(self):
        return len(self.mass)

    def __eq__(self, other):
        return (
            isinstance(other, SparseDistribution)
            and self.index_set == other.index_set
            and self.target_size == other.target_size
            and self.mass == other.mass
        )

    def __hash__(self):
        return hash((self.index_set, self.target_size, frozenset(self.mass.items())))


def point_mass(index_set, target_size, key):
    return SparseDistribution(index_set, target_size, {tuple(key): Fraction(1)})


def uniform(index_set, target_size, keys):
    keys = list(keys)
    p = Fraction(1, len(keys))
    return SparseDistribution(index_set, target_size, {tuple(k): p for k in keys})


def _projector(index_set, s):
    positions = [index_set.index(v) for v in s]
    return lambda key: tuple(key[i] for i in positions)


def marginal(p, s):
    """Exact marginal of p onto the index subset s."""
    s = vertex_set(s)
    if not set(s) <= set(p.index_set):
        raise ValueError("%s is not a subset of the index set" % (s,))
    proj = _projector(p.index_set, s)
    out = {}
    for key, q in p.mass.items():
        k = proj(key)
        out[k] = out.get(k, Fraction(0)) + q
    return SparseDistribution(s, p.target_size, out)


def entropy(p):
    """Shannon entropy in bits, summed in sorted-key order."""
    return -sum(
        float(q) * math.log2(float(q)) for _, q in sorted(p.mass.items())
    )


def glue_pair(p12, p23):
    """Conditional independent coupling of two distributions along their
    shared indices.

    The shared marginals must agree exactly; the result q on the union
    index set satisfies q(y) * m(y_shared) = p12(y_12) * p23(y_23) on every
    atom and reproduces both inputs as marginals. An empty shared set
    yields the product distribution.
    """
    if p12.target_size != p23.target_size:
        raise ValueError("target sizes differ")
    shared = vertex_set(set(p12.index_set) & set(p23.index_set))
    m12 = marginal(p12, shared)
    m23 = marginal(p23, shared)
    if m12 != m23:
        witness = _first_difference(m12, m23)
        raise MarginalMismatch(
            "shared marginals differ at %s" % (witness,), witness=witness
        )
    union = vertex_set(set(p12.index_set) | set(p23.index_set))
    proj12 = _projector(p12.index_set, shared)
    proj23 = _projector(p23.index_set, shared)

    by_shared = {}
    for key23, q23 in p23.mass.items():
        by_shared.setdefault(proj23(key23), []).append((key23, q23))

    pos12 = {v: i for i, v in enumerate(p12.index_set)}
    pos23 = {v: i for i, v in enumerate(p23.index_set)}
    out = {}
    for key12, q12 in p12.mass.items():
        sk = proj12(key12)
        denom = m12.mass[sk]
        for key23, q23 in by_shared.get(sk, ()):
            key = tuple(
                key12[pos12[v]] if v in pos12 else key23[pos23[v]] for v in union
            )
            out[key] = q12 * q23 / denom
    return SparseDistribution(union, p12.target_size, out)


def _first_difference(m1, m2):
    for key in sorted(set(m1.mass) | set(m2.mass)):
        a = m1.mass.get(key, Fraction(0))
        b = m2.mass.get(key, Fraction(0))
        if a != b:
            return {"key": list(key), "left": str(a), "right": str(b)}
    return None


def check_marginal_consistency(m, bag_dists):
    """Per-tree-edge exact comparison of the two bag marginals on the
    intersection. Returns a list of {edge, ok, witness} entries."""
    _check_bag_dists(m, bag_dists)
    results = []
    for a, b in m.tree:
        shared = vertex_set(set(m.bags[a]) & set(m.bags[b]))
        ma = marginal(bag_dists[a], shared)
        mb = marginal(bag_dists[b], shared)
        entry = {"edge": [a, b], "ok": ma == mb}
        if not entry["ok"]:
            entry["witness"] = _first_difference(ma, mb)
        results.append(entry)
    return results


def _check_bag_dists(m, bag_dists):
    if len(bag_dists) != m.num_bags():
        raise ValueError("one distribution per bag is required")
    for i, bag in enumerate(m.bags):
        if bag_dists[i].index_set != bag:
            raise ValueError(
                "distribution %d has index set %s, bag is %s"
                % (i, bag_dists[i].index_set, bag)
            )
    sizes = {d.target_size for d in bag_dists}
    if len(sizes) > 1:
        raise ValueError("bag distributions disagree on target_size")


def glue_markov_tree(m, bag_dists):
    """Joint distribution over the ground set gluing the bag distributions
    along the Markov tree, by leaf elimination (lowest-index leaf first).

    Requires exact marginal agreement across every tree edge. The result
    reproduces every bag distribution as a marginal and satisfies the
    entropy identity H(joint) = sum_F H(bag_F) - sum_AB H(overlap_AB).
    """
    _check_bag_dists(m, bag_dists)
    for entry in check_marginal_consistency(m, bag_dists):
        if not entry["ok"]:
            raise MarginalMismatch(
                "marginal mismatch on tree edge %s" % (entry["edge"],),
                witness=entry["witness"],
                edge=tuple(entry["edge"]),
            )
    return _glue_rec(m, list(range(m.num_bags())), bag_dists)


def _glue_rec(m, alive, bag_dists):
    if len(alive) == 1:
        return bag_dists[alive[0]]
    alive_set = set(alive)
    degree = {i: 0 for i in alive}
    for a, b in m.tree:
        if a in alive_set and b in alive_set:
            degree[a] += 1
            degree[b] += 1
    leaf = min(i for i in alive if degree[i] <= 1)
    rest = [i for i in alive if i != leaf]
    joint_rest = _glue_rec(m, rest, bag_dists)
    return glue_pair(joint_rest, bag_dists[leaf])


def junction_factorization(m, bag_dists):
    """Closed-form joint: q(y) = prod_F p_F(y_F) / prod_AB m_AB(y_overlap).

    Built by joining bag supports directly, independent of the pairwise
    gluing path; agrees with glue_markov_tree atom-for-atom on valid input.
    """
    _check_bag_dists(m, bag_dists)
    for entry in check_marginal_consistency(m, bag_dists):
        if not entry["ok"]:
            raise MarginalMismatch(
                "marginal mismatch on tree edge %s" % (entry["edge"],),
                witness=entry["witness"],
                edge=tuple(entry["edge"]),
            )

    ground = vertex_set(v for bag in m.bags for v in bag)
    # join supports: partial assignments as dicts keyed on ground elements
    partials = [{}]
    for i, bag in enumerate(m.bags):
        joined = []
        for part in partials:
            for key, _ in sorted(bag_dists[i].mass.items()):
                assign = dict(zip(bag, key))
                if all(part.get(v, assign[v]) == assign[v] for v in assign):
                    merged = dict(part)
                    merged.update(assign)
                    joined.append(merged)
        partials = joined

    edge_marginals = []
    for a, b in m.tree:
        shared = vertex_set(set(m.bags[a]) & set(m.bags[b]))
        edge_marginals.append((shared, marginal(bag_dists[a], shared)))

    out = {}
    target_size = bag_dists[0].target_size
    for part in partials:
        q = Fraction(1)
        for i, bag in enumerate(m.bags):
            q *= bag_dists[i].mass[tuple(part[v] for v in bag)]
        for shared, em in edge_marginals:
            q /= em.mass[tuple(part[v] for v in shared)]
        key = tuple(part[v] for v in ground)
        out[key] = out.get(key, Fraction(0)) + q
    return SparseDistribution(ground, target_size, out)
