"""Shared generators and independent brute-force oracles for the tests.

Oracles here deliberately avoid the library's own algorithms: minimal
covering subtrees are found by exhaustive subset enumeration, joint
distributions by direct formula evaluation, and so on.
"""

import random
from fractions import Fraction
from itertools import combinations

from homglue.dists import SparseDistribution, marginal
from homglue.graphs import Graph, find_isomorphism_pinned
from homglue.markov import MarkovTree, TreeDecomposition, induces_subtree


def random_tree_edges(rng, k):
    """Random labelled tree on 0..k-1 (random attachment)."""
    return [(rng.randrange(i), i) for i in range(1, k)]


def random_markov_tree(rng, num_bags, ground_size):
    """Random valid Markov tree: each ground element occupies a random
    subtree of the bag tree, which guarantees running intersection."""
    tree = random_tree_edges(rng, num_bags)
    adj = {i: [] for i in range(num_bags)}
    for a, b in tree:
        adj[a].append(b)
        adj[b].append(a)
    bags = [set() for _ in range(num_bags)]
    for v in range(ground_size):
        # grow a random connected bag set for v
        start = rng.randrange(num_bags)
        fam = {start}
        frontier = list(adj[start])
        while frontier and rng.random() < 0.5:
            nxt = frontier.pop(rng.randrange(len(frontier)))
            if nxt in fam:
                continue
            fam.add(nxt)
            frontier.extend(adj[nxt])
        for i in fam:
            bags[i].add(v)
    # nonempty bags keep downstream distribution code simple; copying a tree
    # neighbor's bag preserves the connectivity of every element's family
    while any(not b for b in bags):
        for i, b in enumerate(bags):
            if not b:
                for j in adj[i]:
                    b.update(bags[j])
    return MarkovTree(ground_size, [tuple(sorted(b)) for b in bags], tree)


def random_joint(rng, ground, target_size, atoms=6):
    """Random exact distribution over assignments ground -> target."""
    atoms = min(atoms, target_size ** len(ground))
    keys = set()
    while len(keys) < atoms:
        keys.add(tuple(rng.randrange(target_size) for _ in ground))
    weights = {k: rng.randint(1, 9) for k in keys}
    total = sum(weights.values())
    return SparseDistribution(
        ground, target_size, {k: Fraction(w, total) for k, w in weights.items()}
    )


def consistent_bag_dists(rng, m, target_size, atoms=6):
    """Per-bag distributions that automatically agree on overlaps: marginals
    of one random joint distribution over the ground set."""
    ground = tuple(range(m.ground_size))
    joint = random_joint(rng, ground, target_size, atoms)
    return [marginal(joint, bag) for bag in m.bags]


def brute_force_min_cover(m, u):
    """All minimum-cardinality bag subfamilies covering u that induce a
    subtree, by exhaustive enumeration."""
    u = set(u)
    k = m.num_bags()
    for size in range(1, k + 1):
        found = []
        for fam in combinations(range(k), size):
            if not induces_subtree(m, fam):
                continue
            union = set()
            for i in fam:
                union.update(m.bags[i])
            if u <= union:
                found.append(fam)
        if found:
            return found
    return []


def brute_force_joint(m, bag_dists):
    """Direct evaluation of the junction formula over all full assignments.

    Enumerates every assignment of the ground set (no support joining), so
    it is independent of both library constructions.
    """
    from itertools import product

    ground = tuple(range(m.ground_size))
    target = bag_dists[0].target_size
    edge_marg = []
    for a, b in m.tree:
        shared = tuple(sorted(set(m.bags[a]) & set(m.bags[b])))
        edge_marg.append((shared, marginal(bag_dists[a], shared)))
    out = {}
    for key in product(range(target), repeat=len(ground)):
        q = Fraction(1)
        ok = True
        for i, bag in enumerate(m.bags):
            sub = tuple(key[v] for v in bag)
            if sub not in bag_dists[i].mass:
                ok = False
                break
            q *= bag_dists[i].mass[sub]
        if not ok:
            continue
        for shared, em in edge_marg:
            q /= em.mass[tuple(key[v] for v in shared)]
        out[key] = q
    return SparseDistribution(ground, target, out)


def small_trees(max_vertices):
    """One representative per isomorphism class of trees on 2..max_vertices
    vertices, grown by leaf addition with pairwise isomorphism dedup."""
    levels = [[Graph(2, [(0, 1)])]]
    for n in range(3, max_vertices + 1):
        reps = []
        for t in levels[-1]:
            for v in range(t.n):
                cand = Graph(n, list(t.edges) + [(v, n - 1)])
                if not any(find_isomorphism_pinned(cand, r) for r in reps):
                    reps.append(cand)
        levels.append(reps)
    return [t for level in levels for t in level]


def spanning_trees(g):
    """All spanning-tree edge sets of a small connected graph."""
    from homglue.graphs import is_tree

    n = g.n
    if n == 1:
        yield ()
        return
    for fam in combinations(g.edges, n - 1):
        if is_tree(Graph(n, fam)):
            yield fam


def random_subtree(rng, adj, num_nodes):
    start = rng.randrange(num_nodes)
    fam = {start}
    frontier = list(adj[start])
    while frontier and rng.random() < 0.6:
        nxt = frontier.pop(rng.randrange(len(frontier)))
        if nxt in fam:
            continue
        fam.add(nxt)
        frontier.extend(adj[nxt])
    return frozenset(fam)
