"""Simple undirected graphs on dense integer vertices, with brute-force
homomorphism enumeration and pinned isomorphism search.

Everything here is sized for desk-scale instances (a dozen vertices or so);
the enumeration routines are deterministic backtracking searches whose output
order is fixed by ascending vertex indices.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations


class SizeCapExceeded(ValueError):
    """Raised when a brute-force enumeration would exceed its candidate cap."""


# Default bound on |V(g)|^|V(h)| before enumerate_homs refuses to run.
DEFAULT_HOM_CAP = 10**8


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as a canonically sorted tuple of (min, max) pairs, so
    structurally equal graphs compare (and hash) equal.
    """

    n: int
    edges: tuple

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError("self-loop at vertex %d" % u)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%d,%d) out of range for n=%d" % (u, v, n))
            canon.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in _edge_set(self)

    def degree(self, v):
        return len(_adjacency(self)[v])

    def neighbors(self, v):
        return _adjacency(self)[v]

    def num_edges(self):
        return len(self.edges)


@lru_cache(maxsize=None)
def _edge_set(g):
    return frozenset(g.edges)


@lru_cache(maxsize=None)
def _adjacency(g):
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return tuple(tuple(sorted(a)) for a in adj)


def vertex_set(vs, n=None):
    """Normalize an iterable of vertex indices to a sorted, deduplicated tuple.

    When n is given, every index must lie in range 0..n-1.
    """
    out = tuple(sorted(set(vs)))
    if n is not None:
        for v in out:
            if not (0 <= v < n):
                raise ValueError("vertex %d out of range for n=%d" % (v, n))
    return out


def induced_subgraph(g, s):
    """Induced subgraph of g on vertex set s, relabeled to 0..|s|-1.

    Returns (subgraph, relabeling) where relabeling[i] is the vertex of g
    that became vertex i. The relabeling is monotone (s is sorted).
    """
    s = vertex_set(s, g.n)
    pos = {v: i for i, v in enumerate(s)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(s), edges), s


def induced_edge_count(g, s):
    """Number of edges of g with both endpoints in s."""
    s = set(s)
    return sum(1 for u, v in g.edges if u in s and v in s)


def is_connected(g):
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def is_forest(g):
    """True iff g is acyclic."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_tree(g):
    return g.n >= 1 and g.num_edges() == g.n - 1 and is_connected(g)


def max_degree(g):
    if g.n == 0:
        return 0
    return max(g.degree(v) for v in range(g.n))


def enumerate_homs(h, g, cap=DEFAULT_HOM_CAP):
    """All adjacency-preserving maps V(h) -> V(g), in lexicographic order.

    Backtracks over h's vertices in ascending order, pruning partial maps
    that already violate an edge. Refuses instances whose naive candidate
    space |V(g)|^|V(h)| exceeds cap.
    """
    return list(_hom_iter(h, g, cap))


def hom_count(h, g, cap=DEFAULT_HOM_CAP):
    """Number of homomorphisms h -> g (without materializing the list)."""
    return sum(1 for _ in _hom_iter(h, g, cap))


def _hom_iter(h, g, cap=DEFAULT_HOM_CAP):
    if h.n == 0:
        raise ValueError("source graph must have at least one vertex")
    if g.n ** h.n > cap:
        raise SizeCapExceeded(
            "candidate space %d^%d exceeds cap %d" % (g.n, h.n, cap)
        )
    # earlier[v] = neighbors of v in h with smaller index (already assigned)
    earlier = [[u for u in h.neighbors(v) if u < v] for v in range(h.n)]
    img = [0] * h.n

    def backtrack(v):
        if v == h.n:
            yield tuple(img)
            return
        for w in range(g.n):
            if all(g.has_edge(img[u], w) for u in earlier[v]):
                img[v] = w
                yield from backtrack(v + 1)

    yield from backtrack(0)


def is_homomorphism(h, g, mapping):
    return all(g.has_edge(mapping[u], mapping[v]) for u, v in h.edges)


def find_isomorphism_pinned(h1, h2, pin=None):
    """First graph isomorphism h1 -> h2 extending pin, or None.

    pin is a partial injective map {v1: v2}. The search is deterministic
    (lexicographic backtracking over h1's vertices ascending) and the result
    is verified edge-preserving in both directions before being returned.
    """
    for phi in isomorphisms_pinned(h1, h2, pin):
        return phi
    return None


def isomorphisms_pinned(h1, h2, pin=None):
    """Generate all isomorphisms h1 -> h2 extending pin, lexicographically."""
    pin = dict(pin or {})
    if h1.n != h2.n or h1.num_edges() != h2.num_edges():
        return
    if sorted(h1.degree(v) for v in range(h1.n)) != sorted(
        h2.degree(v) for v in range(h2.n)
    ):
        return
    if len(set(pin.values())) != len(pin):
        return
    img = [-1] * h1.n
    used = [False] * h2.n
    for v, w in pin.items():
        if not (0 <= v < h1.n and 0 <= w < h2.n):
            raise ValueError("pin out of range")
        img[v] = w
        used[w] = True

    def ok(v, w):
        if h1.degree(v) != h2.degree(w):
            return False
        for u in range(h1.n):
            if img[u] >= 0 and h1.has_edge(u, v) != h2.has_edge(img[u], w):
                return False
        return True

    # pinned vertices must themselves be consistent
    for v in pin:
        w = img[v]
        img[v] = -1
        if not ok(v, w):
            return
        img[v] = w

    order = [v for v in range(h1.n) if v not in pin]

    def backtrack(i):
        if i == len(order):
            yield tuple(img)
            return
        v = order[i]
        for w in range(h2.n):
            if not used[w] and ok(v, w):
                img[v] = w
                used[w] = True
                yield from backtrack(i + 1)
                img[v] = -1
                used[w] = False

    yield from backtrack(0)


def canonical_form(g):
    """Smallest edge tuple over all vertex relabelings; iso-invariant key.

    Only intended for tiny graphs (factorial blowup).
    """
    best = None
    for perm in permutations(range(g.n)):
        relabeled = tuple(
            sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges)
        )
        if best is None or relabeled < best:
            best = relabeled
    return (g.n, best)


def all_graphs_up_to(max_n):
    """One representative per isomorphism class of graphs on 1..max_n vertices."""
    from itertools import combinations

    reps = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        seen = set()
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            g = Graph(n, edges)
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                reps.append(g)
    return reps


def connected_graphs_up_to(max_n):
    return [g for g in all_graphs_up_to(max_n) if is_connected(g)]
