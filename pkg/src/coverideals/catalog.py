"""Named graphs and exhaustive enumeration of small graphs up to isomorphism."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product

from .hypergraph import Hypergraph, validate


def complete(n: int) -> Hypergraph:
    return Hypergraph(n, tuple(combinations(range(n), 2)))


def cycle(n: int) -> Hypergraph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Hypergraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Hypergraph:
    return Hypergraph(n, tuple((i, i + 1) for i in range(n - 1)))


def antihole(n: int) -> Hypergraph:
    """Complement of the n-cycle."""
    ring = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    return Hypergraph(n, tuple(e for e in combinations(range(n), 2) if e not in ring))


def six_vertex_example() -> Hypergraph:
    """Three-chromatic graph on x1..x6 whose maximal ideal first shows up at J^3.

    Edges (1-based): 12, 15, 23, 34, 45, 56, 36, 46.
    """
    edges = [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5), (5, 6), (3, 6), (4, 6)]
    return Hypergraph(6, tuple((a - 1, b - 1) for a, b in edges))


# -- enumeration -------------------------------------------------------------

def _canonical(n: int, edges: frozenset) -> tuple:
    """Lexicographically least relabelled edge list.

    Only permutations that sort vertices by (degree, sorted neighbour
    degrees) are tried; the invariant is isomorphism-stable so the minimum
    over that restricted set is still a canonical form.
    """
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    nbr_deg = [sorted(deg[w] for e in edges if v in e for w in e if w != v) for v in range(n)]
    classes = {}
    for v in range(n):
        classes.setdefault((deg[v], tuple(nbr_deg[v])), []).append(v)
    blocks = [classes[k] for k in sorted(classes)]
    best = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = [v for block in choice for v in block]
        relabel = {v: i for i, v in enumerate(order)}
        form = tuple(sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in edges))
        if best is None or form < best:
            best = form
    return best


def _connected(n: int, edges) -> bool:
    if n == 0:
        return True
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple:
    if n == 1:
        return ((),)
    forms = set()
    for base in _all_graphs(n - 1):
        for k in range(n):
            for nbrs in combinations(range(n - 1), k):
                edges = frozenset(base) | {(u, n - 1) for u in nbrs}
                forms.add(_canonical(n, edges))
    return tuple(sorted(forms))


def graphs(n: int, connected: bool = True) -> list[Hypergraph]:
    """One representative of every isomorphism class of graphs on ``n`` vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    return [Hypergraph(n, e) for e in _all_graphs(n) if not connected or _connected(n, e)]


def graphs_up_to(n_max: int, connected: bool = True, min_n: int = 1) -> list[Hypergraph]:
    return [G for n in range(min_n, n_max + 1) for G in graphs(n, connected)]


def random_hypergraph(
    rng: random.Random, n: int, max_edges: int = 6, sizes: tuple[int, ...] = (2, 3)
) -> Hypergraph:
    """A random simple hypergraph with at least one edge."""
    raw = []
    for _ in range(rng.randint(1, max_edges)):
        k = min(rng.choice(sizes), n)
        raw.append(rng.sample(range(n), k))
    return validate(raw, n)
