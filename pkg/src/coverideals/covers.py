"""Minimal vertex covers, cover ideals and edge ideals."""

from __future__ import annotations

from itertools import combinations

from .hypergraph import Hypergraph
from .monomial import MonomialIdeal

Cover = tuple[int, ...]


def _indicator(n: int, W) -> tuple[int, ...]:
    W = set(W)
    return tuple(1 if i in W else 0 for i in range(n))


def _minimal_sets(sets) -> list[Cover]:
    sets = sorted(set(sets), key=lambda c: (len(c), c))
    kept: list[frozenset] = []
    for c in sets:
        fc = frozenset(c)
        if not any(k <= fc for k in kept):
            kept.append(fc)
    return sorted(tuple(sorted(k)) for k in kept)


def minimal_vertex_covers(H: Hypergraph) -> list[Cover]:
    """Inclusion-minimal transversals of the edge set, sorted.

    Branches on the vertices of the first uncovered edge. An edgeless
    hypergraph has the single minimal cover ``()``.
    """
    edges = [frozenset(e) for e in H.edges]
    found = []

    def branch(chosen: frozenset, start: int):
        for k in range(start, len(edges)):
            if not edges[k] & chosen:
                for v in sorted(edges[k]):
                    branch(chosen | {v}, k + 1)
                return
        found.append(tuple(sorted(chosen)))

    branch(frozenset(), 0)
    return _minimal_sets(found)


def minimal_vertex_covers_bruteforce(H: Hypergraph) -> list[Cover]:
    """Reference enumeration over all ``2^n`` vertex subsets (n <= 20)."""
    if H.n > 20:
        raise ValueError("brute-force cover enumeration limited to n <= 20")
    edges = [set(e) for e in H.edges]
    covers = []
    for k in range(H.n + 1):
        for W in combinations(range(H.n), k):
            Ws = set(W)
            if all(e & Ws for e in edges):
                covers.append(W)
    return _minimal_sets(covers)


def cover_ideal(H: Hypergraph) -> MonomialIdeal:
    return MonomialIdeal(H.n, (_indicator(H.n, W) for W in minimal_vertex_covers(H)))


def edge_ideal(H: Hypergraph) -> MonomialIdeal:
    return MonomialIdeal(H.n, (_indicator(H.n, e) for e in H.edges))
