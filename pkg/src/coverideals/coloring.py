"""Exhaustive coloring oracles for hypergraphs.

These are the combinatorial ground truth that the algebraic routines in
:mod:`coverideals.invariants` are checked against, so nothing here touches
ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .hypergraph import Hypergraph, _require_graph, adjacency, delete_vertex

#: b-fold search refuses graphs larger than this
BFOLD_MAX_VERTICES = 12
BFOLD_MAX_B = 4


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Color sets per vertex drawn from a palette ``range(palette)``.

    Ordinary colorings have one color per vertex; b-fold colorings have ``b``.
    """

    assignment: tuple[frozenset[int], ...]
    palette: int

    @classmethod
    def from_colors(cls, colors: Sequence[int], palette: int | None = None) -> "Coloring":
        palette = max(colors, default=-1) + 1 if palette is None else palette
        return cls(tuple(frozenset((c,)) for c in colors), palette)

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], palette: int) -> "Coloring":
        return cls(tuple(frozenset(s) for s in sets), palette)


def is_proper(H: Hypergraph, c: Coloring) -> bool:
    """No color is shared by all vertices of any edge, and sizes are uniform."""
    if len(c.assignment) != H.n:
        raise ColoringError(f"coloring covers {len(c.assignment)} of {H.n} vertices")
    sizes = {len(s) for s in c.assignment}
    if len(sizes) > 1 or 0 in sizes:
        return False
    if any(not 0 <= col < c.palette for s in c.assignment for col in s):
        return False
    return all(not frozenset.intersection(*(c.assignment[v] for v in e)) for e in H.edges)


def find_coloring(H: Hypergraph, d: int) -> list[int] | None:
    """A proper ``d``-coloring as a color list, or None.

    Backtracks over vertices in descending-degree order; an edge is checked
    once its last vertex (in that order) is colored. New colors are opened
    one at a time, which removes palette symmetry.
    """
    if H.n == 0:
        return []
    if d < 1:
        return None
    order = sorted(H.vertices, key=lambda v: (-H.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[tuple[int, ...]]] = [[] for _ in order]
    for e in H.edges:
        closing[max(pos[v] for v in e)].append(e)
    colors = [-1] * H.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for col in range(min(used + 1, d)):
            colors[v] = col
            if all(any(colors[u] != col for u in e) for e in closing[i]):
                if place(i + 1, max(used, col + 1)):
                    return True
        colors[v] = -1
        return False

    return list(colors) if place(0, 0) else None


def chromatic_number(H: Hypergraph) -> int:
    """Least ``d`` with a proper ``d``-coloring; 1 for edgeless input."""
    d = 1 if not H.edges else 2
    while find_coloring(H, d) is None:
        d += 1
    return d


def is_colorable(H: Hypergraph, d: int) -> bool:
    return find_coloring(H, d) is not None


def find_b_fold_coloring(G: Hypergraph, b: int, d: int) -> list[frozenset[int]] | None:
    """A b-fold coloring of the graph ``G`` with palette ``d``, or None."""
    adj = adjacency(G)
    order = sorted(G.vertices, key=lambda v: (-len(adj[v]), v))
    sets: list[frozenset[int] | None] = [None] * G.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        blocked = set()
        for u in adj[v]:
            if sets[u] is not None:
                blocked |= sets[u]
        free_old = [c for c in range(used) if c not in blocked]
        # unused colors are interchangeable: take the lowest k of them
        for k in range(min(b, d - used) + 1):
            fresh = range(used, used + k)
            for old in combinations(free_old, b - k):
                sets[v] = frozenset(old).union(fresh)
                if place(i + 1, used + k):
                    return True
        sets[v] = None
        return False

    return list(sets) if place(0, 0) else None


def b_fold_chromatic(G: Hypergraph, b: int) -> int:
    """Least palette admitting a b-fold coloring of the graph ``G``."""
    _require_graph(G)
    if b < 1:
        raise ColoringError("b must be positive")
    if G.n > BFOLD_MAX_VERTICES or b > BFOLD_MAX_B:
        raise ColoringError(
            f"b-fold search capped at n <= {BFOLD_MAX_VERTICES}, b <= {BFOLD_MAX_B}"
        )
    d = b
    while find_b_fold_coloring(G, b, d) is None:
        d += 1
    return d


def is_critically_chromatic(H: Hypergraph, d: int) -> bool:
    """chi(H) == d and deleting any vertex drops chi below d."""
    if d < 1:
        raise ColoringError("d must be positive")
    if is_colorable(H, d - 1) or not is_colorable(H, d):
        return False
    return all(is_colorable(delete_vertex(H, x), d - 1) for x in H.vertices)


def is_independent(H: Hypergraph, C: Iterable[int]) -> bool:
    C = set(C)
    return not any(C.issuperset(e) for e in H.edges)


def is_vertex_cover(H: Hypergraph, W: Iterable[int]) -> bool:
    W = set(W)
    return all(W.intersection(e) for e in H.edges)
