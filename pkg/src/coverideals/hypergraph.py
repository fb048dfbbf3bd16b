"""Finite simple hypergraphs, induced substructures and s-th expansions.

Vertices are the integers ``0..n-1``. Edges are stored as sorted tuples and
the edge list is kept sorted, so two hypergraphs with the same edge set
compare (and hash) equal regardless of how they were built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, NamedTuple, Sequence


class HypergraphError(ValueError):
    """Raised for malformed hypergraph input."""


class NotAGraphError(HypergraphError):
    """Raised when a graph-only operation gets a hypergraph with a big edge."""


Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """A finite simple hypergraph on vertices ``0..n-1``.

    Construction checks every invariant and raises :class:`HypergraphError`
    on the first violation. Use :func:`validate` to drop nested edges
    instead of rejecting them.
    """

    n: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise HypergraphError(f"vertex count must be a non-negative int, got {self.n!r}")
        canon = []
        for raw in self.edges:
            e = tuple(sorted(set(raw)))
            if len(e) != len(tuple(raw)):
                raise HypergraphError(f"edge {tuple(raw)} repeats a vertex")
            if len(e) < 2:
                raise HypergraphError(f"edge {e} has fewer than two vertices")
            if e[0] < 0 or e[-1] >= self.n:
                raise HypergraphError(f"edge {e} has a vertex outside [0, {self.n})")
            canon.append(e)
        canon = sorted(set(canon))
        sets = [frozenset(e) for e in canon]
        for i, j in combinations(range(len(sets)), 2):
            if sets[i] <= sets[j] or sets[j] <= sets[i]:
                raise HypergraphError(f"edges {canon[i]} and {canon[j]} are nested")
        object.__setattr__(self, "edges", tuple(canon))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise HypergraphError("label table length differs from vertex count")
            object.__setattr__(self, "labels", labels)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def label(self, v: int) -> str:
        """User-facing name of vertex ``v`` (1-based by default)."""
        if self.labels is not None:
            return self.labels[v]
        return str(v + 1)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def isolated_vertices(self) -> list[int]:
        touched = {v for e in self.edges for v in e}
        return [v for v in range(self.n) if v not in touched]

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={list(self.edges)})"


def validate(
    raw_edges: Iterable[Iterable[int]],
    n: int,
    *,
    strict: bool = False,
    labels: Sequence[str] | None = None,
) -> Hypergraph:
    """Build a :class:`Hypergraph` from raw vertex sets.

    With ``strict=False`` (the default) nested edges are resolved by keeping
    only the inclusion-minimal ones; with ``strict=True`` they are an error.
    Loops and out-of-range indices are always errors.
    """
    edges = []
    for raw in raw_edges:
        raw = tuple(raw)
        e = frozenset(raw)
        if len(e) != len(raw):
            raise HypergraphError(f"edge {raw} repeats a vertex")
        if len(e) < 2:
            raise HypergraphError(f"edge {raw} has fewer than two vertices")
        if min(e) < 0 or max(e) >= n:
            raise HypergraphError(f"edge {raw} has a vertex outside [0, {n})")
        edges.append(e)
    edges = set(edges)
    minimal = [e for e in edges if not any(f < e for f in edges)]
    if strict and len(minimal) != len(edges):
        nested = sorted(tuple(sorted(e)) for e in edges - set(minimal))
        raise HypergraphError(f"nested edges not allowed in strict mode: {nested}")
    return Hypergraph(n, tuple(tuple(sorted(e)) for e in minimal), labels)


def _check_vertices(H: Hypergraph, P: Iterable[int]) -> tuple[int, ...]:
    P = tuple(sorted(set(P)))
    for v in P:
        if not 0 <= v < H.n:
            raise HypergraphError(f"vertex {v} outside [0, {H.n})")
    return P


def induced(H: Hypergraph, P: Iterable[int]) -> Hypergraph:
    """The induced subhypergraph on ``P``.

    The result's vertices are the elements of ``P`` in increasing order,
    renumbered ``0..|P|-1``; labels travel with them.
    """
    P = _check_vertices(H, P)
    pos = {v: i for i, v in enumerate(P)}
    edges = tuple(tuple(pos[v] for v in e) for e in H.edges if all(v in pos for v in e))
    labels = tuple(H.label(v) for v in P)
    return Hypergraph(len(P), edges, labels)


def delete_vertex(H: Hypergraph, x: int) -> Hypergraph:
    """``H`` with ``x`` and every edge through it removed."""
    return induced(H, (v for v in H.vertices if v != x))


class ExpansionVertex(NamedTuple):
    """Shadow number ``shadow`` of base vertex ``base`` (both 0-based)."""

    base: int
    shadow: int


@dataclass(frozen=True)
class ExpandedHypergraph:
    """The s-th expansion of ``base``.

    Vertex ``(i, j)`` sits at index ``i * order + j`` of :attr:`graph`, which
    is the lexicographic order on ``(base, shadow)``.
    """

    order: int
    base: Hypergraph
    graph: Hypergraph

    @property
    def vertices(self) -> list[ExpansionVertex]:
        return [ExpansionVertex(i, j) for i in range(self.base.n) for j in range(self.order)]

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    def index(self, v: ExpansionVertex | tuple[int, int]) -> int:
        i, j = v
        if not (0 <= i < self.base.n and 0 <= j < self.order):
            raise HypergraphError(f"no expansion vertex {tuple(v)} at order {self.order}")
        return i * self.order + j

    def vertex(self, idx: int) -> ExpansionVertex:
        return ExpansionVertex(*divmod(idx, self.order))

    def induced(self, T: Iterable[ExpansionVertex | tuple[int, int]]) -> Hypergraph:
        return induced(self.graph, (self.index(v) for v in T))

    def monomial(self, T: Iterable[ExpansionVertex | tuple[int, int]]) -> tuple[int, ...]:
        """Squarefree exponent vector m_T over the expansion variables."""
        exps = [0] * self.graph.n
        for v in T:
            exps[self.index(v)] = 1
        return tuple(exps)


def expansion(H: Hypergraph, s: int) -> ExpandedHypergraph:
    """Replace every vertex by ``s`` pairwise adjacent shadows.

    Each base edge lifts to every choice of one shadow per endpoint.
    """
    if s < 1:
        raise HypergraphError(f"expansion order must be positive, got {s}")
    edges = []
    for i in range(H.n):
        for l, k in combinations(range(s), 2):
            edges.append((i * s + l, i * s + k))
    for e in H.edges:
        for shadows in product(range(s), repeat=len(e)):
            edges.append(tuple(i * s + j for i, j in zip(e, shadows)))
    labels = tuple(f"{H.label(i)}.{j + 1}" for i in range(H.n) for j in range(s))
    return ExpandedHypergraph(s, H, Hypergraph(H.n * s, tuple(edges), labels))


def depolarize(m: Sequence[int], order: int) -> tuple[int, ...]:
    """Send every shadow variable x_ij back to x_i.

    ``m`` is an exponent vector over the variables of an order-``order``
    expansion, laid out as in :class:`ExpandedHypergraph`.
    """
    if order < 1 or len(m) % order:
        raise HypergraphError(f"length {len(m)} is not a multiple of order {order}")
    return tuple(sum(m[i:i + order]) for i in range(0, len(m), order))


# -- graph queries ---------------------------------------------------------

def is_graph(H: Hypergraph) -> bool:
    return all(len(e) == 2 for e in H.edges)


def _require_graph(G: Hypergraph) -> None:
    if not is_graph(G):
        raise NotAGraphError("operation is only defined for graphs")


def adjacency(G: Hypergraph) -> list[set[int]]:
    _require_graph(G)
    adj = [set() for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def neighbors(G: Hypergraph, v: int) -> frozenset[int]:
    _check_vertices(G, (v,))
    return frozenset(adjacency(G)[v])


def complement(G: Hypergraph) -> Hypergraph:
    _require_graph(G)
    present = set(G.edges)
    edges = tuple(e for e in combinations(range(G.n), 2) if e not in present)
    return Hypergraph(G.n, edges, G.labels)


def is_clique(G: Hypergraph, S: Iterable[int]) -> bool:
    adj = adjacency(G)
    S = _check_vertices(G, S)
    return all(v in adj[u] for u, v in combinations(S, 2))


def is_simplicial(G: Hypergraph, v: int) -> bool:
    return is_clique(G, neighbors(G, v))


def cliques(G: Hypergraph, min_size: int = 1, max_size: int | None = None) -> list[Edge]:
    """All vertex sets inducing a complete graph, sizes in the given range."""
    adj = adjacency(G)
    max_size = G.n if max_size is None else max_size
    out = []

    def grow(clique, cands):
        if min_size <= len(clique):
            out.append(tuple(clique))
        if len(clique) == max_size:
            return
        for v in sorted(cands):
            if clique and v < clique[-1]:
                continue
            grow(clique + [v], cands & adj[v])

    grow([], set(range(G.n)))
    return sorted(c for c in out if c)
