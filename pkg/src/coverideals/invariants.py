"""Chromatic numbers by ideal membership, and associated primes of J^s.

``dual_of_power`` is the production route to Ass(R/J^s): it forms J^s,
takes its Alexander dual with respect to (s, ..., s) and reads off the
irreducible components. ``expansion_witness`` and ``secant_generators``
answer the same questions combinatorially and exist to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable

from .coloring import is_colorable, is_critically_chromatic
from .covers import cover_ideal
from .hypergraph import ExpansionVertex, Hypergraph, _require_graph, expansion, induced
from .monomial import (
    IrreducibleComponent,
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    a_minus_b,
    alexander_dual,
    contains,
    multiply,
    power,
    support,
)

DEFAULT_MAX_N = 10
DEFAULT_MAX_S = 4


class BudgetExceeded(RuntimeError):
    """The requested computation is beyond the configured size budget."""


@dataclass(frozen=True)
class AssReport:
    """Everything ``dual_of_power`` learns about J^s."""

    s: int
    n: int
    dual_generators: tuple[Monomial, ...]
    components: tuple[IrreducibleComponent, ...]
    primes: tuple[PrimeSupport, ...]


def _has_edge(H: Hypergraph) -> None:
    if not H.edges:
        raise ValueError("hypergraph has no edges")


def chi_algebraic(H: Hypergraph) -> int:
    """Least ``d`` with ``(x_1...x_n)^(d-1)`` in ``J^d``."""
    _has_edge(H)
    J = cover_ideal(H)
    Jd = J
    d = 1
    while not contains(Jd, (d - 1,) * H.n):
        Jd = multiply(Jd, J)
        d += 1
    return d


def chi_b_algebraic(G: Hypergraph, b: int) -> int:
    """Least ``d`` with ``(x_1...x_n)^(d-b)`` in ``J^d`` (graphs only)."""
    _require_graph(G)
    _has_edge(G)
    if b < 1:
        raise ValueError("b must be positive")
    J = cover_ideal(G)
    d = b
    Jd = power(J, d)
    while not contains(Jd, (d - b,) * G.n):
        Jd = multiply(Jd, J)
        d += 1
    return d


def check_budget(H: Hypergraph, s: int, max_n: int = DEFAULT_MAX_N, max_s: int = DEFAULT_MAX_S):
    if H.n > max_n or s > max_s:
        raise BudgetExceeded(
            f"n={H.n}, s={s} exceeds budget n <= {max_n}, s <= {max_s}"
        )


@lru_cache(maxsize=4096)
def _dual_of_power(H: Hypergraph, s: int) -> AssReport:
    Js = power(cover_ideal(H), s)
    a = (s,) * H.n
    dual = alexander_dual(Js, a)
    components = tuple(sorted(a_minus_b(a, c) for c in dual.gens))
    primes = tuple(sorted({support(b) for b in components}))
    return AssReport(s, H.n, dual.gens, components, primes)


def dual_of_power(
    H: Hypergraph, s: int, *, max_n: int = DEFAULT_MAX_N, max_s: int = DEFAULT_MAX_S
) -> AssReport:
    """(J^s)^[s], the irreducible components of J^s and Ass(R/J^s)."""
    if s < 1:
        raise ValueError("s must be positive")
    check_budget(H, s, max_n, max_s)
    return _dual_of_power(H, s)


def ass_primes(H: Hypergraph, s: int, **budget) -> tuple[PrimeSupport, ...]:
    return dual_of_power(H, s, **budget).primes


def secant_generators(H: Hypergraph, s: int, degree_cap: int | None = None) -> list[Monomial]:
    """Minimal squarefree m_W with chi(H_W) > s, up to ``degree_cap`` vertices.

    Subsets are scanned by size and supersets of earlier hits skipped, so
    every returned W induces a critically (s+1)-chromatic subhypergraph.
    """
    if s < 1:
        raise ValueError("s must be positive")
    cap = H.n if degree_cap is None else min(degree_cap, H.n)
    found: list[frozenset] = []
    for k in range(1, cap + 1):
        for W in combinations(range(H.n), k):
            fw = frozenset(W)
            if any(f <= fw for f in found):
                continue
            if not is_colorable(induced(H, W), s):
                found.append(fw)
    return sorted(tuple(1 if i in W else 0 for i in range(H.n)) for W in found)


def expansion_witness(
    H: Hypergraph, s: int, P: Iterable[int]
) -> tuple[ExpansionVertex, ...] | None:
    """A shadow set T over ``P`` with H^s_T critically (s+1)-chromatic.

    T holds the first ``c_i`` shadows of each vertex i of ``P`` (c_i >= 1);
    shadows of one vertex are interchangeable, so no other shapes need
    trying. Count vectors are tried by total size, then lexicographically,
    so the one-shadow-each set comes first. None means ``P`` is not
    associated to J^s.
    """
    if s < 1:
        raise ValueError("s must be positive")
    P = tuple(sorted(set(P)))
    if not P:
        return None
    X = expansion(H, s)
    for counts in sorted(product(range(1, s + 1), repeat=len(P)), key=lambda c: (sum(c), c)):
        T = tuple(ExpansionVertex(i, j) for i, c in zip(P, counts) for j in range(c))
        if is_critically_chromatic(X.induced(T), s + 1):
            return T
    return None


def localize_check(H: Hypergraph, P: Iterable[int], d: int, **budget) -> bool:
    """Is (x_i : i in P) associated to J(H_P)^d inside k[P]?"""
    P = tuple(sorted(set(P)))
    if not P:
        return False
    HP = induced(H, P)
    return tuple(range(len(P))) in dual_of_power(HP, d, **budget).primes


def persistence_scan(H: Hypergraph, s_max: int, **budget) -> list[tuple[int, bool]]:
    """For s < s_max: does Ass(R/J^s) sit inside Ass(R/J^{s+1})?"""
    if s_max < 1:
        raise ValueError("s_max must be positive")
    primes = [set(ass_primes(H, s, **budget)) for s in range(1, s_max + 1)]
    return [(s, primes[s - 1] <= primes[s]) for s in range(1, s_max)]


def stabilization_union(H: Hypergraph, s_max: int, **budget) -> tuple[tuple[PrimeSupport, ...], int]:
    """Union of Ass(R/J^s) for s <= s_max and the first s where it is reached.

    This is only the union up to ``s_max``; it does not certify that later
    powers add nothing.
    """
    if s_max < 1:
        raise ValueError("s_max must be positive")
    running: set = set()
    history = []
    for s in range(1, s_max + 1):
        running |= set(ass_primes(H, s, **budget))
        history.append(len(running))
    index = next(s for s in range(1, s_max + 1) if history[s - 1] == history[-1])
    return tuple(sorted(running)), index
