"""Perfect graphs: brute force and an algebraic finite-step test.

The algebraic test never looks for odd holes or antiholes. It compares
Ass(R/J^s) with the clique supports of size 2..s+1 for each s below the
chromatic number, which is a finite amount of work.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coloring import chromatic_number
from .hypergraph import (
    Hypergraph,
    _require_graph,
    adjacency,
    cliques,
    delete_vertex,
    induced,
    is_simplicial,
    neighbors,
)
from .invariants import chi_algebraic, dual_of_power
from .monomial import MonomialIdeal, PrimeSupport, associated_primes


@dataclass(frozen=True)
class PerfectionCertificate:
    """Verdict plus the evidence behind it.

    Brute force fills ``induced_set`` (with its chi and omega) on failure.
    The algebraic test fills ``power`` and ``prime``: on failure they name
    an s and a prime on which Ass(R/J^s) and the clique list disagree.
    """

    perfect: bool
    method: str
    induced_set: tuple[int, ...] | None = None
    chi: int | None = None
    omega: int | None = None
    power: int | None = None
    prime: PrimeSupport | None = None
    prime_is_associated: bool | None = None

    def __bool__(self):
        return self.perfect


def clique_number(G: Hypergraph) -> int:
    """Size of a largest clique, by branch and bound."""
    adj = adjacency(G)
    best = 0

    def grow(size, cands):
        nonlocal best
        if size > best:
            best = size
        if size + len(cands) <= best:
            return
        for v in sorted(cands):
            cands = cands - {v}
            grow(size + 1, cands & adj[v])
            if size + len(cands) <= best:
                return

    grow(0, set(range(G.n)))
    return best


def is_perfect_bruteforce(G: Hypergraph) -> PerfectionCertificate:
    """chi == omega on every induced subgraph, smallest subsets first."""
    _require_graph(G)
    for k in range(1, G.n + 1):
        for S in combinations(range(G.n), k):
            GS = induced(G, S)
            chi, omega = chromatic_number(GS), clique_number(GS)
            if chi != omega:
                return PerfectionCertificate(False, "brute", S, chi, omega)
    return PerfectionCertificate(True, "brute")


def is_perfect_algebraic(G: Hypergraph, **budget) -> PerfectionCertificate:
    """Perfect iff for 1 <= s < chi(G), Ass(R/J^s) is exactly the cliques of size 2..s+1."""
    _require_graph(G)
    chi = chi_algebraic(G) if G.edges else 1
    for s in range(1, chi):
        primes = set(dual_of_power(G, s, **budget).primes)
        expected = set(cliques(G, 2, s + 1))
        if primes != expected:
            extra = sorted(primes - expected)
            if extra:
                return PerfectionCertificate(False, "algebraic", chi=chi, power=s,
                                             prime=extra[0], prime_is_associated=True)
            return PerfectionCertificate(False, "algebraic", chi=chi, power=s,
                                         prime=sorted(expected - primes)[0],
                                         prime_is_associated=False)
    return PerfectionCertificate(True, "algebraic", chi=chi)


def saturated_chain_check(
    I: MonomialIdeal | None = None, primes=None
) -> tuple[bool, PrimeSupport | None]:
    """Every non-minimal associated prime sits one height above another one.

    Pass either the ideal or its associated primes. Returns ``(True, None)``
    or ``(False, P)`` for the first prime without a saturated step below it.
    """
    if primes is None:
        primes = associated_primes(I)
    sets = [frozenset(p) for p in primes]
    for P in sorted(sets, key=lambda p: (len(p), sorted(p))):
        below = [Q for Q in sets if Q < P]
        if below and not any(len(Q) == len(P) - 1 for Q in below):
            return False, tuple(sorted(P))
    return True, None


def is_minimal_imperfect(G: Hypergraph) -> bool:
    if is_perfect_bruteforce(G):
        return False
    return all(is_perfect_bruteforce(delete_vertex(G, x)) for x in G.vertices)


def simplicial_ass_classification(G: Hypergraph, x: int, s: int) -> set[PrimeSupport]:
    """Associated primes of J^s through a simplicial vertex ``x``, as predicted.

    They are ``{x} | S`` for every S inside N(x) with 1 <= |S| <= min(|N(x)|, s).
    """
    _require_graph(G)
    if not is_simplicial(G, x):
        raise ValueError(f"vertex {x} is not simplicial")
    nbrs = sorted(neighbors(G, x))
    out = set()
    for k in range(1, min(len(nbrs), s) + 1):
        for S in combinations(nbrs, k):
            out.add(tuple(sorted((x,) + S)))
    return out
