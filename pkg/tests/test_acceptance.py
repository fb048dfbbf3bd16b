"""Acceptance suite: eight end-to-end criteria with runtime limits.

Each criterion prints one ``PASS``/``FAIL`` line (collected again in the
terminal summary). Run standalone with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from itertools import combinations, permutations, product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coverideals import catalog  # noqa: E402
from coverideals.coloring import (  # noqa: E402
    b_fold_chromatic,
    chromatic_number,
    is_critically_chromatic,
    is_independent,
    is_vertex_cover,
)
from coverideals.covers import cover_ideal  # noqa: E402
from coverideals.hypergraph import cliques, expansion, validate  # noqa: E402
from coverideals.invariants import (  # noqa: E402
    chi_algebraic,
    chi_b_algebraic,
    dual_of_power,
    expansion_witness,
    localize_check,
    persistence_scan,
    secant_generators,
    stabilization_union,
)
from coverideals.monomial import (  # noqa: E402
    MonomialIdeal,
    alexander_dual,
    annihilator_witnesses,
    associated_primes,
    associated_primes_witness,
    contains,
    irreducible_decomposition,
    lcm_exponents,
    power,
)
from coverideals.perfect import (  # noqa: E402
    is_perfect_algebraic,
    is_perfect_bruteforce,
    saturated_chain_check,
)

from oracles import divides  # noqa: E402

RESULTS: dict[int, str] = {}
SEED = 20240611
BIG = {"max_n": 10, "max_s": 10}


class Failure(AssertionError):
    pass


def check(cond, msg):
    if not cond:
        raise Failure(msg)


def record(number, title, limit, body):
    start = time.perf_counter()
    error = None
    try:
        body()
    except Failure as exc:
        error = str(exc)
    elapsed = time.perf_counter() - start
    if error is None and elapsed >= limit:
        error = f"took {elapsed:.1f}s, limit {limit}s"
    verdict = "PASS" if error is None else "FAIL"
    line = f"[{verdict}] criterion {number}: {title} ({elapsed:.1f}s, limit {limit}s)"
    if error:
        line += f": {error}"
    RESULTS[number] = line
    print(line)
    return error


def run_criterion(number, title, limit, body):
    error = record(number, title, limit, body)
    if error:
        pytest.fail(error)


def _connected_graphs(n_max):
    return catalog.graphs_up_to(n_max, connected=True)


def _all_hypergraphs(n):
    """Every simple hypergraph on ``n`` vertices with edges of size >= 2, up to isomorphism."""
    subsets = [frozenset(c) for k in range(2, n + 1) for c in combinations(range(n), k)]
    seen, out = set(), []

    def grow(start, chosen):
        key = min(tuple(sorted(tuple(sorted(p[v] for v in e)) for e in chosen))
                  for p in permutations(range(n)))
        if key not in seen:
            seen.add(key)
            out.append(validate(chosen, n, strict=True))
        for k in range(start, len(subsets)):
            e = subsets[k]
            if all(not (e <= f or f <= e) for f in chosen):
                grow(k + 1, chosen + [e])

    grow(0, [])
    return out


# 1 ------------------------------------------------------------------------

def criterion_1():
    corpus = [G for G in _connected_graphs(6) if G.edges]
    rng = random.Random(SEED)
    corpus += [catalog.random_hypergraph(rng, rng.randint(2, 6), sizes=(2, 3)) for _ in range(50)]
    for H in corpus:
        a, b = chi_algebraic(H), chromatic_number(H)
        check(a == b, f"chi mismatch on {H.edges}: algebraic {a}, search {b}")


# 2 ------------------------------------------------------------------------

def criterion_2():
    C5 = catalog.cycle(5)
    check(chi_b_algebraic(C5, 2) == 5, "chi_2(C5) != 5")
    check(contains(power(cover_ideal(C5), 5), (3,) * 5), "m_V^3 not in J(C5)^5")
    for n in range(1, 6):
        for G in catalog.graphs(n, connected=False):
            if G.edges:
                a, b = chi_b_algebraic(G, 2), b_fold_chromatic(G, 2)
                check(a == b, f"chi_2 mismatch on {G.edges}: {a} vs {b}")


# 3 ------------------------------------------------------------------------

def criterion_3():
    G = catalog.six_vertex_example()
    full = tuple(range(6))
    chi = chromatic_number(G)
    check(chi == 3 and chi_algebraic(G) == 3, f"chi = {chi}")
    check(full in dual_of_power(G, 3).primes, "maximal ideal missing at s=3")
    check(all(full not in dual_of_power(G, s).primes for s in (1, 2)),
          "maximal ideal present below s=3")
    check((3, 2, 3, 3, 3, 3) in irreducible_decomposition(power(cover_ideal(G), 3)),
          "component (x1^3,x2^2,x3^3,...) missing")
    T = expansion_witness(G, 3, full)
    expected = {(0, 0), (1, 0), (1, 1), (2, 0), (3, 0), (4, 0), (5, 0)}
    check(T is not None and expected <= set(T), f"witness {T}")
    check(is_critically_chromatic(expansion(G, 3).induced(T), 4), "witness is not critical")
    _, index = stabilization_union(G, 3)
    check(index >= 3 > chi - 1, f"stabilization index {index}")


# 4 ------------------------------------------------------------------------

def _box(box):
    return product(*(range(e + 1) for e in box))


def _irreducible_contains(b, m):
    return any(c >= 1 and e >= c for e, c in zip(m, b))


def criterion_4():
    rng = random.Random(SEED)
    for _ in range(200):
        n = rng.randint(1, 4)
        gens = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 5))]
        I = MonomialIdeal(n, gens)
        a = lcm_exponents(I)
        check(alexander_dual(alexander_dual(I, a), a) == I, f"involution fails on {I}")
        comps = irreducible_decomposition(I)
        # membership over a box one past the lcm decides equality of monomial ideals
        box = [m for m in _box(tuple(e + 1 for e in a))]
        inside = [contains(I, m) for m in box]
        table = [[_irreducible_contains(b, m) for m in box] for b in comps]
        check(all(all(col) == want for col, want in zip(zip(*table), inside))
              if table else all(inside), f"decomposition of {I} is wrong")
        for k in range(len(comps)):
            rest = [row for j, row in enumerate(table) if j != k]
            check(any(all(col) and not want for col, want in zip(zip(*rest), inside))
                  if rest else not all(inside), f"component {comps[k]} of {I} is redundant")
        check(associated_primes(I) == associated_primes_witness(I), f"Ass mismatch on {I}")


# 5 ------------------------------------------------------------------------

def criterion_5():
    for G in _connected_graphs(6):
        brute = bool(is_perfect_bruteforce(G))
        alg = bool(is_perfect_algebraic(G, **BIG))
        check(brute == alg, f"perfection verdicts differ on {G.edges}")
        if not G.edges:
            continue
        chi = chromatic_number(G)
        chains = [saturated_chain_check(primes=dual_of_power(G, s, **BIG).primes)[0]
                  for s in range(1, chi)]
        if brute:
            for s in range(1, chi + 2):
                got = set(dual_of_power(G, s, **BIG).primes)
                check(got == set(cliques(G, 2, s + 1)), f"clique classification fails, s={s}, {G.edges}")
            check(all(chains), f"saturated chain fails on perfect {G.edges}")
        else:
            check(not all(chains), f"saturated chain holds up to chi-1 on imperfect {G.edges}")


# 6 ------------------------------------------------------------------------

def criterion_6():
    C5 = catalog.cycle(5)
    m5 = tuple(range(5))
    check(all(m5 in dual_of_power(C5, t).primes for t in (2, 3, 4)), "C5: maximal ideal missing")
    check(m5 not in dual_of_power(C5, 1).primes, "C5: maximal ideal at t=1")
    A7 = catalog.antihole(7)
    m7 = tuple(range(7))
    check(chromatic_number(A7) == 4, "complement(C7) is not 4-chromatic")
    check(all(m7 in dual_of_power(A7, t).primes for t in (3, 4)), "antihole: maximal ideal missing")
    check(all(m7 not in dual_of_power(A7, e).primes for e in (1, 2)), "antihole: maximal ideal too early")
    for G in _connected_graphs(6):
        if not G.edges or not is_perfect_bruteforce(G):
            continue
        chi = chromatic_number(G)
        check(all(ok for _, ok in persistence_scan(G, 4, **BIG)), f"persistence fails on {G.edges}")
        # scan past chi - 1 so the bound is actually tested
        _, index = stabilization_union(G, max(4, chi), **BIG)
        check(index <= chi - 1, f"union grows after chi-1 on {G.edges} (index {index})")


# 7 ------------------------------------------------------------------------

def criterion_7():
    for n in range(1, 6):
        for G in catalog.graphs(n, connected=False):
            for s in (1, 2, 3):
                squarefree = sorted(g for g in dual_of_power(G, s).dual_generators if max(g) <= 1)
                check(squarefree == secant_generators(G, s), f"secant mismatch, s={s}, {G.edges}")
    for n in range(1, 5):
        for H in _all_hypergraphs(n):
            if not H.edges:
                continue
            for s in (1, 2, 3):
                primes = set(dual_of_power(H, s).primes)
                for k in range(1, n + 1):
                    for P in combinations(range(n), k):
                        T = expansion_witness(H, s, P)
                        check((T is not None) == (P in primes),
                              f"classification fails, s={s}, P={P}, {H.edges}")


# 8 ------------------------------------------------------------------------

def criterion_8():
    rng = random.Random(SEED)
    for _ in range(200):
        H = catalog.random_hypergraph(rng, rng.randint(2, 8), sizes=(2, 3, 4))
        C = {v for v in range(H.n) if rng.random() < 0.5}
        check(is_independent(H, C) == is_vertex_cover(H, set(range(H.n)) - C),
              f"independence/cover duality fails on {H.edges}, {C}")
    for n in range(1, 6):
        for G in catalog.graphs(n, connected=False):
            if not G.edges:
                continue
            for d in (1, 2, 3):
                primes = set(dual_of_power(G, d).primes)
                for k in range(1, n + 1):
                    for P in combinations(range(n), k):
                        check(localize_check(G, P, d) == (P in primes),
                              f"localization fails, d={d}, P={P}, {G.edges}")
    found = 0
    for G in _connected_graphs(5):
        if not G.edges:
            continue
        full = tuple(range(G.n))
        for d in range(1, chromatic_number(G) + 1):
            witnesses = annihilator_witnesses(power(cover_ideal(G), d)).get(full, [])
            found += len(witnesses)
            for T in witnesses:
                check(divides(T, (d - 1,) * G.n), f"witness {T} does not divide m_V^{d - 1}")
    check(found > 0, "no maximal-ideal witnesses found")
    for G in _connected_graphs(4):
        if is_perfect_bruteforce(G):
            for s in (1, 2):
                check(is_perfect_bruteforce(expansion(G, s).graph),
                      f"expansion of perfect {G.edges} is imperfect at s={s}")


CRITERIA = [
    (1, "chi agreement on graphs n<=6 and 50 random hypergraphs", 60, criterion_1),
    (2, "b-fold chromatic number via membership", 60, criterion_2),
    (3, "six-vertex example reproduced", 120, criterion_3),
    (4, "duality involution and irreducible decomposition", 60, criterion_4),
    (5, "perfection equivalence on connected graphs n<=6", 120, criterion_5),
    (6, "persistence and odd holes/antiholes", 120, criterion_6),
    (7, "secant/dual consistency and expansion classification", 120, criterion_7),
    (8, "cover duality, localization, witness divisibility, expansions", 60, criterion_8),
]


@pytest.mark.parametrize("number, title, limit, body", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, body):
    run_criterion(number, title, limit, body)


if __name__ == "__main__":
    failures = [c[0] for c in CRITERIA if record(*c)]
    sys.exit(1 if failures else 0)
