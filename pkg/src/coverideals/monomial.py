"""Monomial ideals as antichains of exponent vectors.

A monomial is a tuple of ``n`` non-negative ints. A :class:`MonomialIdeal`
keeps its minimal generators in lexicographic order, so equal ideals have
identical generator tuples and every output is deterministic.

Irreducible components ``b`` stand for ``(x_i^{b_i} : b_i >= 1)`` and prime
supports are sorted tuples of 0-based variable indices.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from . import kernels

Monomial = tuple[int, ...]
IrreducibleComponent = tuple[int, ...]
PrimeSupport = tuple[int, ...]


class IdealError(ValueError):
    pass


class MonomialIdeal:
    """Monomial ideal in ``n`` variables, stored by its minimal generators.

    The zero ideal has no generators; the unit ideal is generated by the
    constant monomial ``(0,)*n``.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = ()):
        rows = [tuple(int(e) for e in g) for g in gens]
        for g in rows:
            if len(g) != n:
                raise IdealError(f"monomial {g} does not have {n} exponents")
            if any(e < 0 for e in g):
                raise IdealError(f"negative exponent in {g}")
        self.n = n
        self.gens: tuple[Monomial, ...] = tuple(kernels.minimalize(rows))

    @classmethod
    def _trusted(cls, n: int, gens) -> "MonomialIdeal":
        obj = object.__new__(cls)
        obj.n = n
        obj.gens = tuple(gens)
        return obj

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls._trusted(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls._trusted(n, ((0,) * n,))

    @classmethod
    def irreducible(cls, b: Sequence[int]) -> "MonomialIdeal":
        """The ideal ``(x_i^{b_i} : b_i >= 1)``."""
        n = len(b)
        gens = [tuple(e if j == i else 0 for j in range(n)) for i, e in enumerate(b) if e >= 1]
        return cls._trusted(n, sorted(gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __mul__(self, other):
        return multiply(self, other)

    def __pow__(self, s):
        return power(self, s)

    def __and__(self, other):
        return intersect(self, other)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.n, self.gens))

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, gens={list(self.gens)})"

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def format_monomial(m: Sequence[int], names: Sequence[str] | None = None) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 0:
            continue
        name = names[i] if names else f"x{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _same_ring(I: MonomialIdeal, K: MonomialIdeal) -> None:
    if I.n != K.n:
        raise IdealError(f"ideals live in different rings ({I.n} vs {K.n} variables)")


def _check_monomial(I: MonomialIdeal, m: Sequence[int]) -> Monomial:
    m = tuple(m)
    if len(m) != I.n:
        raise IdealError(f"monomial {m} does not have {I.n} exponents")
    return m


def minimalize(n: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    return MonomialIdeal(n, gens)


def multiply(I: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, K)
    return MonomialIdeal._trusted(I.n, kernels.multiply(I.gens, K.gens))


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """``I^s`` by repeated multiplication, minimalizing after each step."""
    if s < 0:
        raise IdealError("negative power")
    if s == 0:
        return MonomialIdeal.unit(I.n)
    result = I
    for _ in range(s - 1):
        result = multiply(result, I)
    return result


def powers(I: MonomialIdeal, s_max: int):
    """Yield ``I, I^2, ..., I^s_max`` reusing each product."""
    P = I
    for s in range(1, s_max + 1):
        if s > 1:
            P = multiply(P, I)
        yield P


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    return kernels.contains(I.gens, _check_monomial(I, m))


def colon(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal._trusted(I.n, kernels.colon(I.gens, _check_monomial(I, m)))


def intersect(I: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, K)
    return MonomialIdeal._trusted(I.n, kernels.intersect(I.gens, K.gens))


def _in_irreducible(g: Monomial, b: Sequence[int]) -> bool:
    return any(c >= 1 and e >= c for e, c in zip(g, b))


def intersect_irreducibles(n: int, components: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Intersection of irreducible ideals, smallest first.

    A component that already contains the running intersection is skipped,
    which keeps most steps free.
    """
    comps = sorted({tuple(b) for b in components}, key=lambda b: (sum(1 for c in b if c), b))
    acc = MonomialIdeal.unit(n)
    for b in comps:
        if not any(b):
            return MonomialIdeal.zero(n)
        if all(_in_irreducible(g, b) for g in acc.gens):
            continue
        acc = MonomialIdeal._trusted(n, kernels.intersect_irreducible(acc.gens, b))
    return acc


def a_minus_b(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """The vector with entries ``a_i + 1 - b_i`` where ``b_i >= 1`` and 0 elsewhere."""
    return tuple(ai + 1 - bi if bi >= 1 else 0 for ai, bi in zip(a, b))


def lcm_exponents(I: MonomialIdeal) -> tuple[int, ...]:
    if not I.gens:
        return (0,) * I.n
    return tuple(max(col) for col in zip(*I.gens))


def alexander_dual(I: MonomialIdeal, a: Sequence[int]) -> MonomialIdeal:
    """Alexander dual of ``I`` with respect to ``a``.

    Every minimal generator must divide ``x^a``.
    """
    a = tuple(a)
    if len(a) != I.n:
        raise IdealError(f"dual vector {a} does not have {I.n} entries")
    for g in I.gens:
        if any(e > ai for e, ai in zip(g, a)):
            raise IdealError(f"generator {g} does not divide x^{a}")
    return intersect_irreducibles(I.n, (a_minus_b(a, g) for g in I.gens))


def irreducible_decomposition(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """The unique irredundant irreducible decomposition of ``I``.

    Read off from the minimal generators of the Alexander dual taken with
    respect to the lcm of the generators. The unit ideal yields ``[]``.
    """
    if I.is_zero:
        raise IdealError("the zero ideal has no irreducible decomposition")
    a = lcm_exponents(I)
    dual = alexander_dual(I, a)
    return sorted(a_minus_b(a, c) for c in dual.gens)


def support(v: Sequence[int]) -> PrimeSupport:
    return tuple(i for i, e in enumerate(v) if e)


def associated_primes(I: MonomialIdeal) -> list[PrimeSupport]:
    return sorted({support(b) for b in irreducible_decomposition(I)})


def annihilator_witnesses(
    I: MonomialIdeal, bound: Sequence[int] | None = None
) -> dict[PrimeSupport, list[Monomial]]:
    """Map each prime ``P = I : T`` to every witness ``T`` dividing ``x^bound``.

    Brute force over the box; meant as a cross-check, not a production path.
    ``bound`` defaults to the lcm of the generators.
    """
    bound = lcm_exponents(I) if bound is None else tuple(bound)
    found: dict[PrimeSupport, list[Monomial]] = {}
    for T in product(*(range(e + 1) for e in bound)):
        if contains(I, T):
            continue
        Q = colon(I, T)
        if Q.gens and all(sum(g) == 1 for g in Q.gens):
            found.setdefault(support(map(sum, zip(*Q.gens))), []).append(T)
    return found


def associated_primes_witness(
    I: MonomialIdeal, bound: Sequence[int] | None = None
) -> list[PrimeSupport]:
    return sorted(annihilator_witnesses(I, bound))
