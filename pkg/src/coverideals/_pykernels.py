"""Pure-Python antichain kernels over exponent tuples.

Every function takes and returns plain tuples of non-negative ints, all of
the same length. Results are always lexicographically sorted and free of
duplicates, so both backends produce identical output.
"""

from itertools import product


def _support_mask(row):
    mask = 0
    for i, e in enumerate(row):
        if e:
            mask |= 1 << i
    return mask


def minimalize(rows):
    """Return the divisibility-minimal elements of ``rows``, sorted."""
    cands = sorted(set(rows), key=lambda r: (sum(r), r))
    kept = []
    for c in cands:
        cm = _support_mask(c)
        for g, gm in kept:
            if gm & ~cm:
                continue
            if all(x <= y for x, y in zip(g, c)):
                break
        else:
            kept.append((c, cm))
    return sorted(g for g, _ in kept)


def multiply(a_rows, b_rows):
    return minimalize(
        tuple(x + y for x, y in zip(a, b)) for a, b in product(a_rows, b_rows)
    )


def intersect(a_rows, b_rows):
    return minimalize(
        tuple(x if x > y else y for x, y in zip(a, b))
        for a, b in product(a_rows, b_rows)
    )


def contains(rows, m):
    return any(all(x <= y for x, y in zip(g, m)) for g in rows)


def colon(rows, m):
    return minimalize(
        tuple(x - y if x > y else 0 for x, y in zip(g, m)) for g in rows
    )


def intersect_irreducible(rows, b):
    """``(rows) ∩ (x_i^{b_i} : b_i >= 1)``.

    Generators already in the irreducible ideal survive; the rest are lifted
    coordinate by coordinate.
    """
    powers = [(i, c) for i, c in enumerate(b) if c >= 1]
    if not powers:
        return []
    out = []
    for g in rows:
        if any(g[i] >= c for i, c in powers):
            out.append(g)
        else:
            for i, c in powers:
                out.append(g[:i] + (c,) + g[i + 1:])
    return minimalize(out)
