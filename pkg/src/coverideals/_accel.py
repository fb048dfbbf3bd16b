"""numpy front end for the compiled divisibility filter."""

import numpy as np

from ._ckernels import minimal_mask


def _to_tuples(arr):
    return [tuple(int(x) for x in row) for row in arr.tolist()]


def _minimal(arr):
    if arr.shape[0] == 0:
        return []
    arr = np.unique(arr, axis=0)
    n = arr.shape[1]
    order = np.argsort(arr.sum(axis=1), kind="stable")
    sorted_rows = np.ascontiguousarray(arr[order])
    if n <= 64:
        weights = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
        supp = ((sorted_rows > 0).astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
    else:
        supp = np.zeros(sorted_rows.shape[0], dtype=np.uint64)
    keep = minimal_mask(sorted_rows, np.ascontiguousarray(supp))
    # np.unique left arr lex-sorted; restore that order for the survivors
    return _to_tuples(arr[np.sort(order[keep])])


def _array(rows):
    rows = list(rows)
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    return np.asarray(rows, dtype=np.int64).reshape(len(rows), len(rows[0]))


def minimalize(rows):
    return _minimal(_array(rows))


def multiply(a_rows, b_rows):
    a, b = _array(a_rows), _array(b_rows)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return []
    return _minimal((a[:, None, :] + b[None, :, :]).reshape(-1, a.shape[1]))


def intersect(a_rows, b_rows):
    a, b = _array(a_rows), _array(b_rows)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return []
    return _minimal(np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, a.shape[1]))


def contains(rows, m):
    a = _array(rows)
    if a.shape[0] == 0:
        return False
    return bool(np.any(np.all(a <= np.asarray(m, dtype=np.int64), axis=1)))


def colon(rows, m):
    a = _array(rows)
    if a.shape[0] == 0:
        return []
    return _minimal(np.maximum(a - np.asarray(m, dtype=np.int64), 0))


def intersect_irreducible(rows, b):
    a = _array(rows)
    b = np.asarray(b, dtype=np.int64)
    idx = np.flatnonzero(b >= 1)
    if idx.size == 0 or a.shape[0] == 0:
        return []
    inside = np.any(a[:, idx] >= b[idx], axis=1)
    outside = a[~inside]
    lifted = np.repeat(outside, idx.size, axis=0)
    cols = np.tile(idx, outside.shape[0])
    lifted[np.arange(lifted.shape[0]), cols] = np.tile(b[idx], outside.shape[0])
    return _minimal(np.concatenate([a[inside], lifted]))
