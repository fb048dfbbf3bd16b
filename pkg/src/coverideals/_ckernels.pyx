# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled divisibility filter used by :mod:`coverideals._accel`."""

import numpy as np


def minimal_mask(const long long[:, ::1] rows, const unsigned long long[::1] supp):
    """Flag the rows not divisible by any earlier kept row.

    ``rows`` must be distinct and sorted by ascending total degree, so a row
    can only be divided by rows before it. ``supp`` holds support bitmasks
    (all zero disables the prefilter).
    """
    cdef Py_ssize_t k = rows.shape[0]
    cdef Py_ssize_t n = rows.shape[1]
    cdef Py_ssize_t i, t, j, c, nk = 0
    cdef bint divided, divides
    keep = np.zeros(k, dtype=np.bool_)
    kept = np.empty(k, dtype=np.intp)
    cdef unsigned char[::1] km = keep.view(np.uint8)
    cdef Py_ssize_t[::1] kidx = kept
    for i in range(k):
        divided = False
        for t in range(nk):
            j = kidx[t]
            if supp[j] & ~supp[i]:
                continue
            divides = True
            for c in range(n):
                if rows[j, c] > rows[i, c]:
                    divides = False
                    break
            if divides:
                divided = True
                break
        if not divided:
            kidx[nk] = i
            nk += 1
            km[i] = 1
    return keep
