# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled rank over GF(p) for p < 2**31."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


cdef int64_t _inv(int64_t a, int64_t p):
    cdef int64_t result = 1, e = p - 2
    a %= p
    while e > 0:
        if e & 1:
            result = (result * a) % p
        a = (a * a) % p
        e >>= 1
    return result


def rank_mod_p(M, long long p):
    cdef cnp.ndarray[int64_t, ndim=2] arr = np.array(M, dtype=np.int64, copy=True)
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        return 0
    arr %= p
    cdef int64_t[:, ::1] A = np.ascontiguousarray(arr)
    cdef Py_ssize_t rows = A.shape[0], cols = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t inv, f, tmp
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                tmp = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = tmp
        inv = _inv(A[r, c], p)
        for j in range(c, cols):
            A[r, j] = (A[r, j] * inv) % p
        for i in range(r + 1, rows):
            f = A[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                A[i, j] = (A[i, j] - f * A[r, j]) % p
                if A[i, j] < 0:
                    A[i, j] += p
        r += 1
    return r
