"""Pure-Python (numpy) rank over GF(p); fallback for the compiled kernel."""

import numpy as np


def rank_mod_p(M, p: int) -> int:
    A = np.array(M, dtype=np.int64, copy=True) % p
    if A.ndim != 2 or A.size == 0:
        return 0
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = A[r + 1:, c].copy()
        mask = below != 0
        if mask.any():
            idx = np.nonzero(mask)[0] + r + 1
            A[idx, c:] = (A[idx, c:] - np.outer(below[mask], A[r, c:])) % p
        r += 1
    return r
