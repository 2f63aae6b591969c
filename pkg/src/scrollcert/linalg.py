"""Rank and nullity over GF(p) and over Q.

The compiled kernel is used when the extension was built; otherwise the numpy
fallback is selected at import.  ``BACKEND`` names the one in use.
"""

from fractions import Fraction

from . import _rank_py

try:
    from ._rank_ext import rank_mod_p as _rank_compiled
except ImportError:  # extension not built
    _rank_compiled = None

BACKEND = "cython" if _rank_compiled is not None else "python"
MAX_PRIME = 2**31


def rank_mod_p(M, p: int, backend: str | None = None) -> int:
    if p >= MAX_PRIME:
        raise ValueError("prime must be below 2**31 to keep products in int64")
    backend = backend or BACKEND
    if backend == "cython":
        if _rank_compiled is None:
            raise RuntimeError("compiled kernel not available")
        return int(_rank_compiled(M, p))
    return _rank_py.rank_mod_p(M, p)


def rank_exact(M) -> int:
    """Rank over Q by fraction-exact elimination."""
    A = [[Fraction(x) for x in row] for row in M]
    if not A or not A[0]:
        return 0
    rows, cols = len(A), len(A[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, rows):
            if A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r
