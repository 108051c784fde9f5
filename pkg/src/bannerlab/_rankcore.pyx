# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled rank kernel: dense Gaussian elimination over GF(p).

Same signature as the pure fallback in ``_rankpure``; the caller picks one
at import time.  The modulus must fit 31 bits so products stay inside a
64-bit integer.
"""

from libc.stdlib cimport calloc, free


cdef inline long long _norm(long long x, long long p):
    x %= p
    if x < 0:
        x += p
    return x


cdef long long _modinv(long long a, long long p):
    # Fermat inverse; valid for prime p and a != 0 (mod p).
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rank_mod_p(cols, Py_ssize_t nrows, long long p):
    """Rank over GF(p) of the sparse columns ``[(row, coeff), ...]``."""
    cdef Py_ssize_t ncols = len(cols)
    if nrows <= 0 or ncols == 0:
        return 0
    if p <= 1 or p >= (<long long> 1) << 31:
        raise ValueError("modulus out of range for the compiled kernel")
    cdef long long *a = <long long *> calloc(nrows * ncols, sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t c, cc, r, pivot, rank
    cdef long long v, f, inv
    cdef Py_ssize_t ri
    try:
        for c in range(ncols):
            for item in cols[c]:
                ri = item[0]
                v = item[1]
                a[ri * ncols + c] = _norm(a[ri * ncols + c] + v, p)
        rank = 0
        for c in range(ncols):
            pivot = -1
            for r in range(rank, nrows):
                if a[r * ncols + c] != 0:
                    pivot = r
                    break
            if pivot < 0:
                continue
            if pivot != rank:
                for cc in range(c, ncols):
                    v = a[pivot * ncols + cc]
                    a[pivot * ncols + cc] = a[rank * ncols + cc]
                    a[rank * ncols + cc] = v
            inv = _modinv(a[rank * ncols + c], p)
            for cc in range(c, ncols):
                a[rank * ncols + cc] = a[rank * ncols + cc] * inv % p
            for r in range(rank + 1, nrows):
                f = a[r * ncols + c]
                if f:
                    for cc in range(c, ncols):
                        a[r * ncols + cc] = _norm(
                            a[r * ncols + cc] - f * a[rank * ncols + cc], p)
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        free(a)
