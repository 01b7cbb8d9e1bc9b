# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer-matrix kernels.

Mirrors gcover._purekernels exactly (same functions, same results); the
entries stay arbitrary-precision Python ints, the win is loop and indexing
overhead.  Keep the two files in sync — the test suite diff-checks them on
random matrices.
"""

from math import gcd

BACKEND = "compiled"


def imat_mul(list A, list B):
    """Product of integer matrices (m x n) * (n x p)."""
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(B)
    cdef Py_ssize_t p = len(B[0]) if n else 0
    cdef Py_ssize_t i, j, k
    cdef list out = []
    cdef list Ai, Bk, row
    for i in range(m):
        Ai = A[i]
        row = [0] * p
        for k in range(n):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(p):
                    row[j] = row[j] + a * Bk[j]
        out.append(row)
    return out


cdef void _normalize_row(list row, Py_ssize_t pc):
    cdef Py_ssize_t j, n = len(row)
    g = 0
    for j in range(n):
        x = row[j]
        if x:
            g = gcd(g, x)
    if g == 0:
        return
    if row[pc] < 0:
        g = -g
    if g != 1:
        for j in range(n):
            row[j] = row[j] // g


def imat_rref(A):
    """Canonical primitive integer reduced row-echelon form.

    Returns ``(rows, pivots)``; see gcover._purekernels.imat_rref.
    """
    if not A:
        return [], []
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(A[0])
    cdef list M = [list(arow) for arow in A]
    cdef Py_ssize_t r = 0, c, i, j, k, piv, pc
    cdef list pivots = []
    cdef list Mi, Mr, ri, rk, rows
    prev = 1
    for c in range(n):
        piv = -1
        for i in range(r, m):
            if (<list>M[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            M[r], M[piv] = M[piv], M[r]
        Mr = <list>M[r]
        p = Mr[c]
        for i in range(r + 1, m):
            Mi = <list>M[i]
            a = Mi[c]
            if a:
                for j in range(c, n):
                    Mi[j] = (p * Mi[j] - a * Mr[j]) // prev
            elif p != prev:
                for j in range(c, n):
                    Mi[j] = (p * Mi[j]) // prev
        prev = p
        pivots.append(c)
        r += 1
        if r == m:
            break
    rows = M[:r]
    for i in range(r):
        _normalize_row(<list>rows[i], <Py_ssize_t>pivots[i])
    for i in range(r - 1, -1, -1):
        ri = <list>rows[i]
        pc = <Py_ssize_t>pivots[i]
        p = ri[pc]
        for k in range(i):
            rk = <list>rows[k]
            a = rk[pc]
            if a:
                for j in range(n):
                    rk[j] = p * rk[j] - a * ri[j]
                _normalize_row(rk, <Py_ssize_t>pivots[k])
    return rows, pivots


def imat_det(A):
    """Determinant of a square integer matrix (fraction-free)."""
    cdef Py_ssize_t n = len(A)
    if n == 0:
        return 1
    cdef list M = [list(arow) for arow in A]
    cdef Py_ssize_t c, i, j, piv
    cdef int sign = 1
    cdef list Mi, Mc
    prev = 1
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if (<list>M[i])[c]:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        Mc = <list>M[c]
        p = Mc[c]
        for i in range(c + 1, n):
            Mi = <list>M[i]
            a = Mi[c]
            if a:
                for j in range(c, n):
                    Mi[j] = (p * Mi[j] - a * Mc[j]) // prev
            elif p != prev:
                for j in range(c, n):
                    Mi[j] = (p * Mi[j]) // prev
        prev = p
    return sign * (<list>M[n - 1])[n - 1]
