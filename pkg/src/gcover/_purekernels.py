"""Integer-matrix kernels: pure-Python reference implementation.

``gcover._speedups`` (a Cython extension) provides the same three functions
with identical semantics; ``gcover.kernels`` selects whichever is available.
Matrices are lists of rows, rows are lists of Python ints, and no function
mutates its arguments.  All arithmetic is exact.

The echelon routine is fraction-free (Bareiss): every forward-elimination
step applies ``x -> (p*x - a*row) // prev`` to *every* row below the pivot,
including rows whose pivot-column entry is zero; that uniform update is what
keeps each division exact, so it must not be skipped.
"""

from math import gcd

BACKEND = "pure"


def imat_mul(A, B):
    """Product of integer matrices (m x n) * (n x p)."""
    m = len(A)
    n = len(B)
    p = len(B[0]) if n else 0
    out = []
    for i in range(m):
        Ai = A[i]
        row = [0] * p
        for k in range(n):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(p):
                    row[j] += a * Bk[j]
        out.append(row)
    return out


def _normalize_row(row, pc):
    """Divide a row by the gcd of its entries, making entry ``pc`` positive."""
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
    if g == 0:
        return
    if row[pc] < 0:
        g = -g
    if g != 1:
        for j in range(len(row)):
            row[j] //= g


def imat_rref(A):
    """Canonical primitive integer reduced row-echelon form.

    Returns ``(rows, pivots)`` where ``rows`` are the nonzero rows of the
    reduced echelon form, each with coprime entries and a positive pivot,
    and ``pivots[i]`` is the pivot column of ``rows[i]``.  The result is the
    unique such matrix with the same row space as ``A`` (it is the rational
    RREF with each row rescaled to a primitive integer vector).
    """
    if not A:
        return [], []
    m = len(A)
    n = len(A[0])
    M = [list(r) for r in A]
    prev = 1
    r = 0
    pivots = []
    for c in range(n):
        piv = -1
        for i in range(r, m):
            if M[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            M[r], M[piv] = M[piv], M[r]
        Mr = M[r]
        p = Mr[c]
        for i in range(r + 1, m):
            Mi = M[i]
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
        _normalize_row(rows[i], pivots[i])
    for i in range(r - 1, -1, -1):
        ri = rows[i]
        pc = pivots[i]
        p = ri[pc]
        for k in range(i):
            rk = rows[k]
            a = rk[pc]
            if a:
                for j in range(n):
                    rk[j] = p * rk[j] - a * ri[j]
                _normalize_row(rk, pivots[k])
    return rows, pivots


def imat_det(A):
    """Determinant of a square integer matrix (fraction-free)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    prev = 1
    sign = 1
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if M[i][c]:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        Mc = M[c]
        p = Mc[c]
        for i in range(c + 1, n):
            Mi = M[i]
            a = Mi[c]
            if a:
                for j in range(c, n):
                    Mi[j] = (p * Mi[j] - a * Mc[j]) // prev
            elif p != prev:
                for j in range(c, n):
                    Mi[j] = (p * Mi[j]) // prev
        prev = p
    return sign * M[n - 1][n - 1]
