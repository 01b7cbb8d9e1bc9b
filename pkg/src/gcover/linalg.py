"""Exact linear algebra over the rationals and the integers.

Two layers:

* plain functions on integer matrices (lists of int rows) — thin wrappers
  around the fraction-free kernels in :mod:`gcover.kernels`;
* :class:`QMat`, a small dense matrix of :class:`fractions.Fraction` used
  wherever rational (not integral) arithmetic is genuinely needed.

Everything is exact; nothing here ever touches floats.
"""

from fractions import Fraction
from math import gcd, lcm

from gcover.kernels import imat_det, imat_mul, imat_rref


def int_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def int_transpose(A):
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def int_rank(A):
    return len(imat_rref(A)[0])


def int_kernel_basis(A, ncols):
    """Primitive integer basis of the right kernel ``{v : A v = 0}``.

    One basis vector per free column of the RREF, normalized to coprime
    entries with a positive free coordinate.  ``ncols`` is required because
    ``A`` may be empty (kernel = all of Z^ncols).
    """
    rows, pivots = imat_rref(A)
    pivset = set(pivots)
    basis = []
    L = 1
    for i, pc in enumerate(pivots):
        L = lcm(L, rows[i][pc])
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = L
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f] * (L // rows[i][pc])
        g = 0
        for x in v:
            g = gcd(g, x)
        if g > 1:
            v = [x // g for x in v]
        basis.append(v)
    return basis


def _as_fraction_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


class QMat:
    """A dense exact rational matrix."""

    __slots__ = ("m", "n", "rows")

    def __init__(self, rows):
        self.rows = _as_fraction_rows(rows)
        self.m = len(self.rows)
        self.n = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.n:
                raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n):
        return cls(int_identity(n))

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)])

    def __eq__(self, other):
        return (
            isinstance(other, QMat)
            and self.m == other.m
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __repr__(self):
        return f"QMat({self.rows!r})"

    def __add__(self, other):
        if self.m != other.m or self.n != other.n:
            raise ValueError("shape mismatch")
        return QMat(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QMat([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, QMat):
            if self.n != other.m:
                raise ValueError("shape mismatch")
            ot = other.transpose().rows
            return QMat(
                [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.rows]
            )
        return QMat([[a * other for a in row] for row in self.rows])

    def __rmul__(self, scalar):
        return QMat([[scalar * a for a in row] for row in self.rows])

    def transpose(self):
        return QMat([list(col) for col in zip(*self.rows)] if self.rows else [])

    def trace(self):
        return sum((self.rows[i][i] for i in range(min(self.m, self.n))), Fraction(0))

    def is_zero(self):
        return all(a == 0 for row in self.rows for a in row)

    def scaled_int_rows(self):
        """Integer rows spanning the same row space (per-row denominators cleared)."""
        out = []
        for row in self.rows:
            d = 1
            for a in row:
                d = lcm(d, a.denominator)
            out.append([int(a * d) for a in row])
        return out

    def rref(self):
        """Rational RREF.  Returns ``(R, pivots)`` with unit pivots, zero rows dropped."""
        rows, pivots = imat_rref(self.scaled_int_rows())
        out = []
        for i, pc in enumerate(pivots):
            p = rows[i][pc]
            out.append([Fraction(x, p) for x in rows[i]])
        return QMat(out) if out else QMat.zeros(0, self.n), pivots

    def rank(self):
        return len(imat_rref(self.scaled_int_rows())[1])

    def kernel_basis(self):
        """Basis of the right kernel, as a list of Fraction row-vectors."""
        ker = int_kernel_basis(self.scaled_int_rows(), self.n)
        return [[Fraction(x) for x in v] for v in ker]

    def solve_matrix(self, B):
        """Exact solution ``X`` of ``self * X == B`` (free variables set to 0).

        Raises :class:`ValueError` when the system is inconsistent.
        """
        if self.m != B.m:
            raise ValueError("shape mismatch")
        aug = QMat([ra + rb for ra, rb in zip(self.rows, B.rows)])
        R, pivots = aug.rref()
        X = [[Fraction(0)] * B.n for _ in range(self.n)]
        for i, pc in enumerate(pivots):
            if pc >= self.n:
                raise ValueError("inconsistent linear system")
            X[pc] = R.rows[i][self.n :]
        return QMat(X)

    def inverse(self):
        if self.m != self.n:
            raise ValueError("inverse of a non-square matrix")
        try:
            return self.solve_matrix(QMat.identity(self.n))
        except ValueError:
            raise ValueError("matrix is singular") from None

    def det(self):
        if self.m != self.n:
            raise ValueError("determinant of a non-square matrix")
        scale = Fraction(1)
        int_rows = []
        for row in self.rows:
            d = 1
            for a in row:
                d = lcm(d, a.denominator)
            scale *= d
            int_rows.append([int(a * d) for a in row])
        return Fraction(imat_det(int_rows)) / scale


def qmat_row_space_contains(M, vec):
    """True when ``vec`` (a sequence of Fractions/ints) lies in the row space of ``M``."""
    base = M.rank()
    ext = QMat(M.rows + [list(vec)])
    return ext.rank() == base
