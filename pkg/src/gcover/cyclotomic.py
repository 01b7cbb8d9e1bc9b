"""Exact arithmetic in cyclotomic fields Q(zeta_e).

An element is stored as a coefficient vector over the power basis
``1, z, ..., z^(phi(e)-1)`` of Q(zeta_e), reduced modulo the e-th cyclotomic
polynomial.  Elements of different conductors are compared and combined by
lifting both into Q(zeta_lcm) via ``zeta_e = zeta_E^(E/e)``; within one
conductor the representation is unique, so equality is coefficient equality
after lifting.

Coefficients are :class:`fractions.Fraction`; nothing is ever approximated.
``embed()`` returns a ``complex`` witness for numeric sanity checks only.
"""

import cmath
from fractions import Fraction
from math import gcd, lcm

_CYCLO_POLY = {}  # e -> list of ints, little-endian, monic of degree phi(e)
_POWTAB = {}  # e -> list of int vectors: zeta_e^j in the power basis, j = 0..e-1


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _poly_div_exact(num, den):
    """Exact division of integer polynomials (little-endian lists)."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        q, r = divmod(num[i], lead)
        if r:
            raise ArithmeticError("non-exact polynomial division")
        out[i - dn] = q
        for j in range(dn + 1):
            num[i - dn + j] -= q * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def cyclotomic_polynomial(e):
    """The e-th cyclotomic polynomial as a little-endian integer list."""
    if e in _CYCLO_POLY:
        return _CYCLO_POLY[e]
    # x^e - 1 divided by the product of Phi_d over proper divisors d of e.
    poly = [-1] + [0] * (e - 1) + [1]
    for d in _divisors(e)[:-1]:
        poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    _CYCLO_POLY[e] = poly
    return poly


def _powtab(e):
    if e in _POWTAB:
        return _POWTAB[e]
    phi_e = len(cyclotomic_polynomial(e)) - 1
    poly = cyclotomic_polynomial(e)
    top = [-c for c in poly[:phi_e]]  # z^phi in the basis
    tab = []
    for j in range(min(phi_e, e)):
        v = [0] * phi_e
        v[j] = 1
        tab.append(v)
    while len(tab) < e:
        prev = tab[-1]
        v = [0] + prev[:-1]
        carry = prev[-1]
        if carry:
            v = [a + carry * b for a, b in zip(v, top)]
        tab.append(v)
    _POWTAB[e] = tab
    return tab


class Cyclo:
    """An element of the cyclotomic field Q(zeta_e)."""

    __slots__ = ("e", "c")
    __hash__ = None  # equality crosses conductors; use .key() for dict/sort use

    def __init__(self, e, coeffs):
        phi_e = len(cyclotomic_polynomial(e)) - 1
        c = [Fraction(x) for x in coeffs]
        if len(c) != phi_e:
            raise ValueError(f"need {phi_e} coefficients for conductor {e}")
        self.e = e
        self.c = tuple(c)

    # --- constructors -------------------------------------------------

    @classmethod
    def zero(cls, e=1):
        return cls.from_rational(0)._lift(e)

    @classmethod
    def one(cls):
        return cls.from_rational(1)

    @classmethod
    def from_rational(cls, q):
        return cls(1, [Fraction(q)])

    @classmethod
    def zeta(cls, e, k=1):
        """zeta_e^k."""
        tab = _powtab(e)
        return cls(e, tab[k % e])

    # --- representation changes ----------------------------------------

    def _lift(self, E):
        """Rewrite in conductor E (a multiple of self.e)."""
        if E == self.e:
            return self
        if E % self.e:
            raise ValueError("can only lift to a multiple of the conductor")
        step = E // self.e
        tab = _powtab(E)
        phi_E = len(tab[0])
        out = [Fraction(0)] * phi_E
        for j, cj in enumerate(self.c):
            if cj:
                vec = tab[(j * step) % E]
                for i in range(phi_E):
                    if vec[i]:
                        out[i] += cj * vec[i]
        return Cyclo(E, out)

    @staticmethod
    def _pair(a, b):
        if not isinstance(b, Cyclo):
            b = Cyclo.from_rational(b)
        E = lcm(a.e, b.e)
        return a._lift(E), b._lift(E)

    # --- ring operations ------------------------------------------------

    def __add__(self, other):
        a, b = Cyclo._pair(self, other)
        return Cyclo(a.e, [x + y for x, y in zip(a.c, b.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.e, [-x for x in self.c])

    def __sub__(self, other):
        a, b = Cyclo._pair(self, other)
        return Cyclo(a.e, [x - y for x, y in zip(a.c, b.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Cyclo):
            q = Fraction(other)
            return Cyclo(self.e, [x * q for x in self.c])
        a, b = Cyclo._pair(self, other)
        n = len(a.c)
        conv = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        conv[i + j] += x * y
        tab = _powtab(a.e)
        out = [Fraction(0)] * n
        for k, v in enumerate(conv):
            if v:
                vec = tab[k % a.e]
                for i in range(n):
                    if vec[i]:
                        out[i] += v * vec[i]
        return Cyclo(a.e, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclo):
            if other.is_rational():
                other = other.as_fraction()
            else:
                raise TypeError("division only by rational scalars")
        q = Fraction(other)
        return Cyclo(self.e, [x / q for x in self.c])

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers not supported")
        out = Cyclo.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, (Cyclo, int, Fraction)):
            return NotImplemented
        a, b = Cyclo._pair(self, other)
        return a.c == b.c

    def __bool__(self):
        return any(self.c)

    # --- Galois action ---------------------------------------------------

    def galois(self, k):
        """Apply the automorphism zeta_e -> zeta_e^k (k coprime to e)."""
        if gcd(k, self.e) != 1:
            raise ValueError("galois exponent must be coprime to the conductor")
        tab = _powtab(self.e)
        n = len(self.c)
        out = [Fraction(0)] * n
        for j, cj in enumerate(self.c):
            if cj:
                vec = tab[(j * k) % self.e]
                for i in range(n):
                    if vec[i]:
                        out[i] += cj * vec[i]
        return Cyclo(self.e, out)

    def conj(self):
        """Complex conjugation (zeta -> zeta^-1)."""
        return self.galois(self.e - 1) if self.e > 1 else self

    # --- predicates and conversions --------------------------------------

    def is_rational(self):
        return all(x == 0 for x in self.c[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def as_int(self):
        q = self.as_fraction()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return int(q)

    def key(self):
        """Hashable total-order key (within a fixed conductor)."""
        return (self.e, self.c)

    def coeffs_in(self, E):
        """Coefficient tuple in conductor E (a multiple of self.e)."""
        return self._lift(E).c

    def embed(self):
        """Numeric value under zeta_e -> exp(2*pi*i/e).  For sanity checks only."""
        z = cmath.exp(2j * cmath.pi / self.e)
        out = 0j
        for j in reversed(range(len(self.c))):
            out = out * z + complex(self.c[j])
        return out

    # --- printing ---------------------------------------------------------

    def __str__(self):
        if self.is_rational():
            return str(self.c[0])
        parts = []
        for j in reversed(range(len(self.c))):
            q = self.c[j]
            if q == 0:
                continue
            if j == 0:
                mag = str(abs(q))
            else:
                zj = f"z{self.e}" if j == 1 else f"z{self.e}^{j}"
                mag = zj if abs(q) == 1 else f"{abs(q)}*{zj}"
            if not parts:
                parts.append(mag if q > 0 else f"-{mag}")
            else:
                parts.append(f"+ {mag}" if q > 0 else f"- {mag}")
        return " ".join(parts)

    def __repr__(self):
        return f"Cyclo({self})"


def cyclo_sum(items):
    out = Cyclo.from_rational(0)
    for x in items:
        out = out + x
    return out
