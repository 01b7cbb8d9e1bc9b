"""Exact complex character tables of finite groups.

The table is computed by the classical modular method: the class-algebra
structure-constant matrices are simultaneously diagonalized over a prime
field F_p with p = 1 (mod exponent) and p > 2|G|, the central characters are
read off the common eigenvectors, degrees are recovered from the second
orthogonality relation, and each character value is lifted exactly to a sum
of roots of unity via its eigenvalue multiplicities.  Everything downstream
(Frobenius-Schur indicators, Galois orbits, induction/restriction) works on
the exact cyclotomic values.

Row order is deterministic: by degree, with the trivial character first,
ties broken by the coefficient vectors of the values in Q(zeta_exponent).
"""

from fractions import Fraction
from math import isqrt

from gcover.cyclotomic import Cyclo, cyclo_sum
from gcover.errors import InternalInvariantError, ValidationError

# --- small number-theory helpers ---------------------------------------------


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _table_prime(exponent, lower_bound):
    """Smallest prime p = 1 (mod exponent) with p > lower_bound."""
    p = exponent + 1
    while p <= lower_bound or not _is_prime(p):
        p += exponent
    return p


def _prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _primitive_root(p):
    fs = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fs):
            return g
    raise InternalInvariantError(f"no primitive root mod {p}")  # pragma: no cover


# --- linear algebra over F_p --------------------------------------------------


def _mod_rref(rows, p):
    M = [[x % p for x in row] for row in rows]
    if not M:
        return [], []
    n = len(M[0])
    r = 0
    pivots = []
    for c in range(n):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [(x * inv) % p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                a = M[i][c]
                M[i] = [(x - a * y) % p for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def _mod_kernel(rows, ncols, p):
    R, pivots = _mod_rref(rows, p)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-R[i][f]) % p
        out.append(v)
    return out


def _mod_mat_vec(A, v, p):
    return [sum(a * x for a, x in zip(row, v)) % p for row in A]


def _mod_charpoly(B, p):
    """Characteristic polynomial of B over F_p (monic, little-endian).

    Faddeev-LeVerrier; valid because p exceeds the matrix dimension.
    """
    n = len(B)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # M <- B (M + c I)
        for i in range(n):
            M[i][i] = (M[i][i] + c) % p
        M = [[sum(B[i][t] * M[t][j] for t in range(n)) % p for j in range(n)] for i in range(n)]
        tr = sum(M[i][i] for i in range(n)) % p
        c = (-tr * pow(k, -1, p)) % p
        coeffs[n - k] = c
    return coeffs


def _poly_eval_mod(coeffs, x, p):
    out = 0
    for c in reversed(coeffs):
        out = (out * x + c) % p
    return out


# --- the table ----------------------------------------------------------------


class CharacterTable:
    """The exact table of irreducible complex characters of a finite group."""

    def __init__(self, group):
        self.group = group
        self.classes = group.conjugacy_classes()
        self.reps = group.class_reps()
        self.sizes = [len(c) for c in self.classes]
        self.r = len(self.classes)
        self.exponent = group.exponent()
        self.inverse_class = group.power_map(-1)
        self.chars, self.degrees = self._compute()
        self._value_index = {
            self._value_key(ch): i for i, ch in enumerate(self.chars)
        }
        self._orbits = None

    # -- construction --

    def _value_key(self, values):
        return tuple(v.coeffs_in(self.exponent) for v in values)

    def _compute(self):
        G = self.group
        r = self.r
        if r == 1:
            return [(Cyclo.one(),)], [1]
        p = _table_prime(self.exponent, 2 * G.order)
        self.prime = p

        # structure-constant matrices: A_i[j][k] = #{x in C_i : x^-1 z_k in C_j}
        mats = []
        for i in range(1, r):
            Ai = [[0] * r for _ in range(r)]
            for x in self.classes[i]:
                xi = G.inv(x)
                for k, z in enumerate(self.reps):
                    Ai[G.class_of(G.mul(xi, z))][k] += 1
            mats.append(Ai)

        # split F_p^r into common one-dimensional eigenspaces
        spaces = [([[1 if j == i else 0 for j in range(r)] for i in range(r)],
                   list(range(r)))]
        for Ai in mats:
            refined = []
            for basis, pivots in spaces:
                if len(basis) == 1:
                    refined.append((basis, pivots))
                    continue
                imgs = [_mod_mat_vec(Ai, w, p) for w in basis]
                B = [[img[pc] for pc in pivots] for img in imgs]
                for s, img in enumerate(imgs):
                    recon = [0] * r
                    for t, coeff in enumerate(B[s]):
                        for j in range(r):
                            recon[j] = (recon[j] + coeff * basis[t][j]) % p
                    if recon != img:
                        raise InternalInvariantError(
                            "class matrix does not preserve eigenspace"
                        )
                cp = _mod_charpoly(B, p)
                # B[s][t] holds the expansion A_i w_s = sum_t B[s][t] w_t, so as
                # an operator on coefficient vectors it acts via the transpose.
                Bt = [list(col) for col in zip(*B)]
                dim_found = 0
                for lam in range(p):
                    if _poly_eval_mod(cp, lam, p):
                        continue
                    shifted = [
                        [(Bt[i][j] - (lam if i == j else 0)) % p for j in range(len(Bt))]
                        for i in range(len(Bt))
                    ]
                    eigen = []
                    for kv in _mod_kernel(shifted, len(B), p):
                        amb = [0] * r
                        for t, coeff in enumerate(kv):
                            if coeff:
                                for j in range(r):
                                    amb[j] = (amb[j] + coeff * basis[t][j]) % p
                        eigen.append(amb)
                    if eigen:
                        R, piv = _mod_rref(eigen, p)
                        refined.append((R, piv))
                        dim_found += len(R)
                if dim_found != len(basis):
                    raise InternalInvariantError(
                        "class matrix is not diagonalizable mod p"
                    )
            spaces = refined
        if any(len(b) != 1 for b, _ in spaces) or len(spaces) != r:
            raise InternalInvariantError("eigenspace refinement did not separate")

        # central characters, normalized so the identity coordinate is 1
        omegas = []
        for basis, _ in spaces:
            v = basis[0]
            if v[0] == 0:
                raise InternalInvariantError("eigenvector vanishes at the identity")
            inv0 = pow(v[0], -1, p)
            omegas.append([(x * inv0) % p for x in v])

        # degrees from the second orthogonality relation
        chars = []
        degrees = []
        x_root = _primitive_root(p)
        order_mod = pow(G.order, 1, p)
        for omega in omegas:
            f = 0
            for k in range(r):
                f = (f + omega[k] * omega[self.inverse_class[k]]
                     * pow(self.sizes[k], -1, p)) % p
            d_sq = (order_mod * pow(f, -1, p)) % p
            degree = next(
                (d for d in range(1, isqrt(G.order) + 1) if (d * d) % p == d_sq),
                None,
            )
            if degree is None:
                raise InternalInvariantError("degree recovery failed")
            chi_p = [
                (omega[k] * degree * pow(self.sizes[k], -1, p)) % p for k in range(r)
            ]
            values = self._lift(chi_p, degree, x_root, p)
            chars.append(values)
            degrees.append(degree)

        if sum(d * d for d in degrees) != G.order:
            raise InternalInvariantError("degree squares do not sum to |G|")

        order_key = sorted(
            range(r),
            key=lambda i: (
                degrees[i],
                0 if all(v == 1 for v in chars[i]) else 1,
                self._value_key(chars[i]),
            ),
        )
        chars = [chars[i] for i in order_key]
        degrees = [degrees[i] for i in order_key]
        if not all(v == 1 for v in chars[0]):
            raise InternalInvariantError("trivial character missing")
        return chars, degrees

    def _lift(self, chi_p, degree, x_root, p):
        """Exact character values from the modular ones, class by class."""
        G = self.group
        values = []
        for k, z in enumerate(self.reps):
            d = G.order_of(z)
            if d == 1:
                values.append(Cyclo.from_rational(degree))
                continue
            xd = pow(x_root, (p - 1) // d, p)
            xd_inv = pow(xd, -1, p)
            d_inv = pow(d, -1, p)
            total = 0
            terms = []
            for l in range(d):
                m = 0
                for j in range(d):
                    cj = chi_p[G.class_of(G.power(z, j))]
                    m = (m + cj * pow(xd_inv, l * j, p)) % p
                m = (m * d_inv) % p
                if m > degree:
                    raise InternalInvariantError("eigenvalue multiplicity out of range")
                total += m
                if m:
                    terms.append(Cyclo.zeta(d, l) * m)
            if total != degree:
                raise InternalInvariantError("eigenvalue multiplicities do not sum to degree")
            values.append(cyclo_sum(terms) if terms else Cyclo.from_rational(0))
        return tuple(values)

    # -- lookups --

    def value(self, i, k):
        return self.chars[i][k]

    def value_at(self, i, g):
        return self.chars[i][self.group.class_of(g)]

    def index_of_values(self, values):
        key = self._value_key(values)
        if key not in self._value_index:
            raise InternalInvariantError("values do not match any irreducible character")
        return self._value_index[key]

    @property
    def trivial_index(self):
        return 0

    # -- exact structure --

    def inner_product(self, u, v):
        """<u, v> = (1/|G|) sum |C_k| u_k conj(v_k), as an exact Fraction."""
        total = cyclo_sum(
            u[k] * v[k].conj() * self.sizes[k] for k in range(self.r)
        )
        val = total / self.group.order
        return val.as_fraction()

    def multiplicity(self, values, i):
        m = self.inner_product(values, self.chars[i])
        if m.denominator != 1 or m < 0:
            raise InternalInvariantError(f"bad multiplicity {m}")
        return int(m)

    def decompose(self, values):
        """Multiplicities of each irreducible in a virtual character."""
        return [self.multiplicity(values, i) for i in range(len(self.chars))]

    def fs_indicator(self, i):
        """Frobenius-Schur indicator: +1 real, -1 quaternionic, 0 complex type."""
        pm2 = self.group.power_map(2)
        total = cyclo_sum(
            self.chars[i][pm2[k]] * self.sizes[k] for k in range(self.r)
        )
        nu = (total / self.group.order).as_fraction()
        if nu.denominator != 1 or int(nu) not in (-1, 0, 1):
            raise InternalInvariantError(f"Frobenius-Schur indicator {nu} out of range")
        return int(nu)

    def dual_index(self, i):
        return self.index_of_values(tuple(v.conj() for v in self.chars[i]))

    def galois_orbits(self):
        """Orbits of the characters under Gal(Q(zeta_e)/Q), as sorted index tuples."""
        if self._orbits is None:
            e = self.exponent
            seen = set()
            orbits = []
            from math import gcd

            for i in range(len(self.chars)):
                if i in seen:
                    continue
                orbit = set()
                for t in range(1, e + 1):
                    if gcd(t, e) != 1:
                        continue
                    j = self.index_of_values(
                        tuple(v.galois(t) for v in self.chars[i])
                    )
                    orbit.add(j)
                orbits.append(tuple(sorted(orbit)))
                seen |= orbit
            self._orbits = orbits
        return self._orbits

    def orbit_of(self, i):
        for orb in self.galois_orbits():
            if i in orb:
                return orb
        raise InternalInvariantError("orbit lookup failed")  # pragma: no cover

    def field_degree(self, i):
        """[Q(chi) : Q] — the size of the Galois orbit."""
        return len(self.orbit_of(i))

    def orbit_sum_values(self, orbit):
        """Values of the rational character sum over a Galois orbit (integers)."""
        vals = []
        for k in range(self.r):
            s = cyclo_sum(self.chars[i][k] for i in orbit)
            vals.append(Cyclo.from_rational(s.as_fraction()))
        return tuple(vals)

    # -- induction / restriction --

    def restrict_to_subgroup(self, i, sub_table, to_parent):
        """Values of chi_i on the classes of a subgroup.

        ``sub_table`` is the CharacterTable of the subgroup as a standalone
        group; ``to_parent`` maps its element ids into this table's group.
        """
        return tuple(
            self.value_at(i, to_parent[rep]) for rep in sub_table.reps
        )

    def induce_from_subgroup(self, sub_ids, psi_by_parent):
        """Character induced from a subgroup.

        ``psi_by_parent`` maps each parent-group element id of the subgroup
        to the exact value of the subgroup class function there.
        """
        G = self.group
        H = set(sub_ids)
        for h in H:
            for x in H:
                if psi_by_parent[G.conjugate(h, x)] != psi_by_parent[h]:
                    raise ValidationError(
                        "induction input is not a class function on the subgroup"
                    )
        vals = []
        for z in self.reps:
            terms = [
                psi_by_parent[G.conjugate(z, x)]
                for x in range(G.order)
                if G.conjugate(z, x) in H
            ]
            vals.append(cyclo_sum(terms) / len(H) if terms else Cyclo.from_rational(0))
        return tuple(vals)

    # -- verification (dual route: orthogonality relations) --

    def verify(self):
        """Exact first and second orthogonality; raises on any failure."""
        n = len(self.chars)
        G = self.group
        for i in range(n):
            for j in range(n):
                ip = self.inner_product(self.chars[i], self.chars[j])
                if ip != (1 if i == j else 0):
                    raise InternalInvariantError(
                        f"row orthogonality fails at ({i}, {j}): {ip}"
                    )
        for k in range(self.r):
            for l in range(self.r):
                s = cyclo_sum(
                    self.chars[i][k] * self.chars[i][l].conj() for i in range(n)
                )
                want = Fraction(G.order, self.sizes[k]) if k == l else 0
                if s != Cyclo.from_rational(want):
                    raise InternalInvariantError(
                        f"column orthogonality fails at ({k}, {l})"
                    )
        for i in range(n):
            if self.chars[i][0] != self.degrees[i]:
                raise InternalInvariantError("identity column disagrees with degrees")
        return True
