"""Symplectic topology of a branched cover: intersection form, curve lifts,
Dehn-twist transvections, and the twist-algebra irreducibility certificate.

The model collapses a spanning tree of the cover's 1-skeleton to a single
vertex, so 1-cocycles are exactly the integer vectors on the loop edges that
vanish on every face word, with no coboundaries to quotient by.  The cup
product of two cocycles is evaluated through the normalized bar resolution
of the fundamental group: a face with word y_1...y_n (each y_i a loop letter
or its inverse) contributes

    sum_i (prefix sum of the first cocycle) * (second cocycle on y_i)
    + sum over inverse letters of the product of the values on that letter,

the second sum being the normalization correction for inverse letters.  The
intersection form on H_1 is the inverse of this cohomology pairing
transported through the evaluation pairing; the standard handle pair of the
one-holed torus pins the global sign to <a1, b1> = +1.
"""

from __future__ import annotations

from fractions import Fraction

from .covergraph import CoverComplex
from .errors import (
    InternalInvariantError,
    UnsupportedComputation,
    ValidationError,
)
from .linalg import QMat, int_kernel_basis


class CoverModel:
    """H_1 of a cover with its intersection form and deck action."""

    def __init__(self, datum, complex_, dim, omega, action, cocycles, cup, evaluation):
        self.datum = datum
        self.complex = complex_
        self.dim = dim
        self.omega = omega
        self.action = action
        self.cocycles = cocycles
        self.cup_matrix = cup
        self.evaluation_matrix = evaluation

    def pairing(self, x, y):
        """Intersection number <x, y> of two homology classes (column
        coordinate lists)."""
        total = Fraction(0)
        for i in range(self.dim):
            if x[i]:
                row = self.omega.rows[i]
                total += x[i] * sum(
                    (row[j] * y[j] for j in range(self.dim) if y[j]), Fraction(0)
                )
        return total

    def isotypic_projector(self, table, orbit):
        """Central idempotent of a Galois orbit acting on H_1."""
        G = self.datum.group
        vals = table.orbit_sum_values(orbit)
        deg = table.degrees[orbit[0]]
        acc = QMat.zeros(self.dim, self.dim)
        for g in range(G.order):
            c = vals[G.class_of(G.inv(g))].as_fraction()
            if c:
                acc = acc + self.action[g] * c
        e = acc * Fraction(deg, G.order)
        if e * e != e:  # pragma: no cover
            raise InternalInvariantError("isotypical projector is not idempotent")
        return e

    def projector_partition_ok(self, table):
        """Sum of the orbit projectors is the identity and they annihilate
        one another (exact)."""
        projs = [self.isotypic_projector(table, orb) for orb in table.galois_orbits()]
        total = QMat.zeros(self.dim, self.dim)
        for e in projs:
            total = total + e
        if total != QMat.identity(self.dim):
            return False
        for a in range(len(projs)):
            for b in range(len(projs)):
                if a != b and not (projs[a] * projs[b]).is_zero():
                    return False
        return True


def _collapsed_face_words(cx):
    words = []
    for word in cx.face_words():
        words.append(
            [(cx.loop_pos[e], sgn) for e, sgn in word if e in cx.loop_pos]
        )
    return words


def _cup_value(word, alpha, beta):
    """Evaluation of alpha-cup-beta on one face 2-chain (see module docstring)."""
    total = 0
    prefix = 0
    for pos, sgn in word:
        total += prefix * sgn * beta[pos]
        if sgn == -1:
            total += alpha[pos] * beta[pos]
        prefix += sgn * alpha[pos]
    return total


def build_cover_model(datum, cap=64):
    """Symplectic model of the cover: H_1 basis, integer intersection form,
    and the exact deck-group action, with every structural identity checked.
    """
    G = datum.group
    if G.order > cap:
        raise UnsupportedComputation(
            f"topology model limited to group order {cap}"
        )
    cx = CoverComplex(datum)
    rows, _pivots = cx.boundary_data()
    dim = cx.h1_dim()
    free = cx.h1_basis_columns()

    if dim == 0:
        omega = QMat([])
        action = [QMat([]) for _ in range(G.order)]
        return CoverModel(datum, cx, 0, omega, action, [], QMat([]), QMat([]))

    cocycles = int_kernel_basis(rows, cx.n_loops) if rows else \
        [[1 if j == f else 0 for j in range(cx.n_loops)] for f in free]
    if len(cocycles) != dim:  # pragma: no cover
        raise InternalInvariantError("cocycle space has wrong dimension")

    words = _collapsed_face_words(cx)
    cup = QMat([
        [sum(_cup_value(w, cocycles[a], cocycles[b]) for w in words)
         for b in range(dim)]
        for a in range(dim)
    ])
    if cup + cup.transpose() != QMat.zeros(dim, dim):  # pragma: no cover
        raise InternalInvariantError("cohomology pairing is not skew")

    evaluation = QMat([[Fraction(cocycles[a][f]) for f in free] for a in range(dim)])
    try:
        cup_inv = cup.inverse()
    except ValueError:  # pragma: no cover
        raise InternalInvariantError("cohomology pairing is degenerate")
    omega = -(evaluation.transpose() * cup_inv * evaluation)
    for row in omega.rows:
        for x in row:
            if x.denominator != 1:  # pragma: no cover
                raise InternalInvariantError("intersection numbers are not integers")
    if omega + omega.transpose() != QMat.zeros(dim, dim):  # pragma: no cover
        raise InternalInvariantError("intersection form is not skew")
    if omega.det() == 0:  # pragma: no cover
        raise InternalInvariantError("intersection form is degenerate")

    action = [cx.h1_matrix(h) for h in range(G.order)]
    for h in range(G.order):
        A = action[h]
        if A.transpose() * omega * A != omega:  # pragma: no cover
            raise InternalInvariantError(
                "deck transformation does not preserve the intersection form"
            )
        if cx.trace_on_h1(h) != A.trace():  # pragma: no cover
            raise InternalInvariantError("homology trace mismatch")
    for a in G.gens:
        for b in G.gens:
            if action[a] * action[b] != action[G.mul(a, b)]:  # pragma: no cover
                raise InternalInvariantError("deck action is not a homomorphism")

    return CoverModel(datum, cx, dim, omega, action, cocycles, cup, evaluation)


# --- curve words ---------------------------------------------------------------


def parse_curve_word(datum, text):
    """Parse a curve word like ``"a1 b1^-1 t2"`` into [(label index, sign)].

    Letters a<i>/b<i> name the handle loops (1-based), t<q> the loops around
    branch points.  A ``^-1`` suffix inverts a letter.
    """
    letters = []
    names = {}
    for i in range(datum.gbar):
        names[f"a{i + 1}"] = 2 * i
        names[f"b{i + 1}"] = 2 * i + 1
    for q in range(datum.n_branches):
        names[f"t{q + 1}"] = 2 * datum.gbar + q
    if not isinstance(text, str) or not text.strip():
        raise ValidationError("empty curve word")
    for tok in text.split():
        sign = 1
        if tok.endswith("^-1"):
            sign = -1
            tok = tok[:-3]
        elif "^" in tok:
            raise ValidationError(f"bad curve letter {tok!r}: only ^-1 is allowed")
        if tok not in names:
            raise ValidationError(f"unknown curve letter {tok!r}")
        letters.append((names[tok], sign))
    return letters


def lift_curve(model, letters):
    """Lift of a simple closed curve on the punctured quotient surface.

    ``letters`` is a list of (label index, sign).  The lift decomposes into
    one circle per coset of the cyclic group generated by the curve's
    monodromy; each circle's homology class is returned in the model basis.
    The classes of the components must be pairwise orthogonal under the
    intersection form (a disjoint union of embedded circles meets itself
    nowhere); otherwise the input cannot be an embedded curve transverse to
    the group action and the lift is rejected.
    """
    datum = model.datum
    cx = model.complex
    G = datum.group
    if not letters:
        raise ValidationError("empty curve word")
    for s, sign in letters:
        if not (0 <= s < cx.n_labels) or sign not in (1, -1):
            raise ValidationError("curve letter out of range")
    p = 0
    for s, sign in letters:
        step = cx.images[s] if sign == 1 else G.inv(cx.images[s])
        p = G.mul(p, step)
    order = G.order_of(p) if p else 1
    components = []
    for orbit in G.right_mult_orbits(p):
        u0 = orbit[0]
        chain = []
        cur = u0
        for _ in range(order):
            for s, sign in letters:
                if sign == 1:
                    chain.append((cur * cx.n_labels + s, 1))
                    cur = G.mul(cur, cx.images[s])
                else:
                    cur = G.mul(cur, G.inv(cx.images[s]))
                    chain.append((cur * cx.n_labels + s, -1))
        if cur != u0:  # pragma: no cover
            raise InternalInvariantError("curve lift did not close up")
        cls = cx.reduce_cycle(cx.path_vector(chain))
        components.append({"start": u0, "class": cls})
    for a in range(len(components)):
        for b in range(a, len(components)):
            if model.pairing(components[a]["class"], components[b]["class"]) != 0:
                raise ValidationError(
                    "input word cannot be an embedded G-transverse circle"
                )
    return {
        "monodromy": p,
        "monodromy_order": order,
        "component_count": len(components),
        "components": components,
    }


def transvection(model, lift):
    """Symplectic transvection along the lifted multicurve: the product of
    the Dehn-twist actions of all components,

        T(x) = x + sum_c <x, v_c> v_c.

    Checks that T preserves the form, is unipotent of square type
    ((T - I)^2 = 0), has determinant one, and commutes with the deck action.
    """
    dim = model.dim
    T = QMat.identity(dim)
    for comp in lift["components"]:
        v = comp["class"]
        w = [sum((model.omega.rows[j][i] * v[j] for j in range(dim)), Fraction(0))
             for i in range(dim)]  # w = Omega^T v, so T = I - v w^T = I - v v^T Omega
        outer = QMat([[v[i] * w[j] for j in range(dim)] for i in range(dim)])
        T = T - outer
    if T.transpose() * model.omega * T != model.omega:  # pragma: no cover
        raise InternalInvariantError("transvection does not preserve the form")
    D = T - QMat.identity(dim)
    if not (D * D).is_zero():  # pragma: no cover
        raise InternalInvariantError("transvection is not 2-step unipotent")
    if T.det() != 1:  # pragma: no cover
        raise InternalInvariantError("transvection determinant is not 1")
    for g in model.datum.group.gens:
        A = model.action[g]
        if A * T != T * A:  # pragma: no cover
            raise InternalInvariantError("transvection does not commute with the deck action")
    return T


def isotypical_image_test(model, table, orbit, lift):
    """True when some component class of the lift has a nonzero image under
    the isotypical projector of the given character orbit."""
    e = model.isotypic_projector(table, orbit)
    for comp in lift["components"]:
        img = e * QMat([[c] for c in comp["class"]])
        if not img.is_zero():
            return True
    return False


def _span_dimension(mats, dim, cap):
    """Dimension of the unital algebra generated by ``mats`` (k x k), found
    by closing the linear span under multiplication."""
    def vec(M):
        return [M.rows[i][j] for i in range(dim) for j in range(dim)]

    basis_mats = [QMat.identity(dim)]
    rows = [vec(basis_mats[0])]
    echelon = QMat(rows).rref()[0].rows
    frontier = list(basis_mats)
    gens = [M for M in mats]
    while True:
        new_frontier = []
        for F in frontier:
            for Gm in gens:
                cand = F * Gm
                trial = echelon + [vec(cand)]
                new_rows, _ = QMat(trial).rref()
                if new_rows.m > len(echelon):
                    echelon = new_rows.rows
                    new_frontier.append(cand)
                    if len(echelon) >= cap:
                        return len(echelon)
        if not new_frontier:
            return len(echelon)
        frontier = new_frontier


def twist_algebra_certificate(model, table, orbit, lifts, cap=None):
    """Irreducibility certificate for the twist algebra on an isotypical
    block of H_1.

    Restricts the transvections of the given lifted curves to the block cut
    out by the orbit's projector, generates the unital algebra they span,
    and computes its commutant.  When the commutant dimension equals the
    dimension of the division algebra attached to the character, the block
    is certified irreducible as a twist-algebra module; otherwise the
    certificate is inconclusive.
    """
    from .unitary import division_algebra_dimension

    e = model.isotypic_projector(table, orbit)
    basis, _ = e.transpose().rref()  # rows span the image of e
    k = basis.m
    if k == 0:
        raise ValidationError("character orbit does not occur in H^1")
    B = QMat(basis.rows).transpose()
    restricted = []
    for lift in lifts:
        T = transvection(model, lift)
        restricted.append(B.solve_matrix(T * B))
    if cap is None:
        cap = k * k
    algebra_dim = _span_dimension(restricted, k, cap)

    rows = []
    for R in restricted + [QMat.identity(k)]:
        r = R.rows
        for a in range(k):
            for b in range(k):
                row = [Fraction(0)] * (k * k)
                for c in range(k):
                    row[c * k + b] += r[a][c]
                    row[a * k + c] -= r[c][b]
                rows.append(row)
    commutant_dim = k * k - QMat(rows).rank()
    ddim = division_algebra_dimension(table, orbit[0])
    verdict = "irreducible" if commutant_dim == ddim else "inconclusive"
    return {
        "orbit": list(orbit),
        "block_dimension": k,
        "twist_count": len(lifts),
        "twist_algebra_dimension": algebra_dim,
        "commutant_dimension": commutant_dim,
        "division_algebra_dimension": ddim,
        "certificate": verdict,
    }
