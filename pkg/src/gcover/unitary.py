"""Classification of the unitary factors acting on the homology of a cover.

Each Galois orbit of irreducible characters occurring in H^1 contributes one
factor to the group preserving the polarized Hodge structure; its type is
read off the Frobenius-Schur indicator:

* indicator +1 (real type): a symplectic factor in m real variables,
* indicator -1 (quaternionic type): a quaternionic unitary factor in m/2
  variables,
* indicator 0 (complex type): a complex unitary factor whose signature
  (p, q) is the pair of holomorphic/antiholomorphic multiplicities.

The Schur index of a character is computed honestly from subgroup data: the
index divides the pairing of the character against every rationally
representable character, and these pairings are generated by inductions of
rational irreducibles from subgroups, so their gcd over the subgroup
lattice recovers the index (with the quaternionic-type lower bound and the
divisibility by the degree asserted as guards).  An independent commutant
oracle recomputes the endomorphism algebra of an isotypical block of H_1
directly from deck-transformation matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .characters import CharacterTable
from .covergraph import CoverComplex
from .cyclotomic import cyclo_sum
from .errors import InternalInvariantError, UnsupportedComputation, ValidationError
from .hodge import h0_multiplicity, h1_character
from .linalg import QMat

_SCHUR_CACHE = {}


def _group_key(G):
    return (G.degree, tuple(G.elements), tuple(G.gens))


def _table_for(G, prebuilt=None):
    key = _group_key(G)
    entry = _SCHUR_CACHE.get(key)
    if entry is None:
        entry = {"table": prebuilt if prebuilt is not None else CharacterTable(G),
                 "schur": {}}
        _SCHUR_CACHE[key] = entry
    return entry


def schur_index(table, i):
    """Schur index of the i-th irreducible character over the rationals.

    gcd of the pairings of chi with the rational irreducible characters
    induced from proper subgroups; every such pairing is a multiple of the
    index, and the gcd attains it.  Linear characters have index 1.
    """
    entry = _table_for(table.group, prebuilt=table)
    cached = entry["schur"].get(i)
    if cached is not None:
        return cached
    table = entry["table"]
    if table.degrees[i] == 1:
        entry["schur"][i] = 1
        return 1
    fs = table.fs_indicator(i)
    lower = 2 if fs == -1 else 1
    G = table.group
    g0 = 0
    for sub in G.all_subgroups():
        if len(sub) == G.order:
            continue
        H, to_parent = G.subgroup_as_group(sub)
        sub_entry = _table_for(H)
        table_h = sub_entry["table"]
        res = table.restrict_to_subgroup(i, table_h, to_parent)
        dec = table_h.decompose(res)
        for orbit in table_h.galois_orbits():
            pair = sum(dec[j] for j in orbit)
            if pair == 0:
                continue
            s_psi = schur_index(table_h, orbit[0])
            g0 = gcd(g0, s_psi * pair)
        if g0 == lower:
            break
    if g0 <= 0 or g0 % lower or table.degrees[i] % g0:  # pragma: no cover
        raise InternalInvariantError(
            f"Schur index candidate {g0} fails divisibility guards"
        )
    entry["schur"][i] = g0
    return g0


def division_algebra_dimension(table, i):
    """Dimension over Q of the division algebra End of the rational
    irreducible containing chi: (Schur index)^2 * [Q(chi) : Q]."""
    s = schur_index(table, i)
    return s * s * table.field_degree(i)


def signature_pair(datum, table, i):
    """Signature (p, q) of the complex-unitary factor attached to a
    complex-type character: p and q are the multiplicities of chi in the
    holomorphic forms and in their conjugates respectively.

    Defined only for indicator-0 characters; the orientation convention
    (holomorphic count first) is recorded in the reports.
    """
    if table.fs_indicator(i) != 0:
        raise ValidationError(
            "signature is defined only for complex-type (indicator 0) characters"
        )
    p = h0_multiplicity(datum, table, i)
    q = h0_multiplicity(datum, table, table.dual_index(i))
    return p, q


def isotype_report(datum, table):
    """One entry per Galois orbit of characters occurring in H^1, naming the
    unitary factor the orbit contributes."""
    mults = h1_character(datum, table)
    genus = datum.total_genus()
    total = sum(m * table.degrees[i] for i, m in enumerate(mults))
    if total != 2 * genus:  # pragma: no cover
        raise InternalInvariantError("H^1 multiplicities do not sum to 2g")
    entries = []
    for orbit in table.galois_orbits():
        if all(mults[i] == 0 for i in orbit):
            continue
        fss = {table.fs_indicator(i) for i in orbit}
        ms = {mults[i] for i in orbit}
        if len(fss) != 1 or len(ms) != 1:  # pragma: no cover
            raise InternalInvariantError("type or multiplicity varies on a Galois orbit")
        fs = fss.pop()
        m = ms.pop()
        i0 = orbit[0]
        f = len(orbit)
        entry = {
            "orbit": list(orbit),
            "degree": table.degrees[i0],
            "indicator": fs,
            "h1_multiplicity": m,
            "field_degree": f,
            "real_field_degree": f if fs != 0 else f // 2,
            "schur_index": schur_index(table, i0),
        }
        entry["division_algebra_dimension"] = division_algebra_dimension(table, i0)
        if fs == 1:
            entry["type"] = "real"
            entry["rank"] = m
            entry["factor"] = f"symplectic group, {m} real variables"
        elif fs == -1:
            if m % 2:  # pragma: no cover
                raise InternalInvariantError(
                    "quaternionic character with odd H^1 multiplicity"
                )
            entry["type"] = "quaternionic"
            entry["rank"] = m // 2
            entry["factor"] = f"quaternionic unitary group, {m // 2} variables"
        else:
            p, q = signature_pair(datum, table, i0)
            if p + q != m:  # pragma: no cover
                raise InternalInvariantError("signature does not sum to the multiplicity")
            entry["type"] = "complex"
            entry["rank"] = m
            entry["signature"] = [p, q]
            entry["factor"] = f"complex unitary group, signature ({p},{q})"
        entries.append(entry)
    return {
        "genus": genus,
        "signature_convention":
            "(holomorphic multiplicity, antiholomorphic multiplicity)",
        "factors": entries,
    }


# --- independent commutant computation ------------------------------------------


def _h1_action(datum, cap):
    if datum.group.order > cap:
        raise UnsupportedComputation(
            f"commutant oracle limited to group order {cap}"
        )
    cx = CoverComplex(datum)
    mats = [cx.h1_matrix(h) for h in range(datum.group.order)]
    return cx, mats


def _isotypic_projector(table, orbit, mats):
    """Central idempotent of the rational group algebra attached to a Galois
    orbit, evaluated in the H_1 representation."""
    G = table.group
    vals = table.orbit_sum_values(orbit)
    deg = table.degrees[orbit[0]]
    k = mats[0].m
    acc = QMat.zeros(k, k)
    for g in range(G.order):
        c = vals[G.class_of(G.inv(g))].as_fraction()
        if c:
            acc = acc + mats[g] * c
    e = acc * Fraction(deg, G.order)
    if e * e != e:  # pragma: no cover
        raise InternalInvariantError("isotypical projector is not idempotent")
    return e


def commutant_dimension(action_mats, basis_rows):
    """Dimension over Q of the algebra of matrices commuting with every
    given action matrix on the span of ``basis_rows``.

    The action is restricted to the span (which must be invariant), and the
    commutant is the kernel of the stacked Sylvester maps X -> RX - XR.
    """
    B = QMat(basis_rows).transpose()  # columns span the block
    k = B.n
    restricted = [B.solve_matrix(R * B) for R in action_mats]
    rows = []
    for R in restricted:
        r = R.rows
        for a in range(k):
            for b in range(k):
                row = [Fraction(0)] * (k * k)
                for c in range(k):
                    row[c * k + b] += r[a][c]
                    row[a * k + c] -= r[c][b]
                rows.append(row)
    if not rows:
        return k * k
    return k * k - QMat(rows).rank()


def commutant_oracle(datum, table, i, cap=24):
    """Endomorphism data of the isotypical block of H_1 containing chi_i,
    computed directly from deck-transformation matrices.

    Returns the commutant dimension together with the division-algebra
    dimension and Schur index from the character-theoretic route, asserting
    the Morita consistency relation between them.
    """
    orbit = table.orbit_of(i)
    cx, mats = _h1_action(datum, cap)
    mults = cx.isotype_multiplicities(table)
    m = mults[i]
    if m == 0:
        raise ValidationError("character does not occur in H^1")
    e = _isotypic_projector(table, orbit, mats)
    basis, _ = e.transpose().rref()  # rows span the image (column space) of e
    block_dim = basis.m
    deg = table.degrees[i]
    f = len(orbit)
    if block_dim != m * deg * f:  # pragma: no cover
        raise InternalInvariantError("isotypical block has unexpected dimension")
    gens = datum.group.gens or [0]
    cdim = commutant_dimension([mats[g] for g in gens], basis.rows)
    s = schur_index(table, i)
    ddim = division_algebra_dimension(table, i)
    if m % s:  # pragma: no cover
        raise InternalInvariantError("Schur index does not divide the multiplicity")
    r_q = m // s
    if cdim != r_q * r_q * ddim:  # pragma: no cover
        raise InternalInvariantError(
            f"commutant dimension {cdim} inconsistent with matrix size "
            f"{r_q} over a division algebra of dimension {ddim}"
        )
    return {
        "character": i,
        "orbit": list(orbit),
        "h1_multiplicity": m,
        "block_dimension": block_dim,
        "commutant_dimension": cdim,
        "schur_index": s,
        "field_degree": f,
        "division_algebra_dimension": ddim,
        "rational_multiplicity": r_q,
    }
