"""Schur indices, division algebras, unitary factor types, and the
independent commutant oracle."""

import pytest

from gcover import groups
from gcover.characters import CharacterTable
from gcover.cover import CoverDatum
from gcover.errors import UnsupportedComputation, ValidationError
from gcover.unitary import (
    commutant_oracle,
    division_algebra_dimension,
    isotype_report,
    schur_index,
    signature_pair,
)


# --- Schur indices ---------------------------------------------------------------


def test_schur_indices_frozen():
    s3 = CharacterTable(groups.symmetric(3))
    assert [schur_index(s3, i) for i in range(s3.r)] == [1, 1, 1]

    c4 = CharacterTable(groups.cyclic(4))
    assert all(schur_index(c4, i) == 1 for i in range(c4.r))

    d4 = CharacterTable(groups.dihedral(4))
    assert all(schur_index(d4, i) == 1 for i in range(d4.r))

    a4 = CharacterTable(groups.alternating(4))
    assert all(schur_index(a4, i) == 1 for i in range(a4.r))


def test_schur_index_q8():
    t = CharacterTable(groups.quaternion())
    expect = {1: 1, 2: 2}
    for i in range(t.r):
        assert schur_index(t, i) == expect[t.degrees[i]]


def test_schur_index_q16():
    t = CharacterTable(groups.generalized_quaternion(16))
    for i in range(t.r):
        s = schur_index(t, i)
        if t.fs_indicator(i) == -1:
            assert s == 2
        else:
            assert s == 1


def test_division_algebra_dimensions():
    c3 = CharacterTable(groups.cyclic(3))
    nontrivial = 1
    assert c3.field_degree(nontrivial) == 2
    assert division_algebra_dimension(c3, nontrivial) == 2  # the field itself

    q8 = CharacterTable(groups.quaternion())
    deg2 = next(i for i in range(q8.r) if q8.degrees[i] == 2)
    assert division_algebra_dimension(q8, deg2) == 4  # rational quaternions

    s3 = CharacterTable(groups.symmetric(3))
    assert division_algebra_dimension(s3, 2) == 1


# --- signatures and factor names --------------------------------------------------


def test_signature_pair_requires_complex_type():
    datum = CoverDatum(groups.cyclic(2), 0, [], [1] * 6)
    table = CharacterTable(datum.group)
    with pytest.raises(ValidationError, match="complex-type"):
        signature_pair(datum, table, 1)


def test_signature_pair_c3():
    G = groups.cyclic(3)
    datum = CoverDatum(G, 0, [], [1, 1, 1])
    table = CharacterTable(G)
    pairs = {i: signature_pair(datum, table, i) for i in (1, 2)}
    assert sorted(pairs.values()) == [(0, 1), (1, 0)]
    i0 = next(i for i in (1, 2) if pairs[i] == (0, 1))
    assert pairs[table.dual_index(i0)] == (1, 0)


def test_isotype_report_hyperelliptic():
    datum = CoverDatum(groups.cyclic(2), 0, [], [1] * 6)
    rep = isotype_report(datum, CharacterTable(datum.group))
    assert rep["genus"] == 2
    assert len(rep["factors"]) == 1
    f = rep["factors"][0]
    assert f["type"] == "real"
    assert f["factor"] == "symplectic group, 4 real variables"
    assert f["h1_multiplicity"] == 4
    assert f["schur_index"] == 1


def test_isotype_report_quaternionic():
    Q8 = groups.quaternion()
    i, j = Q8.gens
    k = Q8.mul(i, j)
    datum = CoverDatum(Q8, 0, [], [i, j, Q8.inv(k)])
    rep = isotype_report(datum, CharacterTable(Q8))
    quat = [f for f in rep["factors"] if f["type"] == "quaternionic"]
    assert len(quat) == 1
    assert quat[0]["factor"] == "quaternionic unitary group, 1 variables"
    assert quat[0]["h1_multiplicity"] == 2
    assert quat[0]["schur_index"] == 2
    assert quat[0]["division_algebra_dimension"] == 4


def test_isotype_report_complex_signature():
    G = groups.cyclic(3)
    datum = CoverDatum(G, 0, [], [1, 1, 1])
    rep = isotype_report(datum, CharacterTable(G))
    cplx = [f for f in rep["factors"] if f["type"] == "complex"]
    assert len(cplx) == 1
    f = cplx[0]
    assert f["signature"] in ([0, 1], [1, 0])
    assert f["factor"] == f"complex unitary group, signature ({f['signature'][0]},{f['signature'][1]})"
    assert f["field_degree"] == 2
    assert f["real_field_degree"] == 1


def test_isotype_report_balanced_signature():
    G = groups.cyclic(5)
    datum = CoverDatum(G, 2, [1, 0, 0, 0], [])
    rep = isotype_report(datum, CharacterTable(G))
    for f in rep["factors"]:
        if f["type"] == "complex":
            assert f["signature"] == [1, 1]  # free cover: h0 = h0* = gbar - 1


def test_isotype_report_rank_sum():
    for make, gbar, handles, branches in [
        (groups.quaternion, 2, "gens2", []),
    ]:
        Q8 = make()
        i, j = Q8.gens
        datum = CoverDatum(Q8, 2, [i, i, j, j], [])
        table = CharacterTable(Q8)
        rep = isotype_report(datum, table)
        total = sum(f["h1_multiplicity"] * f["degree"] * f["field_degree"]
                    for f in rep["factors"])
        assert total == 2 * rep["genus"]


# --- commutant oracle ------------------------------------------------------------


def test_commutant_oracle_s3_degree2():
    G = groups.symmetric(3)
    tau, rho = G.index[(1, 0, 2)], G.index[(1, 2, 0)]
    datum = CoverDatum(G, 0, [], [tau, tau, rho, G.inv(rho)])
    table = CharacterTable(G)
    rep = commutant_oracle(datum, table, 2)
    assert rep["division_algebra_dimension"] == 1
    assert rep["schur_index"] == 1
    assert rep["field_degree"] == 1
    assert rep["h1_multiplicity"] == 2
    assert rep["block_dimension"] == 4
    assert rep["commutant_dimension"] == 4  # M_2(Q) has a 4-dim commutant on 2 copies


def test_commutant_oracle_c3_orbit():
    G = groups.cyclic(3)
    datum = CoverDatum(G, 2, [1, 0, 0, 0], [])
    table = CharacterTable(G)
    rep = commutant_oracle(datum, table, 1)
    assert rep["division_algebra_dimension"] == 2  # imaginary quadratic field
    assert rep["schur_index"] == 1
    assert rep["field_degree"] == 2
    assert rep["block_dimension"] == 4
    assert rep["rational_multiplicity"] == 2
    assert rep["commutant_dimension"] == 8  # M_2 over the quadratic field


def test_commutant_oracle_q8_degree2():
    Q8 = groups.quaternion()
    i, j = Q8.gens
    datum = CoverDatum(Q8, 2, [i, i, j, j], [])
    table = CharacterTable(Q8)
    deg2 = next(r for r in range(table.r) if table.degrees[r] == 2)
    rep = commutant_oracle(datum, table, deg2)
    assert rep["schur_index"] == 2
    assert rep["division_algebra_dimension"] == 4
    assert rep["h1_multiplicity"] == 4
    assert rep["block_dimension"] == 8
    assert rep["rational_multiplicity"] == 2
    assert rep["commutant_dimension"] == 16  # M_2(H): 4 * 2^2


def test_commutant_oracle_rejects_missing_character():
    G = groups.cyclic(2)
    datum = CoverDatum(G, 0, [], [1] * 6)
    table = CharacterTable(G)
    with pytest.raises(ValidationError, match="does not occur"):
        commutant_oracle(datum, table, 0)  # trivial character: h1 mult 0


def test_commutant_oracle_cap():
    G = groups.cyclic(2)
    datum = CoverDatum(G, 0, [], [1] * 6)
    table = CharacterTable(G)
    with pytest.raises(UnsupportedComputation):
        commutant_oracle(datum, table, 1, cap=1)
