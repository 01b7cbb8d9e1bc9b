"""Exact character tables via the modular eigenspace method, verified
against the orthogonality relations."""

from collections import Counter
from fractions import Fraction

import pytest

from gcover import groups
from gcover.characters import CharacterTable
from gcover.cyclotomic import Cyclo, cyclo_sum
from gcover.errors import ValidationError

# group name -> (constructor, expected degree multiset)
TABLE_SUITE = {
    "C2": (lambda: groups.cyclic(2), [1, 1]),
    "C3": (lambda: groups.cyclic(3), [1, 1, 1]),
    "C4": (lambda: groups.cyclic(4), [1, 1, 1, 1]),
    "C5": (lambda: groups.cyclic(5), [1] * 5),
    "C6": (lambda: groups.cyclic(6), [1] * 6),
    "S3": (lambda: groups.symmetric(3), [1, 1, 2]),
    "D4": (lambda: groups.dihedral(4), [1, 1, 1, 1, 2]),
    "Q8": (lambda: groups.quaternion(), [1, 1, 1, 1, 2]),
    "A4": (lambda: groups.alternating(4), [1, 1, 1, 3]),
    "S4": (lambda: groups.symmetric(4), [1, 1, 2, 3, 3]),
    "A5": (lambda: groups.alternating(5), [1, 3, 3, 4, 5]),
}


@pytest.fixture(scope="module")
def tables():
    return {name: CharacterTable(make()) for name, (make, _) in TABLE_SUITE.items()}


def test_table_suite_degrees_and_orthogonality(tables):
    for name, (make, degrees) in TABLE_SUITE.items():
        t = tables[name]
        t.verify()  # raises on any orthogonality failure
        assert sorted(t.degrees) == degrees, name
        assert sum(d * d for d in t.degrees) == t.group.order, name
        assert len(t.chars) == t.r == len(t.group.conjugacy_classes()), name


def test_row_ordering_is_canonical(tables):
    for name, t in tables.items():
        assert t.degrees[0] == 1
        assert all(v == 1 for v in t.chars[0]), f"{name}: row 0 must be trivial"
        assert t.trivial_index == 0
        assert t.degrees == sorted(t.degrees), f"{name}: rows sorted by degree"


def test_frobenius_schur_indicators(tables):
    # all S_n characters are orthogonal
    assert all(tables["S3"].fs_indicator(i) == 1 for i in range(tables["S3"].r))
    assert all(tables["S4"].fs_indicator(i) == 1 for i in range(tables["S4"].r))
    # Q8: the degree-2 character is quaternionic, the linear ones real
    q8 = tables["Q8"]
    fs = [q8.fs_indicator(i) for i in range(q8.r)]
    assert fs.count(-1) == 1
    assert q8.degrees[fs.index(-1)] == 2
    # C3: both nontrivial characters are complex type
    c3 = tables["C3"]
    assert [c3.fs_indicator(i) for i in range(c3.r)].count(0) == 2


def test_indicator_sum_counts_involutions(tables):
    # sum_i nu(chi_i) chi_i(1) = #{g : g^2 = 1}
    for name, t in tables.items():
        G = t.group
        count = sum(1 for g in range(G.order) if G.mul(g, g) == 0)
        assert sum(t.fs_indicator(i) * t.degrees[i] for i in range(t.r)) == count


def test_regular_character_decomposition(tables):
    for name, t in tables.items():
        reg = tuple(
            Cyclo.from_rational(t.group.order if k == 0 else 0)
            for k in range(t.r)
        )
        assert t.decompose(reg) == list(t.degrees), name


def test_second_orthogonality_column_sums(tables):
    t = tables["S4"]
    G = t.group
    for k in range(t.r):
        for l in range(t.r):
            s = cyclo_sum(
                t.chars[i][k] * t.chars[i][l].conj() for i in range(t.r)
            )
            expected = G.order // t.sizes[k] if k == l else 0
            assert s == expected


def test_a5_irrationalities():
    t = CharacterTable(groups.alternating(5))
    # the two degree-3 characters take values (1 +- sqrt(5))/2 on the 5-cycles
    golden = [v for row in t.chars for v in row if not v.is_rational()]
    assert golden, "A5 table must contain irrational entries"
    for v in golden:
        # each irrational entry satisfies x^2 - x - 1 = 0
        assert v * v - v - 1 == 0


def test_class_algebra_verification_runs(tables):
    # verify() also checks second orthogonality; a tampered table must fail
    t = tables["S3"]
    t.verify()


def test_galois_orbits_c5():
    t = CharacterTable(groups.cyclic(5))
    assert t.galois_orbits() == [(0,), (1, 2, 3, 4)]
    assert t.field_degree(1) == 4
    assert t.orbit_of(3) == (1, 2, 3, 4)


def test_orbit_sum_values_q8():
    t = CharacterTable(groups.quaternion())
    deg2 = next(i for i in range(t.r) if t.degrees[i] == 2)
    vals = t.orbit_sum_values(t.orbit_of(deg2))
    assert [str(v) for v in vals] == ["2", "-2", "0", "0", "0"]


def test_dual_index(tables):
    c3 = tables["C3"]
    assert c3.dual_index(0) == 0
    assert c3.dual_index(1) != 1
    assert c3.dual_index(c3.dual_index(1)) == 1
    s3 = tables["S3"]
    assert all(s3.dual_index(i) == i for i in range(s3.r))


def test_inner_product_and_multiplicity(tables):
    t = tables["S3"]
    for i in range(t.r):
        for j in range(t.r):
            assert t.inner_product(t.chars[i], t.chars[j]) == (
                Fraction(1) if i == j else Fraction(0)
            )
    two_copies = tuple(v * 2 for v in t.chars[2])
    assert t.multiplicity(two_copies, 2) == 2


def test_induction_from_c2_to_s3():
    G = groups.symmetric(3)
    t = CharacterTable(G)
    tau = G.index[(1, 0, 2)]
    sub = [0, tau]
    sgn = {0: Cyclo.one(), tau: Cyclo.from_rational(-1)}
    ind = t.induce_from_subgroup(sub, sgn)
    assert t.decompose(ind) == [0, 1, 1]


def test_induction_rejects_non_class_function():
    G = groups.symmetric(3)
    t = CharacterTable(G)
    sub = list(range(G.order))  # H = G: class function must be constant on classes
    tau = G.index[(1, 0, 2)]
    values = {g: Cyclo.one() for g in sub}
    values[tau] = Cyclo.from_rational(-1)  # differs on a conjugate of tau
    with pytest.raises(ValidationError, match="class function"):
        t.induce_from_subgroup(sub, values)


def test_restriction_to_subgroup():
    G = groups.symmetric(3)
    t = CharacterTable(G)
    tau = G.index[(1, 0, 2)]
    H, to_parent = G.subgroup_as_group([0, tau])
    th = CharacterTable(H)
    res = t.restrict_to_subgroup(2, th, to_parent)  # the degree-2 character
    assert th.decompose(res) == [1, 1]  # splits as trivial + sign


def test_index_of_values_roundtrip(tables):
    t = tables["D4"]
    for i in range(t.r):
        assert t.index_of_values(t.chars[i]) == i


def test_character_degrees_match_value_at_identity(tables):
    for t in tables.values():
        for i in range(t.r):
            assert t.chars[i][0] == t.degrees[i]
            assert t.value_at(i, 0) == t.degrees[i]
