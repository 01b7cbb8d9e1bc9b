"""The chain-complex route to H^1: cell structure, boundary stability,
deck-action traces, and isotypical multiplicities."""

import pytest

from gcover import groups
from gcover.characters import CharacterTable
from gcover.cover import CoverDatum
from gcover.covergraph import CoverComplex
from gcover.errors import UnsupportedComputation
from gcover.hodge import h1_chain_complex_oracle, h1_character


def _complexes():
    c2 = CoverDatum(groups.cyclic(2), 0, [], [1] * 6)
    G3 = groups.cyclic(3)
    c3 = CoverDatum(G3, 2, [1, 0, 0, 0], [])
    S3 = groups.symmetric(3)
    tau, rho = S3.index[(1, 0, 2)], S3.index[(1, 2, 0)]
    s3 = CoverDatum(S3, 0, [], [tau, tau, rho, S3.inv(rho)])
    triv = CoverDatum(FiniteGroupTrivial(), 2, [0, 0, 0, 0], [])
    return [c2, c3, s3, triv]


def FiniteGroupTrivial():
    from gcover.groups import FiniteGroup

    return FiniteGroup.from_permutations([])


def test_h1_dimension_is_twice_genus():
    for datum in _complexes():
        cx = CoverComplex(datum)
        assert cx.h1_dim() == 2 * datum.total_genus()


def test_face_count_matches_euler_characteristic():
    for datum in _complexes():
        cx = CoverComplex(datum)
        G = datum.group
        V = G.order
        E = G.order * cx.n_labels
        faces = len(cx.face_words())
        # chi of the closed surface: V - E + F with the branch discs filling
        assert V - E + faces == 2 - 2 * datum.total_genus()


def test_boundary_stability_under_deck_action():
    for datum in _complexes():
        cx = CoverComplex(datum)
        for h in range(datum.group.order):
            assert cx.verify_boundary_stability(h)


def test_action_traces_are_integers_with_identity_trace():
    for datum in _complexes():
        cx = CoverComplex(datum)
        assert cx.trace_on_h1(0) == 2 * datum.total_genus()


def test_lefschetz_trace_identity():
    """For h != 1 the homology trace satisfies the surface Lefschetz
    relation 2 - tr(h | H_1) = # fixed points of h."""
    for datum in _complexes():
        if datum.group.order == 1:
            continue
        cx = CoverComplex(datum)
        for h in range(1, datum.group.order):
            assert 2 - cx.trace_on_h1(h) == datum.fixed_point_count(h)


def test_isotype_multiplicities_frozen():
    c2, c3, s3, triv = _complexes()
    assert list(CoverComplex(c2).isotype_multiplicities(
        CharacterTable(c2.group))) == [0, 4]
    assert list(CoverComplex(c3).isotype_multiplicities(
        CharacterTable(c3.group))) == [4, 2, 2]
    assert list(CoverComplex(s3).isotype_multiplicities(
        CharacterTable(s3.group))) == [0, 0, 2]
    assert list(CoverComplex(triv).isotype_multiplicities(
        CharacterTable(triv.group))) == [4]


def test_q8_free_multiplicities():
    Q8 = groups.quaternion()
    i, j = Q8.gens
    datum = CoverDatum(Q8, 2, [i, i, j, j], [])
    table = CharacterTable(Q8)
    mult = CoverComplex(datum).isotype_multiplicities(table)
    assert list(mult) == [4, 2, 2, 2, 4]
    assert sum(m * table.degrees[k] for k, m in enumerate(mult)) == 2 * 9


def test_oracle_cap():
    G = groups.elementary_abelian(2, 4)
    handles = [G.gens[0], 0, G.gens[1], 0, G.gens[2], 0, G.gens[3], 0]
    datum = CoverDatum(G, 4, handles, [])
    table = CharacterTable(G)
    with pytest.raises(UnsupportedComputation):
        h1_chain_complex_oracle(datum, table, cap=8)


def test_oracle_equals_formula_spot_checks(small_corpus):
    for datum, table in small_corpus:
        oracle = h1_chain_complex_oracle(datum, table, cap=24)
        assert list(oracle) == list(h1_character(datum, table))
