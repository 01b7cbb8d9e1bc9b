"""Shared fixtures: a seeded corpus of randomized valid cover data.

The corpus holds at least 200 valid ``CoverDatum`` instances over groups of
order at most 16, with quotient genus at most 4 and at most 6 branch
points, as required by the acceptance criteria.  Character tables are
computed once per group and shared across instances.
"""

import random

import pytest

from gcover import groups
from gcover.characters import CharacterTable
from gcover.cover import CoverDatum
from gcover.errors import ValidationError

CORPUS_SEED = 20260814
CORPUS_SIZE = 210


def _group_pool():
    pool = [
        groups.cyclic(2),
        groups.cyclic(3),
        groups.cyclic(4),
        groups.cyclic(5),
        groups.cyclic(6),
        groups.cyclic(7),
        groups.cyclic(8),
        groups.cyclic(9),
        groups.cyclic(12),
        groups.klein_four(),
        groups.abelian([2, 4]),
        groups.abelian([2, 2, 2]),
        groups.abelian([4, 4]),
        groups.elementary_abelian(2, 4),
        groups.dihedral(3),
        groups.dihedral(4),
        groups.dihedral(5),
        groups.dihedral(6),
        groups.dihedral(8),
        groups.quaternion(),
        groups.generalized_quaternion(16),
        groups.alternating(4),
        groups.direct_product(groups.cyclic(2), groups.dihedral(3)),
    ]
    assert all(G.order <= 16 for G in pool)
    return pool


def _closing_branch_datum(rng, G, gbar, nbar):
    """Random datum with nbar >= 1: the last branch image closes the
    surface relation."""
    handles = [rng.randrange(G.order) for _ in range(2 * gbar)]
    branches = [rng.randrange(1, G.order) for _ in range(nbar - 1)]
    w = 0
    for i in range(gbar):
        w = G.mul(w, G.commutator(handles[2 * i], handles[2 * i + 1]))
    for x in branches:
        w = G.mul(w, x)
    last = G.inv(w)
    if last == 0:
        return None
    branches.append(last)
    try:
        return CoverDatum(G, gbar, handles, branches)
    except ValidationError:
        return None


def _unramified_datum(rng, G, gbar):
    """Random datum with no branch points: the last handle pair is solved
    so that the product of commutators is the identity."""
    if gbar == 0:
        return None
    handles = [rng.randrange(G.order) for _ in range(2 * (gbar - 1))]
    w = 0
    for i in range(gbar - 1):
        w = G.mul(w, G.commutator(handles[2 * i], handles[2 * i + 1]))
    target = G.inv(w)
    a_last = rng.randrange(G.order)
    candidates = [b for b in range(G.order)
                  if G.commutator(a_last, b) == target]
    if not candidates:
        return None
    handles += [a_last, rng.choice(candidates)]
    try:
        return CoverDatum(G, gbar, handles, [])
    except ValidationError:
        return None


def build_corpus(seed=CORPUS_SEED, size=CORPUS_SIZE):
    """Deterministic list of (datum, table) pairs."""
    rng = random.Random(seed)
    pool = _group_pool()
    tables = {}
    corpus = []
    attempts = 0
    while len(corpus) < size and attempts < 200 * size:
        attempts += 1
        G = pool[rng.randrange(len(pool))]
        gbar = rng.randint(0, 4)
        nbar = rng.randint(0, 6)
        if nbar == 0:
            datum = _unramified_datum(rng, G, gbar)
        else:
            datum = _closing_branch_datum(rng, G, gbar, nbar)
        if datum is None:
            continue
        key = id(G)
        if key not in tables:
            tables[key] = CharacterTable(G)
        corpus.append((datum, tables[key]))
    if len(corpus) < size:  # pragma: no cover
        raise AssertionError("corpus construction starved")
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """A deterministic thinned sample for the more expensive checks."""
    return corpus[::7]
