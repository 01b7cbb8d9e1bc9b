"""Cross-check of the compiled integer kernels against the pure-Python
reference implementation."""

import random

import pytest

from gcover import _purekernels, kernels


def _random_matrix(rng, m, n, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def test_backend_names():
    assert _purekernels.BACKEND == "pure"
    assert kernels.BACKEND in ("pure", "compiled")


try:
    from gcover import _speedups
except ImportError:  # pragma: no cover - compiled core absent
    _speedups = None

# both implementations must exist in this build; the compiled one is only
# exercised when the extension compiled successfully
BACKENDS = [_purekernels] + ([_speedups] if _speedups is not None else [])


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda b: b.BACKEND)
def test_imat_mul_matches(impl):
    rng = random.Random(101)
    for _ in range(25):
        m, k, n = rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 6)
        A = _random_matrix(rng, m, k)
        B = _random_matrix(rng, k, n)
        expected = [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(n)]
                    for i in range(m)]
        assert impl.imat_mul(A, B) == expected


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda b: b.BACKEND)
def test_imat_rref_frozen(impl):
    assert impl.imat_rref([[2, 1], [0, 3]]) == ([[1, 0], [0, 1]], [0, 1])
    assert impl.imat_rref([[2, 4], [1, 2]]) == ([[1, 2]], [0])
    assert impl.imat_rref([[0, 0], [0, 0]]) == ([], [])


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda b: b.BACKEND)
def test_imat_det_frozen(impl):
    assert impl.imat_det([[3]]) == 3
    assert impl.imat_det([[1, 2], [3, 4]]) == -2
    assert impl.imat_det([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    assert impl.imat_det([[1, 1], [1, 1]]) == 0


@pytest.mark.skipif(_speedups is None, reason="compiled extension not built")
def test_backends_agree_on_random_input():
    rng = random.Random(20260814)
    for _ in range(40):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        A = _random_matrix(rng, m, n, lo=-20, hi=20)
        assert _speedups.imat_rref(A) == _purekernels.imat_rref(A)
        if m == n:
            assert _speedups.imat_det(A) == _purekernels.imat_det(A)
        B = _random_matrix(rng, n, rng.randint(1, 7))
        assert _speedups.imat_mul(A, B) == _purekernels.imat_mul(A, B)


@pytest.mark.skipif(_speedups is None, reason="compiled extension not built")
def test_backends_agree_on_big_entries():
    # fraction-free elimination grows entries fast; both routes must stay exact
    rng = random.Random(7)
    big = 10**12
    A = _random_matrix(rng, 5, 5, lo=-big, hi=big)
    assert _speedups.imat_det(A) == _purekernels.imat_det(A)
    assert _speedups.imat_rref(A) == _purekernels.imat_rref(A)


def test_rref_canonical_form_properties():
    rng = random.Random(11)
    from math import gcd
    for _ in range(30):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        A = _random_matrix(rng, m, n)
        rows, pivots = kernels.imat_rref(A)
        assert len(rows) == len(pivots)
        for r, p in zip(rows, pivots):
            assert r[p] > 0  # positive pivots
            assert all(r[j] == 0 for j in range(p))
            g = 0
            for x in r:
                g = gcd(g, abs(x))
            assert g in (0, 1)  # primitive rows
        for i, p in enumerate(pivots):  # pivot columns cleared elsewhere
            for r2 in rows[:i] + rows[i + 1:]:
                assert r2[p] == 0
