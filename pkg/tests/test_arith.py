import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cofactor_det, permutation_det
from slicecheck.arith import (
    SymIntMatrix,
    det_exact,
    is_negative_definite,
    leading_minors,
    permute,
    signature_exact,
)
from slicecheck.goeritz import goeritz_matrix


def square(max_n=4, lo=-6, hi=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))


def symmetric(max_n=5, lo=-5, hi=5):
    def build(n):
        return st.lists(st.integers(lo, hi), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2).map(
            lambda xs: _sym_from(n, xs))
    return st.integers(1, max_n).flatmap(build)


def _sym_from(n, xs):
    m = [[0] * n for _ in range(n)]
    it = iter(xs)
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = next(it)
    return m


def identity(n, scale=1):
    return [[scale if i == j else 0 for j in range(n)] for i in range(n)]


def test_det_examples():
    assert det_exact(identity(4)) == 1
    assert det_exact([[-3, 1], [1, -2]]) == 5
    assert det_exact(goeritz_matrix(15).G) == 441


def test_det_singular_and_pivoting():
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([[1, 2], [2, 4]]) == 0
    assert det_exact([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1


def test_det_big_integers():
    big = 10**40
    m = [[big, 1], [1, big]]
    assert det_exact(m) == big * big - 1


@given(square())
def test_det_matches_cofactor(m):
    assert det_exact(m) == cofactor_det(m) == permutation_det(m)


@settings(max_examples=200)
@given(square(max_n=6), st.randoms(use_true_random=False))
def test_det_permutation_invariant(m, rnd):
    perm = list(range(len(m)))
    rnd.shuffle(perm)
    assert det_exact(permute(m, perm)) == det_exact(m)


def test_signature_examples():
    assert signature_exact(identity(4, -1)) == (0, 4, 0)
    assert signature_exact([[-3, 1], [1, -2]]) == (0, 2, 0)
    inertia = signature_exact(goeritz_matrix(15).G)
    assert inertia == (4, 4, 0)
    assert inertia.signature == 0


def test_signature_hyperbolic_and_degenerate():
    assert signature_exact([[0, 1], [1, 0]]) == (1, 1, 0)
    assert signature_exact([[0, 0], [0, 0]]) == (0, 0, 2)
    assert signature_exact([[0, 2, 0], [2, 0, 0], [0, 0, 0]]) == (1, 1, 1)
    assert signature_exact([[1, 1], [1, 1]]) == (1, 0, 1)


@settings(max_examples=300)
@given(symmetric())
def test_signature_consistent_with_determinant(m):
    inertia = signature_exact(m)
    n = len(m)
    assert sum(inertia) == n
    det = cofactor_det(m)
    if det == 0:
        assert inertia.n_zero > 0
    else:
        assert inertia.n_zero == 0
        assert (det < 0) == (inertia.n_minus % 2 == 1)


@settings(max_examples=300)
@given(symmetric())
def test_negative_definite_iff_full_negative_inertia(m):
    n = len(m)
    assert is_negative_definite(m) == (signature_exact(m) == (0, n, 0))


@given(symmetric(max_n=4))
def test_signature_congruence_invariant(m):
    # P^T M P with unimodular P preserves inertia.
    n = len(m)
    rng = random.Random(len(m) * 7 + m[0][0])
    p = identity(n)
    for _ in range(3):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            for r in range(n):
                p[r][j] += rng.choice((-1, 1)) * p[r][i]
    pt = [list(r) for r in zip(*p)]
    mp = [[sum(m[i][k] * p[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    ptmp = [[sum(pt[i][k] * mp[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert signature_exact(ptmp) == signature_exact(m)


def test_is_negative_definite_examples():
    assert is_negative_definite([[-2]])
    assert is_negative_definite([[-3, 1], [1, -2]])
    assert not is_negative_definite([[0]])
    assert leading_minors([[-3, 1], [1, -2]]) == [-3, 5]


def test_symintmatrix_validation():
    m = SymIntMatrix.from_rows([[1, 2], [2, 3]])
    assert m.order == 2 and m[0, 1] == 2 and m.diagonal() == (1, 3)
    with pytest.raises(ValueError):
        SymIntMatrix.from_rows([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        SymIntMatrix.from_rows([[1, 2]])
