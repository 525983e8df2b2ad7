import pytest

from oracles import cofactor_det
from slicecheck.errors import DomainError
from slicecheck.goeritz import (
    family_determinant,
    family_signature,
    goeritz_matrix,
    is_square,
    square_det_sequence,
)
from slicecheck.montesinos import is_knot, knot_determinant, nr_value


def test_goeritz_entries():
    g = goeritz_matrix(15).G
    assert g.order == 8
    assert (g[6, 6], g[6, 7], g[7, 6], g[7, 7]) == (16, -17, -17, 21)
    assert g[4, 4] == 2 and g[4, 7] == -3


def test_goeritz_domain():
    with pytest.raises(DomainError):
        goeritz_matrix(0)


@pytest.mark.parametrize("n1, det", [(1, 77), (15, 441), (35, 961), (83, 2209)])
def test_family_determinant(n1, det):
    assert family_determinant(n1) == det
    assert cofactor_det(goeritz_matrix(n1).G.tolist()) == det


def test_determinant_formula_range():
    assert all(family_determinant(n1) == 26 * n1 + 51 for n1 in range(1, 201))


def test_goeritz_and_plumbing_agree():
    from slicecheck.montesinos import FamilyParams
    for n1 in range(1, 51):
        assert family_determinant(n1) == knot_determinant(FamilyParams(1, n1, 2, 1, -3))


@pytest.mark.parametrize("n1", [1, 15, 100])
def test_family_signature(n1):
    assert family_signature(n1) == 0


def test_sequence_first_terms():
    terms = square_det_sequence(4)
    assert [(t.a, t.n1) for t in terms] == [(21, 15), (31, 35), (47, 83), (57, 123)]
    assert 26 * 83 + 51 == 2209 == 47**2
    assert 26 * 123 + 51 == 3249 == 57**2


def test_sequence_properties():
    terms = square_det_sequence(20)
    n1s = [t.n1 for t in terms]
    assert n1s == sorted(set(n1s))
    for t in terms:
        assert 26 * t.n1 + 51 == t.a**2
        assert is_square(26 * t.n1 + 51)
        assert is_knot(t.params) and nr_value(t.params) > 0
    for k in range(1, 19):
        assert terms[k + 1].a - terms[k - 1].a == 26


def test_sequence_domain():
    with pytest.raises(DomainError):
        square_det_sequence(0)
