import itertools
import random
from fractions import Fraction

import pytest

from oracles import cofactor_det
from slicecheck.errors import DomainError
from slicecheck.montesinos import (
    FamilyParams,
    MontesinosData,
    family_to_montesinos,
    is_knot,
    knot_determinant,
    nr_value,
    parity_report,
    raw_determinant,
)

DESK_GRID = [FamilyParams(*t) for t in itertools.product(range(1, 4), range(1, 5), range(1, 4),
                                                          range(1, 5), range(-5, 0))]


@pytest.mark.parametrize("bad", [(0, 1, 1, 1, -1), (1, 0, 1, 1, -1), (1, 1, 1, 1, 0), (1, 1, 1, 1, 2)])
def test_params_validation(bad):
    with pytest.raises(DomainError):
        FamilyParams(*bad)


def test_montesinos_data_validation():
    with pytest.raises(DomainError):
        MontesinosData(0, ())
    with pytest.raises(DomainError):
        MontesinosData(0, (Fraction(0),))


@pytest.mark.parametrize("params, tangles", [
    ((1, 1, 2, 1, -3), (Fraction(5, 3), Fraction(8, 3), Fraction(-3))),
    ((1, 15, 2, 1, -3), (Fraction(33, 17), Fraction(8, 3), Fraction(-3))),
    ((1, 1, 1, 1, -1), (Fraction(5, 3), Fraction(5, 3), Fraction(-1))),
])
def test_family_to_montesinos(params, tangles):
    data = family_to_montesinos(FamilyParams(*params))
    assert data.e == 0
    assert data.tangles == tangles


def test_nr_value_examples():
    assert nr_value(FamilyParams(1, 1, 2, 1, -3)) == Fraction(77, 120)
    assert nr_value(FamilyParams(1, 1, 1, 1, -1)) == Fraction(1, 5)


def test_nr_value_positive_for_example_family():
    for n1 in range(1, 21):
        for n2 in range(1, 21):
            assert nr_value(FamilyParams(1, n1, 2, n2, -3)) > 0


def test_is_knot_examples():
    assert is_knot(FamilyParams(1, 2, 2, 1, -3))
    assert not is_knot(FamilyParams(1, 1, 2, 2, -3))
    assert is_knot(FamilyParams(1, 15, 2, 1, -3))


def test_example_family_knot_condition():
    # q = -3, m1 = 1, m2 = 2: a knot exactly when n1 is even or n2 is odd.
    for n1 in range(1, 9):
        for n2 in range(1, 9):
            assert is_knot(FamilyParams(1, n1, 2, n2, -3)) == (n1 % 2 == 0 or n2 % 2 == 1)


def test_knot_determinant_examples():
    assert knot_determinant(FamilyParams(1, 15, 2, 1, -3)) == 441
    assert knot_determinant(FamilyParams(1, 35, 2, 1, -3)) == 961
    assert knot_determinant(FamilyParams(1, 1, 2, 1, -3)) == 77


def test_knot_determinant_small_by_cofactor():
    from slicecheck.plumbing import build_family_reduced, intersection_form
    p = FamilyParams(1, 1, 2, 1, -3)
    assert abs(cofactor_det(intersection_form(build_family_reduced(p)).tolist())) == 77


def test_determinant_is_scaled_nr_value():
    # |det| = |alpha_1 alpha_2 q| * nr_value for a three-tangle star.
    for p in DESK_GRID[::7]:
        a1 = (p.m1 + 1) * (p.n1 + 2) - 1
        a2 = (p.m2 + 1) * (p.n2 + 2) - 1
        assert knot_determinant(p) == abs(a1 * a2 * p.q * nr_value(p))


def test_blowdown_determinant_invariance_on_grid():
    for p in DESK_GRID:
        assert raw_determinant(p) == knot_determinant(p)


def test_knot_determinant_matches_goeritz_formula():
    for n1 in range(1, 51):
        assert knot_determinant(FamilyParams(1, n1, 2, 1, -3)) == 26 * n1 + 51


def test_is_knot_symmetric_in_legs():
    for p in DESK_GRID:
        assert is_knot(p) == is_knot(p.swapped())
        assert knot_determinant(p) == knot_determinant(p.swapped())


def test_parity_classes_constant():
    report = parity_report(samples=4)
    assert len(report.classes) == 32
    for cls in report.classes:
        assert len(set(cls.representatives)) >= 4
        assert cls.consistent, cls


def test_parity_constant_on_random_members():
    rng = random.Random(1)
    report = {c.parities: c.is_link for c in parity_report().classes}
    for _ in range(200):
        vals = [rng.randint(1, 12) for _ in range(4)] + [-rng.randint(1, 12)]
        p = FamilyParams(*vals)
        bits = tuple(abs(v) % 2 for v in vals)
        assert (not is_knot(p)) == report[bits]


def test_parity_report_against_listed_items():
    report = parity_report()
    assert report.matches_items
    assert len(report.excluded) == 12
    assert report.item_assignment_total == 13
    assert report.matches_stated_count
