"""The subfamily ``M(0; [2, n1+2], [3, 3], -3)``: Goeritz matrix, determinant, signature.

The Goeritz matrix and the Gordon-Litherland correction term are
transcribed constants for this subfamily; they are not derived from a
diagram here.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import SymIntMatrix, det_exact, signature_exact
from .errors import DomainError, IntegralityViolation
from .montesinos import FamilyParams

# Sum over type II crossings of the checkerboard-coloured diagram.
CORRECTION_TERM = 3 - 3


@dataclass(frozen=True)
class GoeritzFamilyInstance:
    n1: int
    G: SymIntMatrix


@dataclass(frozen=True)
class SequenceTerm:
    index: int
    a: int
    n1: int

    @property
    def params(self) -> FamilyParams:
        return FamilyParams(1, self.n1, 2, 1, -3)


def goeritz_matrix(n1: int) -> GoeritzFamilyInstance:
    if n1 < 1:
        raise DomainError(f"n1 must be >= 1, got {n1}")
    rows = [
        [2, -1, 0, 0, 0, 0, 0, 0],
        [-1, -1, 1, 0, 0, 1, 0, 0],
        [0, 1, -2, 1, 0, 0, 0, 0],
        [0, 0, 1, -2, 1, 0, 0, 0],
        [0, 0, 0, 1, 2, 0, 0, -3],
        [0, 1, 0, 0, 0, -2, 1, 0],
        [0, 0, 0, 0, 0, 1, n1 + 1, -n1 - 2],
        [0, 0, 0, 0, -3, 0, -n1 - 2, n1 + 6],
    ]
    return GoeritzFamilyInstance(n1, SymIntMatrix.from_rows(rows))


def family_determinant(n1: int) -> int:
    return det_exact(goeritz_matrix(n1).G)


def family_signature(n1: int) -> int:
    """Knot signature: signature of the Goeritz matrix minus the correction term."""
    return signature_exact(goeritz_matrix(n1).G).signature - CORRECTION_TERM


def square_det_sequence(count: int) -> list[SequenceTerm]:
    """Square determinants ``a_k^2 = 26*n1 + 51`` from ``a_0 = 21``, steps alternating +10, +16."""
    if count < 1:
        raise DomainError("count must be >= 1")
    terms = []
    a = 21
    for k in range(count):
        num = a * a - 51
        if num % 26:
            raise IntegralityViolation(f"a_{k} = {a}: {a}^2 - 51 is not divisible by 26")
        terms.append(SequenceTerm(k, a, num // 26))
        a += 10 if k % 2 == 0 else 16
    return terms


def is_square(x: int) -> bool:
    return x >= 0 and math.isqrt(x) ** 2 == x
