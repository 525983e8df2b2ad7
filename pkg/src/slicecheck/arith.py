"""Exact integer and rational linear algebra.

Everything here works over Python integers and :class:`fractions.Fraction`,
so results are exact at every size.  Matrices are passed around as
:class:`SymIntMatrix` values or as plain nested sequences of ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

Rational = Fraction

MatrixLike = Union["SymIntMatrix", Sequence[Sequence[int]]]


@dataclass(frozen=True)
class SymIntMatrix:
    """An immutable symmetric matrix of arbitrary-precision integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0:
            raise ValueError("matrix must have positive order")
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "SymIntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.order))


class Inertia(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus


def _as_rows(m: MatrixLike) -> list[list[int]]:
    rows = m.rows if isinstance(m, SymIntMatrix) else m
    out = [[int(x) for x in row] for row in rows]
    n = len(out)
    if any(len(row) != n for row in out):
        raise ValueError("matrix must be square")
    return out


def det_exact(m: MatrixLike) -> int:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    a = _as_rows(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # Exact division is guaranteed by Sylvester's identity.
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def signature_exact(m: MatrixLike) -> Inertia:
    """Exact inertia ``(n_plus, n_minus, n_zero)`` of a symmetric matrix.

    Uses symmetric Gaussian elimination over the rationals.  When every
    remaining diagonal entry is zero but some off-diagonal entry is not, the
    pair is eliminated as a hyperbolic 2x2 block, which contributes one
    positive and one negative eigenvalue.
    """
    a = [[Fraction(x) for x in row] for row in _as_rows(m)]
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    n_plus = n_minus = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is not None:
            d = a[k][k]
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            rest = [i for i in range(n) if i != k]
            a = [[a[i][j] - a[i][k] * a[k][j] / d for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        b = a[i0][j0]
        n_plus += 1
        n_minus += 1
        # Inverse of [[0, b], [b, 0]] is [[0, 1/b], [1/b, 0]].
        rest = [i for i in range(n) if i not in pair]
        a = [
            [a[i][j] - (a[i][i0] * a[j0][j] + a[i][j0] * a[i0][j]) / b for j in rest]
            for i in rest
        ]
    size = len(_as_rows(m))
    return Inertia(n_plus, n_minus, size - n_plus - n_minus)


def leading_minors(m: MatrixLike) -> list[int]:
    a = _as_rows(m)
    return [det_exact([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]


def is_negative_definite(m: MatrixLike) -> bool:
    """Sylvester's criterion: ``(-1)^k * det(M_k) > 0`` for every leading minor."""
    return all((-1) ** k * d > 0 for k, d in enumerate(leading_minors(m), start=1))


def permute(m: MatrixLike, perm: Sequence[int]) -> list[list[int]]:
    """Return ``P M P^T`` where row ``i`` of the result is row ``perm[i]`` of ``m``."""
    a = _as_rows(m)
    return [[a[pi][pj] for pj in perm] for pi in perm]
