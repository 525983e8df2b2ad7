"""Continued fractions in the minus convention.

``[a1, a2, ..., ak]`` denotes ``a1 - 1/(a2 - 1/(... - 1/ak))``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DomainError, ZeroDenominator, ZeroInput


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise DomainError("continued fraction must have at least one term")

    @classmethod
    def of(cls, terms: Iterable[int]) -> "ContinuedFraction":
        return cls(tuple(int(t) for t in terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


def _terms(cf: ContinuedFraction | Iterable[int]) -> tuple[int, ...]:
    terms = cf.terms if isinstance(cf, ContinuedFraction) else tuple(int(t) for t in cf)
    if not terms:
        raise DomainError("continued fraction must have at least one term")
    return terms


def evaluate(cf: ContinuedFraction | Iterable[int]) -> Fraction:
    """Exact value of ``cf``, evaluated from the tail upward."""
    terms = _terms(cf)
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        if value == 0:
            raise ZeroDenominator(f"tail of {list(terms)} evaluates to 0")
        value = a - 1 / value
    return value


def family_expansion(m: int, n: int) -> ContinuedFraction:
    """The expansion ``[-1, -1, (-2)*m, -3, (-2)*n]`` whose value equals ``[m+1, n+2]``."""
    if m < 1 or n < 1:
        raise DomainError(f"m and n must be positive, got m={m}, n={n}")
    return ContinuedFraction((-1, -1) + (-2,) * m + (-3,) + (-2,) * n)


def _hirzebruch_jung(r: Fraction) -> list[int]:
    # r > 1; every term produced is >= 2.
    terms = []
    while True:
        a = math.ceil(r)
        terms.append(a)
        if a == r:
            return terms
        r = 1 / (a - r)


def _shortest(r: Fraction) -> list[int]:
    # Breadth-first over floor/ceiling choices; denominators strictly drop, so it terminates.
    frontier: dict[Fraction, list[int]] = {r: []}
    seen = {r}
    while True:
        nxt: dict[Fraction, list[int]] = {}
        for x, prefix in frontier.items():
            if x.denominator == 1:
                return prefix + [int(x)]
        for x, prefix in frontier.items():
            for a in (math.floor(x), math.ceil(x)):
                y = 1 / (a - x)
                if y not in seen:
                    seen.add(y)
                    nxt[y] = prefix + [a]
        frontier = nxt


def rational_to_negcf(r: Fraction | int) -> ContinuedFraction:
    """Continued fraction expansion of a nonzero rational.

    For ``r < -1`` this is the unique expansion with every term ``<= -2``.
    Otherwise the shortest expansion reachable by choosing the floor or the
    ceiling at each step is returned.
    """
    r = Fraction(r)
    if r == 0:
        raise ZeroInput("cannot expand 0")
    if r < -1:
        return ContinuedFraction(tuple(-a for a in _hirzebruch_jung(-r)))
    return ContinuedFraction(tuple(_shortest(r)))
