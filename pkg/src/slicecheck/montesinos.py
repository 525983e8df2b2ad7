"""The five-parameter Montesinos family ``M(0; [m1+1, n1+2], [m2+1, n2+2], q)``."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .contfrac import evaluate
from .errors import DomainError
from .plumbing import build_family_raw, build_family_reduced, neumann_raymond, tree_determinant


@dataclass(frozen=True)
class MontesinosData:
    e: int
    tangles: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.tangles:
            raise DomainError("need at least one tangle")
        if any(Fraction(t) == 0 for t in self.tangles):
            raise DomainError("tangle fractions must have nonzero alpha")


@dataclass(frozen=True, order=True)
class FamilyParams:
    m1: int
    n1: int
    m2: int
    n2: int
    q: int

    def __post_init__(self) -> None:
        for name in ("m1", "n1", "m2", "n2"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.q > -1:
            raise DomainError(f"q must be <= -1, got {self.q}")

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.m1, self.n1, self.m2, self.n2, self.q)

    @property
    def rank(self) -> int:
        return self.n1 + self.m1 + self.m2 + self.n2 + 2

    def swapped(self) -> "FamilyParams":
        return FamilyParams(self.m2, self.n2, self.m1, self.n1, self.q)


def family_to_montesinos(p: FamilyParams) -> MontesinosData:
    return MontesinosData(0, (evaluate([p.m1 + 1, p.n1 + 2]),
                              evaluate([p.m2 + 1, p.n2 + 2]),
                              Fraction(p.q)))


def _leg_term(m: int, n: int) -> Fraction:
    return Fraction(n + 2, (m + 1) * n + 2 * m + 1)


def nr_value(p: FamilyParams) -> Fraction:
    """Left-hand side of the negative-definiteness inequality for ``p``."""
    value = _leg_term(p.m1, p.n1) + _leg_term(p.m2, p.n2) + Fraction(1, p.q)
    data = family_to_montesinos(p)
    assert value == neumann_raymond(data.e, data.tangles), p
    return value


def knot_determinant(p: FamilyParams) -> int:
    """``|det|`` of the reduced plumbing form, i.e. ``|H_1|`` of the double branched cover."""
    return abs(tree_determinant(build_family_reduced(p)))


def raw_determinant(p: FamilyParams) -> int:
    return abs(tree_determinant(build_family_raw(p)))


def is_knot(p: FamilyParams) -> bool:
    """A Montesinos link is a knot iff its determinant is odd."""
    return raw_determinant(p) % 2 == 1


# Parity constraints of the excluded (link) classes, keys are parameter
# names and values the required residue mod 2.
EXCLUDED_PARITY_ITEMS: tuple[dict[str, int], ...] = (
    {"q": 0, "m1": 0, "n1": 1},
    {"q": 0, "m2": 0, "n2": 1},
    {"q": 1, "m1": 1, "n1": 1, "n2": 0},
    {"q": 1, "n1": 0, "m2": 1, "n2": 1},
    {"q": 1, "m1": 0, "n1": 1, "m2": 0, "n2": 1},
)
STATED_EXCLUDED_COUNT = 12
PARAM_NAMES = ("m1", "n1", "m2", "n2", "q")


@dataclass(frozen=True)
class ParityClass:
    parities: tuple[int, int, int, int, int]
    det_parities: frozenset[int]
    representatives: tuple[FamilyParams, ...]
    items: tuple[int, ...]

    @property
    def consistent(self) -> bool:
        return len(self.det_parities) == 1

    @property
    def is_link(self) -> bool:
        return self.det_parities == frozenset({0})


@dataclass(frozen=True)
class ParityReport:
    classes: tuple[ParityClass, ...]

    @property
    def excluded(self) -> list[ParityClass]:
        return [c for c in self.classes if c.is_link]

    @property
    def listed(self) -> list[ParityClass]:
        return [c for c in self.classes if c.items]

    @property
    def item_assignment_total(self) -> int:
        return sum(len(c.items) for c in self.classes)

    @property
    def matches_items(self) -> bool:
        return all(bool(c.items) == c.is_link for c in self.classes)

    @property
    def matches_stated_count(self) -> bool:
        return len(self.excluded) == STATED_EXCLUDED_COUNT

    def lines(self) -> list[str]:
        out = []
        for c in self.classes:
            tag = "link" if c.is_link else ("knot" if c.consistent else "MIXED")
            par = " ".join(f"{n}={'odd' if b else 'even'}" for n, b in zip(PARAM_NAMES, c.parities))
            items = ",".join(str(i) for i in c.items) or "-"
            out.append(f"{par}  det:{tag}  items:{items}")
        out.append(f"excluded classes (even determinant): {len(self.excluded)}")
        out.append(f"classes matched by items (1)-(5): {len(self.listed)}"
                   f" (item assignments counted with overlap: {self.item_assignment_total})")
        out.append(f"items agree with determinant parity: {'yes' if self.matches_items else 'NO'}")
        flag = "" if self.matches_stated_count else "  <-- differs from stated count"
        out.append(f"stated excluded count: {STATED_EXCLUDED_COUNT}{flag}")
        return out


def _items_for(parities: dict[str, int]) -> tuple[int, ...]:
    return tuple(i for i, item in enumerate(EXCLUDED_PARITY_ITEMS, start=1)
                 if all(parities[k] == v for k, v in item.items()))


def parity_report(samples: int = 4) -> ParityReport:
    """Determinant parity over the 32 parity classes of ``(m1, n1, m2, n2, q)``.

    Each class is sampled with ``samples`` representatives obtained by adding
    ``0, 2, 4, ...`` to the smallest admissible value of every parameter.
    """
    base = {0: 2, 1: 1}
    classes = []
    for bits in itertools.product((0, 1), repeat=5):
        reps = []
        for k in range(samples):
            vals = []
            for idx, b in enumerate(bits):
                shift = 2 * ((k + idx) % samples) if k else 0
                v = base[b] + shift
                vals.append(-v if PARAM_NAMES[idx] == "q" else v)
            reps.append(FamilyParams(*vals))
        dets = frozenset(raw_determinant(p) % 2 for p in reps)
        classes.append(ParityClass(bits, dets, tuple(reps), _items_for(dict(zip(PARAM_NAMES, bits)))))
    return ParityReport(tuple(classes))
