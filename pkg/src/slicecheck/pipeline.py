"""The full obstruction pipeline for one family member, and batch scans."""
from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .arith import det_exact, is_negative_definite
from .lattice import DEFAULT_MAX_NODES, Aborted, Exhausted, Witness, find_embedding, verify_witness
from .montesinos import FamilyParams, is_knot, nr_value
from .plumbing import build_family_reduced, intersection_form

OBSTRUCTED = "obstructed"
EMBEDDING_FOUND = "embedding_found"
NOT_APPLICABLE = "not_applicable"
ABORTED = "aborted"


@dataclass(frozen=True)
class SliceVerdict:
    params: FamilyParams
    is_knot: bool
    nr_value: str
    negative_definite: bool
    rank: int
    determinant: int
    outcome: str
    witness: list[list[int]] | None
    nodes_explored: int
    elapsed_ms: int

    def to_dict(self) -> dict:
        p = self.params
        return {
            "params": {"m1": p.m1, "n1": p.n1, "m2": p.m2, "n2": p.n2, "q": p.q},
            "is_knot": self.is_knot,
            "nr_value": self.nr_value,
            "negative_definite": self.negative_definite,
            "rank": self.rank,
            "determinant": self.determinant,
            "outcome": self.outcome,
            "witness": self.witness,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))


def obstruct(p: FamilyParams, max_nodes: int = DEFAULT_MAX_NODES, workers: int = 1,
             timing: bool = True) -> SliceVerdict:
    start = time.perf_counter()
    knot = is_knot(p)
    nr = nr_value(p)
    q = intersection_form(build_family_reduced(p))
    definite = is_negative_definite(q)
    if definite != (nr > 0):
        raise AssertionError(f"definiteness disagrees with the Neumann-Raymond value for {p}")
    det = det_exact(q)
    outcome, witness, nodes = NOT_APPLICABLE, None, 0
    if knot and definite:
        result = find_embedding(q, max_nodes=max_nodes, workers=workers)
        nodes = result.nodes_explored
        if isinstance(result, Witness):
            assert verify_witness(result.witness, q)
            outcome, witness = EMBEDDING_FOUND, result.witness.matrix()
        elif isinstance(result, Exhausted):
            outcome = OBSTRUCTED
        else:
            assert isinstance(result, Aborted)
            outcome = ABORTED
    elapsed = int(round((time.perf_counter() - start) * 1000)) if timing else 0
    return SliceVerdict(p, knot, f"{nr.numerator}/{nr.denominator}", definite, q.order,
                        abs(det), outcome, witness, nodes, elapsed)


def grid(m1: Iterable[int], n1: Iterable[int], m2: Iterable[int], n2: Iterable[int],
         q: Iterable[int]) -> list[FamilyParams]:
    """Every parameter tuple of the ranges, in lexicographic order."""
    axes = [sorted(set(r)) for r in (m1, n1, m2, n2, q)]
    return [FamilyParams(*t) for t in itertools.product(*axes)]


def _obstruct_args(args: tuple[FamilyParams, int, bool]) -> SliceVerdict:
    p, max_nodes, timing = args
    return obstruct(p, max_nodes=max_nodes, timing=timing)


def scan(params: Sequence[FamilyParams], jobs: int = 1, max_nodes: int = DEFAULT_MAX_NODES,
         timing: bool = False) -> Iterator[SliceVerdict]:
    """Verdicts for ``params`` in input order, whatever the number of worker processes."""
    work = [(p, max_nodes, timing) for p in params]
    if jobs <= 1:
        yield from map(_obstruct_args, work)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_obstruct_args, work, chunksize=4)
