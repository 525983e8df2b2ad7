"""Complete search for embeddings of a negative-definite form into ``-I``.

An embedding of ``Q`` (rank ``n``) is an integer ``n x n`` matrix ``A`` with
``A^T A = -Q``; column ``i`` is the image of basis vector ``f_i``.  The
search works on the positive-definite side throughout.

Search order and pruning:

* vertices are assigned by decreasing ``|Q_ii|`` (ties by index);
* every unassigned vertex keeps a domain of norm-correct vectors that is
  filtered against each new assignment (forward checking), so a dead branch
  is noticed as soon as some domain empties;
* signed-permutation symmetry of ``Z^n`` is broken by first-use
  canonicalisation: coordinates untouched by earlier columns are consumed in
  increasing order, with nonnegative entries that do not increase along the
  fresh axes.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from .arith import MatrixLike, SymIntMatrix, is_negative_definite
from .errors import DimensionMismatch, NotNegativeDefinite

DEFAULT_MAX_NODES = 10**9


@dataclass(frozen=True)
class EmbeddingWitness:
    n: int
    columns: tuple[tuple[int, ...], ...]

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "EmbeddingWitness":
        cols = tuple(tuple(int(x) for x in c) for c in columns)
        return cls(len(cols), cols)

    def matrix(self) -> list[list[int]]:
        """Rows of ``A``; column ``i`` of the result is the image of ``f_i``."""
        return [[self.columns[j][i] for j in range(self.n)] for i in range(self.n)]


@dataclass(frozen=True)
class Witness:
    witness: EmbeddingWitness
    nodes_explored: int


@dataclass(frozen=True)
class Exhausted:
    nodes_explored: int


@dataclass(frozen=True)
class Aborted:
    """The node budget ran out; nothing may be concluded."""

    nodes_explored: int


SearchOutcome = Union[Witness, Exhausted, Aborted]


def _shapes(norm: int) -> list[tuple[int, ...]]:
    # Multisets of positive integers (descending) whose squares sum to norm.
    out = []

    def rec(rem, cap, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for a in range(min(cap, math.isqrt(rem)), 0, -1):
            rec(rem - a * a, a, acc + [a])

    rec(norm, math.isqrt(norm), [])
    return out


@lru_cache(maxsize=32)
def _norm_array(dim: int, norm: int) -> np.ndarray:
    blocks = []
    for shape in _shapes(norm):
        k = len(shape)
        if k > dim:
            continue
        combos = np.array(list(itertools.combinations(range(dim), k)), dtype=np.intp).reshape(-1, k)
        rows_idx = np.arange(len(combos))[:, None]
        for vals in sorted(set(itertools.permutations(shape)), reverse=True):
            for signs in itertools.product((1, -1), repeat=k):
                block = np.zeros((len(combos), dim), dtype=np.int16)
                block[rows_idx, combos] = np.array(vals) * np.array(signs)
                blocks.append(block)
    if not blocks:
        return np.zeros((0, dim), dtype=np.int16)
    arr = np.concatenate(blocks)
    # Descending lexicographic order.
    arr = arr[np.lexsort(-arr.T[::-1])]
    arr.setflags(write=False)
    return arr


def enumerate_norm_vectors(dim: int, norm: int) -> list[tuple[int, ...]]:
    """All vectors of ``Z^dim`` with squared length ``norm``, in descending lexicographic order."""
    if norm < 1:
        raise ValueError("norm must be positive")
    return [tuple(int(x) for x in row) for row in _norm_array(dim, norm)]


def verify_witness(witness: EmbeddingWitness | Sequence[Sequence[int]], q: MatrixLike) -> bool:
    """True iff ``<col_i, col_j> = -Q_ij`` for all ``i <= j``."""
    rows = q.rows if isinstance(q, SymIntMatrix) else q
    cols = witness.columns if isinstance(witness, EmbeddingWitness) else witness
    n = len(rows)
    if len(cols) != n or any(len(c) != n for c in cols):
        raise DimensionMismatch(f"witness shape does not match a rank-{n} form")
    for i in range(n):
        for j in range(i, n):
            if sum(a * b for a, b in zip(cols[i], cols[j])) != -rows[i][j]:
                return False
    return True


class _BudgetExceeded(Exception):
    pass


class _Search:
    def __init__(self, q: Sequence[Sequence[int]], max_nodes: int):
        self.q = [list(r) for r in q]
        self.n = n = len(q)
        self.norms = [-self.q[i][i] for i in range(n)]
        self.order = sorted(range(n), key=lambda i: (-abs(self.q[i][i]), i))
        self.cands = {nm: _norm_array(n, nm) for nm in set(self.norms)}
        self.cols = {nm: [np.ascontiguousarray(a[:, j]) for j in range(n)] for nm, a in self.cands.items()}
        self.max_nodes = max_nodes
        self.nodes = 0
        self.assigned: dict[int, np.ndarray] = {}

    def initial_domains(self) -> dict[int, np.ndarray]:
        return {i: np.arange(len(self.cands[self.norms[i]]), dtype=np.int32) for i in range(self.n)}

    def canonical(self, v: int, dom: np.ndarray, used: int) -> np.ndarray:
        if used >= self.n or len(dom) == 0:
            return dom
        fresh = self.cands[self.norms[v]][dom, used:]
        ok = fresh.min(axis=1) >= 0
        if fresh.shape[1] > 1:
            ok &= (np.diff(fresh, axis=1) <= 0).all(axis=1)
        return dom[ok]

    def forward(self, v: int, vec: np.ndarray, domains: dict, depth: int) -> dict | None:
        supp = np.flatnonzero(vec)
        new = {}
        for u in self.order[depth + 1:]:
            dom = domains[u]
            cols = self.cols[self.norms[u]]
            dots = np.zeros(len(dom), dtype=np.int32)
            for j in supp:
                dots += cols[j][dom] * int(vec[j])
            dom = dom[dots == -self.q[u][v]]
            if len(dom) == 0:
                return None
            new[u] = dom
        return new

    def first_level(self) -> tuple[dict, list[int]]:
        domains = self.initial_domains()
        v = self.order[0]
        return domains, [int(i) for i in self.canonical(v, domains[v], 0)]

    def run(self, depth: int, domains: dict, used: int, restrict: Sequence[int] | None = None):
        if depth == self.n:
            return True
        v = self.order[depth]
        cand = self.cands[self.norms[v]]
        options = self.canonical(v, domains[v], used) if restrict is None else restrict
        for idx in options:
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise _BudgetExceeded
            vec = cand[idx]
            nz = np.flatnonzero(vec)
            new_used = max(used, int(nz[-1]) + 1)
            nxt = self.forward(v, vec, domains, depth)
            if nxt is None:
                continue
            self.assigned[v] = vec
            if self.run(depth + 1, nxt, new_used):
                return True
            del self.assigned[v]
        return False

    def witness(self) -> EmbeddingWitness:
        return EmbeddingWitness.from_columns([self.assigned[i].tolist() for i in range(self.n)])


def _as_rows(q: MatrixLike) -> list[list[int]]:
    rows = q.rows if isinstance(q, SymIntMatrix) else q
    return [[int(x) for x in r] for r in rows]


def _search_branch(q: list[list[int]], first: int, max_nodes: int):
    s = _Search(q, max_nodes)
    domains = s.initial_domains()
    try:
        found = s.run(0, domains, 0, restrict=[first])
    except _BudgetExceeded:
        return "aborted", s.nodes, None
    return ("witness" if found else "exhausted"), s.nodes, (s.witness() if found else None)


def find_embedding(q: MatrixLike, max_nodes: int = DEFAULT_MAX_NODES, workers: int = 1) -> SearchOutcome:
    """Decide whether ``q`` embeds into the standard negative-definite lattice of equal rank.

    ``Exhausted`` is returned only when the whole (symmetry-reduced) search
    tree has been explored; running out of ``max_nodes`` gives ``Aborted``.
    With ``workers > 1`` the first-level branches are farmed out to worker
    processes; the witness reported is always the one from the earliest
    branch, so the answer does not depend on scheduling.
    """
    rows = _as_rows(q)
    if not is_negative_definite(rows):
        raise NotNegativeDefinite("form is not negative definite")
    s = _Search(rows, max_nodes)
    _, firsts = s.first_level()
    if workers > 1 and len(firsts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_branch, itertools.repeat(rows), firsts,
                                    itertools.repeat(max_nodes)))
        nodes = sum(r[1] for r in results)
        for status, _, wit in results:
            if status == "witness":
                return Witness(wit, nodes)
        if any(r[0] == "aborted" for r in results) or nodes > max_nodes:
            return Aborted(nodes)
        return Exhausted(nodes)
    try:
        found = s.run(0, s.initial_domains(), 0, restrict=firsts)
    except _BudgetExceeded:
        return Aborted(s.nodes)
    if found:
        wit = s.witness()
        assert verify_witness(wit, rows)
        return Witness(wit, s.nodes)
    return Exhausted(s.nodes)
