"""Weighted-tree plumbing graphs and their intersection forms.

A :class:`PlumbingGraph` carries an explicit vertex ordering; the
intersection form is indexed by that ordering (diagonal = weights, 1 on
edges).  All moves return new graphs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Hashable, Iterable, Sequence

from .arith import SymIntMatrix
from .contfrac import ContinuedFraction, family_expansion
from .errors import NotAbsorbable, NotBlowdownable, ZeroAlpha

if TYPE_CHECKING:
    from .montesinos import FamilyParams

VertexId = Hashable


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: tuple[tuple[VertexId, int], ...]
    edges: frozenset[frozenset]

    def __post_init__(self) -> None:
        ids = [v for v, _ in self.vertices]
        if not ids:
            raise ValueError("plumbing graph needs at least one vertex")
        if len(set(ids)) != len(ids):
            raise ValueError("vertex ids must be unique")
        idset = set(ids)
        for e in self.edges:
            if len(e) != 2 or not e <= idset:
                raise ValueError(f"bad edge {set(e)}")
        if len(self.edges) != len(ids) - 1 or not self._connected():
            raise ValueError("plumbing graph must be a tree")

    @classmethod
    def build(cls, vertices: Iterable[tuple[VertexId, int]],
              edges: Iterable[tuple[VertexId, VertexId]]) -> "PlumbingGraph":
        return cls(tuple((v, int(w)) for v, w in vertices),
                   frozenset(frozenset(e) for e in edges))

    def _connected(self) -> bool:
        adj = self.adjacency()
        start = self.vertices[0][0]
        seen = {start}
        stack = [start]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def ids(self) -> list[VertexId]:
        return [v for v, _ in self.vertices]

    @property
    def weights(self) -> list[int]:
        return [w for _, w in self.vertices]

    def weight(self, v: VertexId) -> int:
        return dict(self.vertices)[v]

    def position(self, v: VertexId) -> int:
        return self.ids.index(v)

    def adjacency(self) -> dict[VertexId, list[VertexId]]:
        order = {v: i for i, v in enumerate(self.ids)}
        adj: dict[VertexId, list[VertexId]] = {v: [] for v in order}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].append(b)
            adj[b].append(a)
        for v in adj:
            adj[v].sort(key=order.__getitem__)
        return adj

    def neighbors(self, v: VertexId) -> list[VertexId]:
        return self.adjacency()[v]

    def valence(self, v: VertexId) -> int:
        return sum(1 for e in self.edges if v in e)

    def edge_positions(self) -> list[tuple[int, int]]:
        order = {v: i for i, v in enumerate(self.ids)}
        return sorted(tuple(sorted(order[x] for x in e)) for e in self.edges)


def build_star_plumbing(e: int, cfs: Sequence[ContinuedFraction | Sequence[int]]) -> PlumbingGraph:
    """Star-shaped plumbing: a central vertex of weight ``e`` and one linear leg per fraction.

    Vertices are ordered leg by leg (each leg from the centre outward) with
    the centre last.
    """
    vertices: list[tuple[int, int]] = []
    edges: list[tuple[int, int]] = []
    legs = [list(cf) for cf in cfs]
    center = sum(len(leg) for leg in legs)
    for leg in legs:
        if not leg:
            raise ValueError("every leg needs at least one term")
        prev = center
        for a in leg:
            vid = len(vertices)
            vertices.append((vid, int(a)))
            edges.append((prev, vid))
            prev = vid
    vertices.append((center, int(e)))
    return PlumbingGraph.build(vertices, edges)


def build_family_raw(p: "FamilyParams") -> PlumbingGraph:
    """The plumbing obtained directly from the family's continued fractions."""
    return build_star_plumbing(0, [family_expansion(p.m1, p.n1),
                                   family_expansion(p.m2, p.n2),
                                   (p.q,)])


def build_family_reduced(p: "FamilyParams") -> PlumbingGraph:
    """The blown-down negative-definite plumbing, in the ``f_1 .. f_N`` basis order.

    A linear chain ``-2 (n1 times), -3, -2 (m1-1), -2, -2 (m2-1), -3, -2 (n2 times)``
    with a single vertex of weight ``q`` hung off the middle ``-2``.
    """
    chain = ([-2] * p.n1 + [-3] + [-2] * (p.m1 - 1) + [-2]
             + [-2] * (p.m2 - 1) + [-3] + [-2] * p.n2)
    center = p.n1 + p.m1
    vertices = [(i, w) for i, w in enumerate(chain)] + [(len(chain), p.q)]
    edges = [(i, i + 1) for i in range(len(chain) - 1)] + [(center, len(chain))]
    return PlumbingGraph.build(vertices, edges)


def intersection_form(g: PlumbingGraph) -> SymIntMatrix:
    n = len(g)
    rows = [[0] * n for _ in range(n)]
    for i, w in enumerate(g.weights):
        rows[i][i] = w
    for i, j in g.edge_positions():
        rows[i][j] = rows[j][i] = 1
    return SymIntMatrix.from_rows(rows)


def tree_determinant(g: PlumbingGraph) -> int:
    """Signed determinant of ``intersection_form(g)`` in linear time.

    Uses the tree recursion D(v) = w_v * prod D(c) - sum_c D'(c) prod_{c' != c} D(c'),
    where D' is the determinant of a subtree with its root removed.
    """
    adj = g.adjacency()
    root = g.ids[0]
    order, parent, stack = [], {root: None}, [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for u in adj[v]:
            if u not in parent:
                parent[u] = v
                stack.append(u)
    full: dict = {}
    cut: dict = {}
    for v in reversed(order):
        prod, acc = 1, 0
        for c in adj[v]:
            if c == parent[v]:
                continue
            prod, acc = prod * full[c], acc * full[c] + prod * cut[c]
        full[v] = g.weight(v) * prod - acc
        cut[v] = prod
    return full[root]


def _replace(g: PlumbingGraph, weights: dict, remove: set, add_edges=()) -> PlumbingGraph:
    verts = [(v, weights.get(v, w)) for v, w in g.vertices if v not in remove]
    edges = set()
    for e in g.edges:
        if e & remove:
            continue
        edges.add(e)
    for a, b in add_edges:
        edges.add(frozenset((a, b)))
    return PlumbingGraph(tuple(verts), frozenset(edges))


def blow_down(g: PlumbingGraph, v: VertexId) -> PlumbingGraph:
    """Blow down a ``±1`` vertex of valence at most 2.

    Neighbour weights shift by ``-weight(v)`` and, for valence 2, the two
    neighbours become adjacent.  The remaining vertices keep their order.
    """
    w = g.weight(v)
    nbrs = g.neighbors(v)
    if w not in (-1, 1):
        raise NotBlowdownable(f"vertex {v!r} has weight {w}, not ±1")
    if len(nbrs) > 2:
        raise NotBlowdownable(f"vertex {v!r} has valence {len(nbrs)} > 2")
    if len(nbrs) == 2 and frozenset(nbrs) in g.edges:
        raise NotBlowdownable(f"blowing down {v!r} would create a cycle")
    if len(g) == 1:
        raise NotBlowdownable("cannot blow down the only vertex")
    new_weights = {u: g.weight(u) - w for u in nbrs}
    add = [tuple(nbrs)] if len(nbrs) == 2 else []
    return _replace(g, new_weights, {v}, add)


def zero_absorb(g: PlumbingGraph, v: VertexId) -> PlumbingGraph:
    """Remove a 0-weighted vertex of valence 2 by merging its two neighbours.

    The merged vertex has the summed weight, the union of the neighbours'
    other edges, and sits at the earlier of the two neighbours' positions.
    """
    if g.weight(v) != 0:
        raise NotAbsorbable(f"vertex {v!r} has weight {g.weight(v)}, not 0")
    nbrs = g.neighbors(v)
    if len(nbrs) != 2:
        raise NotAbsorbable(f"vertex {v!r} has valence {len(nbrs)}, not 2")
    u, x = nbrs  # sorted by position, so u comes first
    if frozenset((u, x)) in g.edges:
        raise NotAbsorbable(f"neighbours of {v!r} are adjacent")
    return _absorb(g, v, u, x)


def _absorb(g: PlumbingGraph, v, u, x) -> PlumbingGraph:
    verts = [(a, g.weight(u) + g.weight(x) if a == u else w)
             for a, w in g.vertices if a not in (v, x)]
    edges = set()
    for e in g.edges:
        if v in e:
            continue
        edges.add(frozenset(u if a == x else a for a in e))
    return PlumbingGraph(tuple(verts), frozenset(edges))


def _first_eligible(g: PlumbingGraph, weight: int, valence: int) -> VertexId | None:
    adj = g.adjacency()
    for v, w in g.vertices:
        if w == weight and len(adj[v]) == valence and frozenset(adj[v]) not in g.edges:
            return v
    return None


def reduce_steps(g: PlumbingGraph) -> list[PlumbingGraph]:
    """Every intermediate graph of :func:`reduce`, starting with ``g`` itself."""
    steps = [g]
    while True:
        v = _first_eligible(g, 0, 2)
        if v is not None:
            g = zero_absorb(g, v)
        else:
            v = _first_eligible(g, -1, 2)
            if v is None:
                v = _first_eligible(g, 1, 2)
            if v is None:
                return steps
            g = blow_down(g, v)
        steps.append(g)


def reduce(g: PlumbingGraph) -> PlumbingGraph:
    """Apply 0-absorptions and interior ``±1`` blow-downs until none applies.

    Priority: 0-absorption, then ``-1`` blow-down, then ``+1`` blow-down,
    each at the earliest eligible vertex.  Only valence-2 vertices are
    eligible; ``±1`` leaves are left in place.
    """
    return reduce_steps(g)[-1]


def neumann_raymond(e: int, tangles: Iterable[Fraction | int]) -> Fraction:
    """``e + sum(beta_i / alpha_i)`` for tangles ``alpha_i / beta_i``."""
    total = Fraction(e)
    for t in tangles:
        t = Fraction(t)
        if t == 0:
            raise ZeroAlpha("tangle with alpha = 0")
        total += 1 / t
    return total


def _canonical(g: PlumbingGraph, root: VertexId, adj) -> tuple:
    def walk(v, parent):
        return (g_weights[v], tuple(sorted(walk(u, v) for u in adj[v] if u != parent)))
    g_weights = dict(g.vertices)
    return walk(root, None)


def _centers(g: PlumbingGraph, adj) -> list[VertexId]:
    degree = {v: len(adj[v]) for v in adj}
    remaining = set(adj)
    layer = [v for v in adj if degree[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for v in layer:
            remaining.discard(v)
            for u in adj[v]:
                if u in remaining:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(remaining, key=g.position)


def canonical_form(g: PlumbingGraph) -> tuple:
    """A labelling-independent invariant: equal iff the weighted trees are isomorphic."""
    adj = g.adjacency()
    return min(_canonical(g, c, adj) for c in _centers(g, adj))


def isomorphic(g: PlumbingGraph, h: PlumbingGraph) -> bool:
    return len(g) == len(h) and canonical_form(g) == canonical_form(h)


def to_dot(g: PlumbingGraph, name: str = "plumbing") -> str:
    lines = [f"graph {name} {{"]
    for i, w in enumerate(g.weights, start=1):
        lines.append(f'  f{i} [label="f{i} ({w})"];')
    for i, j in g.edge_positions():
        lines.append(f"  f{i + 1} -- f{j + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def weight_multiset(g: PlumbingGraph) -> Counter:
    return Counter(g.weights)
