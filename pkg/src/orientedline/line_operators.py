"""Oriented line graphs and the matrices built on them.

For a graph G, the symmetric digraph D(G) has both arcs ``(u, v)`` and
``(v, u)`` per edge. The oriented line graph has those 2m arcs as vertices and
an arc ``(u, v) -> (v, w)`` whenever ``u != w``. Its adjacency matrix is the
non-backtracking matrix B; its underlying undirected graph is a 2-lift of the
line graph L(G), projected by ``(u, v) -> {u, v}``.

All constructions index the arcs of D(G) in sorted ``(u, v)`` order, so every
matrix produced here is reproducible entry for entry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Literal, Sequence

from .exact_algebra import GaussianInt, GaussianMatrix, IntMatrix
from .graph_core import Digraph, Graph, GraphError, SignedGraph, adjacency_matrix, validate_regular_connected

__all__ = [
    "ArcIndex",
    "Orientation",
    "LineProjection",
    "OPERATOR_KINDS",
    "symmetric_digraph",
    "oriented_line_graph",
    "underlying_and_line_graph",
    "line_graph",
    "orientation_partition",
    "signed_line_graph",
    "operator_matrix",
]


@dataclass(frozen=True)
class ArcIndex:
    """Dense numbering ``0..2m-1`` of the arcs of D(G), sorted by ``(u, v)``."""

    arcs: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, g: Graph) -> "ArcIndex":
        return cls(tuple(sorted([(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges])))

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {a: i for i, a in enumerate(self.arcs)}

    def __len__(self) -> int:
        return len(self.arcs)

    def __getitem__(self, i: int) -> tuple[int, int]:
        return self.arcs[i]

    def reverse(self, i: int) -> int:
        u, v = self.arcs[i]
        return self.index[(v, u)]


@dataclass(frozen=True)
class Orientation:
    """One chosen arc per edge of ``base``, aligned with ``base.edges``."""

    base: Graph
    chosen: tuple[tuple[int, int], ...]

    def __post_init__(self):
        chosen = tuple(tuple(a) for a in self.chosen)
        if len(chosen) != self.base.m:
            raise GraphError("an orientation needs exactly one arc per edge")
        for (u, v), (a, b) in zip(self.base.edges, chosen):
            if (a, b) not in ((u, v), (v, u)):
                raise GraphError(f"arc {(a, b)} does not orient edge {(u, v)}")
        object.__setattr__(self, "chosen", chosen)

    @classmethod
    def auto(cls, g: Graph) -> "Orientation":
        """Lower endpoint -> higher endpoint on every edge."""
        return cls(g, g.edges)

    @classmethod
    def from_arcs(cls, g: Graph, arcs: Sequence[Sequence[int]]) -> "Orientation":
        by_edge = {}
        for a, b in arcs:
            key = (min(a, b), max(a, b))
            if key not in g.edge_index:
                raise GraphError(f"arc {(a, b)} is not on an edge of the graph")
            if key in by_edge:
                raise GraphError(f"edge {key} oriented twice")
            by_edge[key] = (a, b)
        missing = [e for e in g.edges if e not in by_edge]
        if missing:
            raise GraphError(f"edges left unoriented: {missing[:5]}")
        return cls(g, tuple(by_edge[e] for e in g.edges))

    @classmethod
    def random(cls, g: Graph, rng: random.Random | int | None = None) -> "Orientation":
        if not isinstance(rng, random.Random):
            rng = random.Random(rng)
        return cls(g, tuple((u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges))

    @classmethod
    def from_bits(cls, g: Graph, bits: int) -> "Orientation":
        """Bit k of ``bits`` reverses edge k; enumerates all 2**m orientations."""
        return cls(g, tuple((v, u) if bits >> k & 1 else (u, v) for k, (u, v) in enumerate(g.edges)))

    def digraph(self) -> Digraph:
        return Digraph(self.base.n, self.chosen)

    def arc_list(self) -> list[list[int]]:
        return [list(a) for a in self.chosen]


@dataclass(frozen=True)
class LineProjection:
    """``psi[i]`` is the index (in ``base.edges``) of the edge under arc ``i``."""

    arc_index: ArcIndex
    psi: tuple[int, ...]

    def fiber(self, e: int) -> tuple[int, int]:
        return self.fibers[e]

    @cached_property
    def fibers(self) -> tuple[tuple[int, int], ...]:
        out: dict[int, list[int]] = {}
        for a, e in enumerate(self.psi):
            out.setdefault(e, []).append(a)
        return tuple(tuple(out[e]) for e in range(len(out)))


def symmetric_digraph(g: Graph) -> Digraph:
    return Digraph(g.n, tuple(ArcIndex.of(g).arcs))


def oriented_line_graph(g: Graph) -> tuple[Digraph, ArcIndex]:
    idx = ArcIndex.of(g)
    arcs = []
    for i, (u, v) in enumerate(idx.arcs):
        for w in g.neighbors(v):
            if w != u:
                arcs.append((i, idx.index[(v, w)]))
    return Digraph(len(idx), tuple(arcs)), idx


def line_graph(g: Graph) -> Graph:
    """Vertices are edge indices of ``g``; adjacent when the edges share an endpoint."""
    edges = set()
    for v in range(g.n):
        inc = [g.edge_index[(min(v, w), max(v, w))] for w in g.neighbors(v)]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                e, f = inc[a], inc[b]
                edges.add((min(e, f), max(e, f)))
    return Graph(g.m, tuple(edges))


def underlying_and_line_graph(g: Graph) -> tuple[Graph, Graph, LineProjection]:
    olg, idx = oriented_line_graph(g)
    lstar = Graph(olg.n, tuple({(min(a, b), max(a, b)) for a, b in olg.arcs}))
    proj = LineProjection(idx, tuple(g.edge_index[(min(u, v), max(u, v))] for u, v in idx.arcs))
    return lstar, line_graph(g), proj


def orientation_partition(o: Orientation, idx: ArcIndex) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split the vertices of the oriented line graph into chosen arcs and their reverses."""
    v0 = sorted(idx.index[a] for a in o.chosen)
    v1 = sorted(idx.index[(b, a)] for a, b in o.chosen)
    return tuple(v0), tuple(v1)


SignConvention = Literal["straight", "cut"]


def signed_line_graph(g: Graph, o: Orientation, convention: SignConvention = "straight") -> SignedGraph:
    """Signed line graph obtained from the 2-lift structure of L*(G) over L(G).

    Each edge ``{e, f}`` of L(G), with ``e = {u, v}`` and ``f = {v, w}``, lifts
    to ``{(u,v), (v,w)}`` and ``{(w,v), (v,u)}`` in L*(G). Both lifts either
    cross the partition ``(V0, V1)`` or both stay inside one part.

    ``convention="straight"`` (default) signs an edge +1 when its lifts stay
    inside a part and -1 when they cross. Its spectrum is the complement of
    spec L(G) inside spec L*(G). ``convention="cut"`` is the opposite
    assignment (+1 on crossing) and yields the negated spectrum.
    """
    validate_regular_connected(g)
    if o.base != g:
        raise GraphError("orientation is for a different graph")
    if convention not in ("straight", "cut"):
        raise ValueError(f"unknown sign convention {convention!r}")
    idx = ArcIndex.of(g)
    v0, _ = orientation_partition(o, idx)
    side = [1] * len(idx)
    for a in v0:
        side[a] = 0
    lg = line_graph(g)
    signs = []
    for e, f in lg.edges:
        (a, b), (c, d) = g.edges[e], g.edges[f]
        v = ({a, b} & {c, d}).pop()
        u = a if b == v else b
        w = c if d == v else d
        first = side[idx.index[(u, v)]] != side[idx.index[(v, w)]]
        second = side[idx.index[(w, v)]] != side[idx.index[(v, u)]]
        if first != second:
            raise AssertionError(f"lifts of line-graph edge {(e, f)} disagree on crossing")
        crosses = first
        if convention == "straight":
            signs.append(-1 if crosses else 1)
        else:
            signs.append(1 if crosses else -1)
    return SignedGraph(lg, tuple(signs))


OPERATOR_KINDS = ("adjacency_lstar", "adjacency_line", "nonbacktracking", "skew", "hermitian", "signed")


def _nonbacktracking(g: Graph) -> IntMatrix:
    olg, idx = oriented_line_graph(g)
    b = [[0] * olg.n for _ in range(olg.n)]
    for i, j in olg.arcs:
        b[i][j] = 1
    return IntMatrix(tuple(map(tuple, b)))


def operator_matrix(
    g: Graph,
    kind: str,
    orientation: Orientation | None = None,
    convention: SignConvention = "straight",
) -> IntMatrix | GaussianMatrix:
    """Matrix of the requested operator, indexed by ArcIndex order where relevant.

    ``nonbacktracking`` is B, ``adjacency_lstar`` is B + B^T, ``skew`` is
    B - B^T, ``hermitian`` is iB - iB^T, ``adjacency_line`` is A(L(G)) and
    ``signed`` is the signed adjacency of :func:`signed_line_graph`.
    """
    if kind == "nonbacktracking":
        return _nonbacktracking(g)
    if kind == "adjacency_lstar":
        b = _nonbacktracking(g)
        return b + b.transpose()
    if kind == "skew":
        b = _nonbacktracking(g)
        return b - b.transpose()
    if kind == "hermitian":
        s = _nonbacktracking(g)
        s = s - s.transpose()
        return GaussianMatrix(tuple(tuple(GaussianInt(0, v) for v in r) for r in s.rows))
    if kind == "adjacency_line":
        return adjacency_matrix(line_graph(g))
    if kind == "signed":
        if orientation is None:
            raise ValueError("kind='signed' requires an orientation")
        return signed_line_graph(g, orientation, convention).adjacency_matrix()
    raise ValueError(f"unknown operator kind {kind!r}; expected one of {OPERATOR_KINDS}")
