"""Simple graphs and digraphs on dense integer vertex ids, plus graph6 I/O."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple

from .exact_algebra import IntMatrix

__all__ = [
    "Graph",
    "Digraph",
    "SignedGraph",
    "GraphError",
    "Graph6Error",
    "HypothesisError",
    "RegularParams",
    "complete_graph",
    "empty_graph",
    "path_graph",
    "cycle_graph",
    "complete_bipartite_graph",
    "petersen_graph",
    "hypercube_graph",
    "circulant_graph",
    "paw_graph",
    "parse_graph6",
    "write_graph6",
    "validate_regular_connected",
    "adjacency_matrix",
]


class GraphError(ValueError):
    """Raised when graph data violates simplicity or range invariants."""


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class HypothesisError(ValueError):
    """A structural hypothesis (regularity, connectivity, degree bound) fails.

    ``hypothesis`` is one of ``"regular"``, ``"connected"``, ``"degree"``.
    """

    def __init__(self, hypothesis: str, message: str):
        super().__init__(message)
        self.hypothesis = hypothesis


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is normalised on construction to a sorted tuple of ``(u, v)``
    pairs with ``u < v``; loops, duplicates and out-of-range endpoints raise
    :class:`GraphError`.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{self.n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Digraph:
    """Simple directed graph: no loops or repeated arcs, opposite arcs allowed."""

    n: int
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        seen = set()
        for u, v in self.arcs:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"arc {(u, v)} has an endpoint outside 0..{self.n - 1}")
            if (u, v) in seen:
                raise GraphError(f"duplicate arc {(u, v)}")
            seen.add((u, v))
        object.__setattr__(self, "arcs", tuple(sorted(seen)))

    @cached_property
    def _out(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(a)) for a in out)

    @cached_property
    def _in(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(a)) for a in inn)

    @cached_property
    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_set

    def arc_list(self) -> list[list[int]]:
        return [list(a) for a in self.arcs]

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


@dataclass(frozen=True)
class SignedGraph:
    """A graph with a sign in {+1, -1} on each edge, aligned with ``base.edges``."""

    base: Graph
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != self.base.m:
            raise GraphError("exactly one sign per edge is required")
        if any(s not in (1, -1) for s in self.signs):
            raise GraphError("signs must be +1 or -1")
        object.__setattr__(self, "signs", tuple(self.signs))

    def sign(self, u: int, v: int) -> int:
        return self.signs[self.base.edge_index[(min(u, v), max(u, v))]]

    def adjacency_matrix(self) -> IntMatrix:
        n = self.base.n
        a = [[0] * n for _ in range(n)]
        for (u, v), s in zip(self.base.edges, self.signs):
            a[u][v] = a[v][u] = s
        return IntMatrix(tuple(map(tuple, a)))


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def complete_graph(q: int) -> Graph:
    if q < 1:
        raise ValueError(f"complete_graph needs q >= 1, got {q}")
    return Graph(q, tuple(combinations(range(q), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path_graph needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def petersen_graph() -> Graph:
    """Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent when disjoint."""
    subsets = list(combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return Graph(len(subsets), tuple(edges))


def hypercube_graph(k: int) -> Graph:
    n = 1 << k
    return Graph(n, tuple((v, v ^ (1 << b)) for v in range(n) for b in range(k) if v < v ^ (1 << b)))


def circulant_graph(n: int, jumps: Iterable[int]) -> Graph:
    edges = set()
    for j in jumps:
        j %= n
        if j == 0:
            raise ValueError("circulant jump must be nonzero mod n")
        for v in range(n):
            w = (v + j) % n
            edges.add((min(v, w), max(v, w)))
    return Graph(n, tuple(edges))


def paw_graph() -> Graph:
    """Triangle 1-2-3 with a pendant vertex 0 attached to 1."""
    return Graph(4, ((0, 1), (1, 2), (1, 3), (2, 3)))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_HEADER = ">>graph6<<"
MAX_GRAPH6_ORDER = 68719476735  # 2**36 - 1


def _encode_order(n: int) -> str:
    if n < 0 or n > MAX_GRAPH6_ORDER:
        raise ValueError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edge_index else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        body.append(chr(v + 63))
    return _encode_order(g.n) + "".join(body)


def parse_graph6(text: str, max_order: int = 1 << 20) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` header is accepted.

    Errors carry the byte offset (relative to the original text) at which
    decoding failed.
    """
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
        base = len(_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside 63..126", base + k)

    def chunk(start: int, count: int) -> int:
        if len(s) < start + count:
            raise Graph6Error("truncated vertex count", base + len(s))
        v = 0
        for ch in s[start : start + count]:
            v = (v << 6) | (ord(ch) - 63)
        return v

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) > 1 and s[1] == "~":
        n, pos = chunk(2, 6), 8
    else:
        n, pos = chunk(1, 3), 4
    if n > max_order:
        raise Graph6Error(f"n={n} exceeds the supported maximum {max_order}", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(s) - pos
    if have != need:
        raise Graph6Error(
            f"expected {need} adjacency bytes for n={n}, found {have}",
            base + pos + min(have, need),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[pos + k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if need:
        pad = -nbits % 6
        if (ord(s[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", base + len(s) - 1)
    return Graph(n, tuple(edges))


# ---------------------------------------------------------------------------
# Hypotheses and matrices
# ---------------------------------------------------------------------------


class RegularParams(NamedTuple):
    d: int
    n: int
    m: int


def validate_regular_connected(g: Graph) -> RegularParams:
    """Check that ``g`` is connected and d-regular with d >= 3.

    Raises :class:`HypothesisError` naming the first violated hypothesis.
    """
    degs = g.degrees()
    if not degs:
        raise HypothesisError("connected", "the empty graph is not connected")
    if min(degs) != max(degs):
        raise HypothesisError(
            "regular", f"graph is not regular (degrees range {min(degs)}..{max(degs)})"
        )
    if not g.is_connected():
        raise HypothesisError("connected", "graph is not connected")
    d = degs[0]
    if d < 3:
        raise HypothesisError("degree", f"graph is {d}-regular; d >= 3 is required")
    return RegularParams(d, g.n, g.m)


def adjacency_matrix(g: Graph) -> IntMatrix:
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        a[u][v] = a[v][u] = 1
    return IntMatrix(tuple(map(tuple, a)))
