"""Star colorings and neighbourhood-constrained homomorphisms.

A vertex map is passed around as a plain sequence ``psi`` with ``psi[v]`` the
image of source vertex ``v``. Checkers return ``None`` when the object is valid
and a :class:`Violation` witness otherwise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal, Sequence

from .exact_algebra import IntPolynomial, NotDivisible, X, charpoly_exact, poly_exact_divide
from .graph_core import Digraph, Graph, adjacency_matrix, complete_graph
from .line_operators import Orientation, symmetric_digraph

__all__ = [
    "Coloring",
    "Violation",
    "StarConverseCounterexample",
    "Theorem7Report",
    "check_star_coloring",
    "is_star_coloring",
    "find_star_coloring",
    "star_chromatic_number",
    "check_lbh",
    "is_lbh",
    "check_onh",
    "is_onh",
    "coloring_to_onih",
    "onih_to_coloring",
    "find_lbh",
    "find_onh",
    "claw_witness",
    "theorem7_divisor",
    "theorem7_check",
]


@dataclass(frozen=True)
class Coloring:
    g: Graph
    f: tuple[int, ...]
    q: int

    def __post_init__(self):
        f = tuple(self.f)
        if len(f) != self.g.n:
            raise ValueError(f"coloring has {len(f)} entries for {self.g.n} vertices")
        if any(not 0 <= c < self.q for c in f):
            raise ValueError(f"colors must lie in 0..{self.q - 1}")
        object.__setattr__(self, "f", f)


@dataclass(frozen=True)
class Violation:
    kind: str
    vertices: tuple[int, ...]
    detail: str = ""

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


class StarConverseCounterexample(Exception):
    """An out-neighbourhood injective homomorphism into D(K_q) whose map is not a star coloring."""

    def __init__(self, orientation: Orientation, psi: Sequence[int], violation: Violation):
        super().__init__(
            f"orientation + ONIH whose map {list(psi)} is not a star coloring: "
            f"{violation.kind} on {violation.vertices}"
        )
        self.orientation = orientation
        self.psi = tuple(psi)
        self.violation = violation


# ---------------------------------------------------------------------------
# Star coloring
# ---------------------------------------------------------------------------


def check_star_coloring(c: Coloring) -> Violation | None:
    g, f = c.g, c.f
    for u, v in g.edges:
        if f[u] == f[v]:
            return Violation("improper-edge", (u, v))
    # every 4-vertex path u-v-w-x is found through its middle edge {v, w}
    for v, w in g.edges:
        for a, b in ((v, w), (w, v)):
            for u in g.neighbors(a):
                if u == b or f[u] != f[b]:
                    continue
                for x in g.neighbors(b):
                    if x != a and x != u and f[x] == f[a]:
                        return Violation("bicolored-path", (u, a, b, x))
    return None


def is_star_coloring(c: Coloring) -> bool:
    return check_star_coloring(c) is None


def _star_conflict(g: Graph, f: list[int], v: int) -> bool:
    """Does the colored vertex ``v`` close an improper edge or bicolored P4?"""
    fv = f[v]
    nbrs = g.adjacency
    for a in nbrs[v]:
        fa = f[a]
        if fa < 0:
            continue
        if fa == fv:
            return True
        # v at an end: v-a-b-c with f(b) = f(v), f(c) = f(a)
        for b in nbrs[a]:
            if b == v or f[b] != fv:
                continue
            for c in nbrs[b]:
                if c != a and c != v and f[c] == fa:
                    return True
        # v second: a-v-b-c with f(b) = f(a), f(c) = f(v)
        for b in nbrs[v]:
            if b == a or f[b] != fa:
                continue
            for c in nbrs[b]:
                if c != v and c != a and f[c] == fv:
                    return True
    return False


def find_star_coloring(g: Graph, q: int) -> Coloring | None:
    """Backtracking search for a star q-coloring.

    Vertices are visited by descending degree; a vertex may only open the
    next unused color, so the first vertex always gets color 0.
    """
    if g.n == 0:
        return Coloring(g, (), max(q, 0))
    if q < 1:
        return None
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    f = [-1] * g.n

    def extend(k: int, used: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for col in range(min(used + 1, q)):
            f[v] = col
            if not _star_conflict(g, f, v) and extend(k + 1, max(used, col + 1)):
                return True
        f[v] = -1
        return False

    if extend(0, 0):
        return Coloring(g, tuple(f), q)
    return None


def star_chromatic_number(g: Graph, qmax: int) -> Coloring | None:
    """Least q <= qmax admitting a star q-coloring, as a witness coloring (``.q``).

    Returns None when no star coloring with at most ``qmax`` colors exists.
    """
    if qmax < 1:
        raise ValueError("qmax must be at least 1")
    for q in range(1 if g.n else 0, qmax + 1):
        c = find_star_coloring(g, q)
        if c is not None:
            return c
    return None


# ---------------------------------------------------------------------------
# Homomorphism checkers
# ---------------------------------------------------------------------------


def _map_problem(psi: Sequence[int], n_src: int, n_dst: int) -> Violation | None:
    if len(psi) != n_src:
        return Violation("not-total", (), f"map has {len(psi)} entries for {n_src} vertices")
    for v, t in enumerate(psi):
        if not 0 <= t < n_dst:
            return Violation("out-of-range", (v,), f"image {t} is not a target vertex")
    return None


def check_lbh(src: Graph, dst: Graph, psi: Sequence[int]) -> Violation | None:
    """Locally bijective: ``psi`` maps every N(v) bijectively onto N(psi(v))."""
    bad = _map_problem(psi, src.n, dst.n)
    if bad:
        return bad
    for v in range(src.n):
        nv = src.neighbors(v)
        if len(nv) != dst.degree(psi[v]):
            return Violation("size-mismatch", (v,), f"deg {len(nv)} vs deg {dst.degree(psi[v])} at image")
        seen: dict[int, int] = {}
        for w in nv:
            t = psi[w]
            if not dst.has_edge(psi[v], t):
                return Violation("non-edge-image", (v, w))
            if t in seen:
                return Violation("collision", (v, seen[t], w))
            seen[t] = w
    return None


def is_lbh(src: Graph, dst: Graph, psi: Sequence[int]) -> bool:
    return check_lbh(src, dst, psi) is None


def check_onh(
    src: Digraph, dst: Digraph, psi: Sequence[int], mode: Literal["injective", "bijective"] = "injective"
) -> Violation | None:
    """Out-neighbourhood injective (or bijective) homomorphism check."""
    if mode not in ("injective", "bijective"):
        raise ValueError(f"mode must be 'injective' or 'bijective', not {mode!r}")
    bad = _map_problem(psi, src.n, dst.n)
    if bad:
        return bad
    for v in range(src.n):
        out = src.out_neighbors(v)
        seen: dict[int, int] = {}
        for w in out:
            t = psi[w]
            if not dst.has_arc(psi[v], t):
                return Violation("non-arc-image", (v, w))
            if t in seen:
                return Violation("collision", (v, seen[t], w))
            seen[t] = w
        if mode == "bijective" and len(out) != len(dst.out_neighbors(psi[v])):
            return Violation("size-mismatch", (v,))
    return None


def is_onh(src: Digraph, dst: Digraph, psi: Sequence[int], mode: str = "injective") -> bool:
    return check_onh(src, dst, psi, mode) is None


# ---------------------------------------------------------------------------
# Star colorings <-> ONIH into D(K_q)
# ---------------------------------------------------------------------------


def coloring_to_onih(c: Coloring) -> tuple[Orientation, tuple[int, ...]]:
    """Orient each bicolored star leaf -> center; the map is the coloring itself.

    A bare bicolored edge takes its smaller endpoint as the center.
    """
    bad = check_star_coloring(c)
    if bad:
        raise ValueError(f"not a star coloring: {bad.kind} on {bad.vertices}")
    g, f = c.g, c.f
    head: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        if (u, v) in head:
            continue
        pair = {f[u], f[v]}
        # bicolored component containing this edge
        comp_edges = []
        seen = {u, v}
        queue = deque([u, v])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if f[y] in pair and f[y] != f[x]:
                    e = (min(x, y), max(x, y))
                    if e not in comp_edges:
                        comp_edges.append(e)
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
        deg: dict[int, int] = {}
        for x, y in comp_edges:
            deg[x] = deg.get(x, 0) + 1
            deg[y] = deg.get(y, 0) + 1
        if len(comp_edges) == 1:
            center = min(seen)
        else:
            hubs = [x for x, k in deg.items() if k > 1]
            if len(hubs) != 1 or deg[hubs[0]] != len(comp_edges):
                raise AssertionError(f"bicolored component {sorted(seen)} is not a star")
            center = hubs[0]
        for e in comp_edges:
            head[e] = center
    chosen = tuple((v, u) if head[(u, v)] == u else (u, v) for u, v in g.edges)
    return Orientation(g, chosen), f


@lru_cache(maxsize=None)
def complete_target(q: int) -> Digraph:
    """D(K_q); for q = 1 the single vertex with no arcs."""
    return symmetric_digraph(complete_graph(q))


def onih_to_coloring(orientation: Orientation, psi: Sequence[int], q: int) -> Coloring:
    """Read a coloring off an ONIH into D(K_q) and confirm it is a star coloring.

    Raises ValueError for an invalid ONIH and :class:`StarConverseCounterexample`
    when the ONIH is valid but its map is not a star coloring.
    """
    target = complete_target(q)
    bad = check_onh(orientation.digraph(), target, psi, "injective")
    if bad:
        raise ValueError(f"not an ONIH into D(K_{q}): {bad.kind} on {bad.vertices}")
    c = Coloring(orientation.base, tuple(psi), q)
    bad = check_star_coloring(c)
    if bad:
        raise StarConverseCounterexample(orientation, psi, bad)
    return c


# ---------------------------------------------------------------------------
# Searches
# ---------------------------------------------------------------------------


def _bfs_order(g: Graph) -> tuple[list[int], list[int]]:
    """Vertices in BFS order per component, with each vertex's BFS parent (-1 at roots)."""
    order, parent = [], [-1] * g.n
    seen = [False] * g.n
    for root in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    queue.append(y)
    return order, parent


def find_lbh(src: Graph, dst: Graph) -> tuple[int, ...] | None:
    """Backtracking search for a locally bijective homomorphism ``src -> dst``."""
    if src.n == 0:
        return ()
    order, parent = _bfs_order(src)
    psi = [-1] * src.n
    by_degree: dict[int, list[int]] = {}
    for t in range(dst.n):
        by_degree.setdefault(dst.degree(t), []).append(t)

    def consistent(v: int, t: int) -> bool:
        for w in src.neighbors(v):
            tw = psi[w]
            if tw >= 0 and not dst.has_edge(t, tw):
                return False
            # t must not collide with images of other mapped neighbours of w
            for x in src.neighbors(w):
                if x != v and psi[x] == t:
                    return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        if parent[v] >= 0:
            cands = [t for t in dst.neighbors(psi[parent[v]]) if dst.degree(t) == src.degree(v)]
        else:
            cands = by_degree.get(src.degree(v), [])
        for t in cands:
            if consistent(v, t):
                psi[v] = t
                if extend(k + 1):
                    return True
                psi[v] = -1
        return False

    if extend(0) and is_lbh(src, dst, psi):
        return tuple(psi)
    return None


def find_onh(src: Digraph, dst: Digraph, mode: str = "injective") -> tuple[int, ...] | None:
    """Exhaustive backtracking for an out-neighbourhood injective/bijective homomorphism."""
    if mode not in ("injective", "bijective"):
        raise ValueError(f"mode must be 'injective' or 'bijective', not {mode!r}")
    psi = [-1] * src.n

    def ok(v: int) -> bool:
        t = psi[v]
        if mode == "bijective" and len(src.out_neighbors(v)) != len(dst.out_neighbors(t)):
            return False
        for w in src.out_neighbors(v):
            if psi[w] >= 0 and not dst.has_arc(t, psi[w]):
                return False
        for u in src.in_neighbors(v):
            if psi[u] < 0:
                continue
            if not dst.has_arc(psi[u], t):
                return False
            if any(x != v and psi[x] == t for x in src.out_neighbors(u)):
                return False
        imgs = [psi[w] for w in src.out_neighbors(v) if psi[w] >= 0]
        return len(imgs) == len(set(imgs))

    def extend(v: int) -> bool:
        if v == src.n:
            return True
        for t in range(dst.n):
            psi[v] = t
            if ok(v) and extend(v + 1):
                return True
        psi[v] = -1
        return False

    if extend(0) and is_onh(src, dst, psi, mode):
        return tuple(psi)
    return None


# ---------------------------------------------------------------------------
# Divisibility consequence for K_{1,p+1}-free 2p-regular graphs
# ---------------------------------------------------------------------------


def claw_witness(g: Graph, size: int) -> tuple[int, tuple[int, ...]] | None:
    """A vertex with ``size`` pairwise non-adjacent neighbours, if any."""
    for v in range(g.n):
        nbrs = g.neighbors(v)
        chosen: list[int] = []

        def grow(start: int) -> bool:
            if len(chosen) == size:
                return True
            for k in range(start, len(nbrs)):
                w = nbrs[k]
                if all(not g.has_edge(w, x) for x in chosen):
                    chosen.append(w)
                    if grow(k + 1):
                        return True
                    chosen.pop()
            return False

        if grow(0):
            return v, tuple(chosen)
    return None


def theorem7_divisor(p: int) -> IntPolynomial:
    """(x-2p)(x+2)^((p-1)(p+2)/2)(x-2)^(p(p+1)/2)(x-p+2)^(p+1)(x+p)^(p+1)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return (
        (X - 2 * p)
        * (X + 2) ** ((p - 1) * (p + 2) // 2)
        * (X - 2) ** (p * (p + 1) // 2)
        * (X - p + 2) ** (p + 1)
        * (X + p) ** (p + 1)
    )


@dataclass
class HypothesisVerdict:
    holds: bool
    reason: str = ""
    witness: object = None


@dataclass
class Theorem7Report:
    p: int
    regular: HypothesisVerdict
    claw_free: HypothesisVerdict
    star_colorable: HypothesisVerdict
    divisor: IntPolynomial
    divisible: bool | None = None
    quotient: IntPolynomial | None = None
    remainder: tuple | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def hypotheses_hold(self) -> bool:
        return self.regular.holds and self.claw_free.holds and self.star_colorable.holds

    def to_json(self) -> dict:
        def verdict(h: HypothesisVerdict) -> dict:
            out = {"holds": h.holds}
            if h.reason:
                out["reason"] = h.reason
            return out

        out = {
            "p": self.p,
            "hypotheses": {
                "regular": verdict(self.regular),
                "claw_free": verdict(self.claw_free),
                "star_colorable": verdict(self.star_colorable),
            },
            "divisor_coeffs": [str(c) for c in self.divisor.coeffs],
            "divisible": self.divisible,
        }
        if self.star_colorable.holds and isinstance(self.star_colorable.witness, Coloring):
            out["star_coloring"] = list(self.star_colorable.witness.f)
        if self.quotient is not None:
            out["quotient_coeffs"] = [str(c) for c in self.quotient.coeffs]
        if self.remainder is not None:
            out["remainder"] = [str(c) for c in self.remainder]
        return out


def theorem7_check(g: Graph, p: int, force_divisibility: bool = False) -> Theorem7Report:
    """Check the hypotheses of the divisibility result and, if they hold, the divisibility.

    Each hypothesis is reported on its own. With ``force_divisibility`` the
    division is attempted even when some hypothesis fails.
    """
    from .spectral_identities import formula_lstar, spectrum_handle

    divisor = theorem7_divisor(p)
    if divisor != formula_lstar(spectrum_handle(complete_graph(p + 2))):
        raise AssertionError(f"divisor for p={p} disagrees with char L*(K_{p + 2})")

    degs = sorted(set(g.degrees()))
    if degs == [2 * p]:
        regular = HypothesisVerdict(True)
    elif len(degs) == 1:
        regular = HypothesisVerdict(False, f"not {2 * p}-regular (degree {degs[0]})")
    else:
        regular = HypothesisVerdict(False, f"not {2 * p}-regular (not regular)")

    claw = claw_witness(g, p + 1)
    claw_free = (
        HypothesisVerdict(True)
        if claw is None
        else HypothesisVerdict(False, f"contains K_1,{p + 1} centred at {claw[0]}", claw)
    )

    coloring = find_star_coloring(g, p + 2)
    star = (
        HypothesisVerdict(True, witness=coloring)
        if coloring is not None
        else HypothesisVerdict(False, f"not star {p + 2}-colorable")
    )

    report = Theorem7Report(p, regular, claw_free, star, divisor)
    if report.hypotheses_hold or force_divisibility:
        res = poly_exact_divide(charpoly_exact(adjacency_matrix(g)), divisor)
        if isinstance(res, NotDivisible):
            report.divisible = False
            report.remainder = res.remainder
        else:
            report.divisible = True
            report.quotient = res
    return report
