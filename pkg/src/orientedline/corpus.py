"""Test graphs: small exhaustive families and the named regular corpus."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx

from .graph_core import (
    Graph,
    circulant_graph,
    complete_bipartite_graph,
    complete_graph,
    hypercube_graph,
    petersen_graph,
)

__all__ = [
    "nonisomorphic_graphs",
    "labelled_graphs",
    "connected_cubic_graphs",
    "named_regular_graphs",
    "regular_corpus",
    "INTEGRAL_NAMES",
]


def labelled_graphs(n: int):
    """Every graph on vertex set 0..n-1 (2 ** (n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on n vertices, by brute force.

    The canonical key is the lexicographically least relabelled edge list over
    all n! permutations, so this is only meant for n <= 5.
    """
    if n > 6:
        raise ValueError("brute-force enumeration is limited to n <= 6")
    perms = list(permutations(range(n)))
    seen: dict[tuple, Graph] = {}
    for g in labelled_graphs(n):
        key = min(tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in g.edges)) for p in perms)
        if key not in seen:
            seen[key] = Graph(n, key)
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (len(k), k)))


def _cubic_labelled(n: int):
    # vertices are saturated in index order; untouched vertices are interchangeable,
    # so only the lowest-numbered untouched ones may be picked
    deg = [0] * n
    adj = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []

    def rec(v: int):
        while v < n and deg[v] == 3:
            v += 1
        if v == n:
            yield tuple(edges)
            return
        need = 3 - deg[v]
        touched = [w for w in range(v + 1, n) if 0 < deg[w] < 3 and w not in adj[v]]
        fresh = [w for w in range(v + 1, n) if deg[w] == 0]
        for k in range(min(need, len(fresh)) + 1):
            if need - k > len(touched):
                continue
            for old in combinations(touched, need - k):
                pick = list(old) + fresh[:k]
                for w in pick:
                    deg[v] += 1
                    deg[w] += 1
                    adj[v].add(w)
                    adj[w].add(v)
                    edges.append((v, w))
                yield from rec(v + 1)
                for w in pick:
                    deg[v] -= 1
                    deg[w] -= 1
                    adj[v].discard(w)
                    adj[w].discard(v)
                    edges.pop()

    yield from rec(0)


@lru_cache(maxsize=None)
def connected_cubic_graphs(n: int) -> tuple[Graph, ...]:
    """All connected 3-regular graphs on n vertices up to isomorphism."""
    if n % 2 or n < 4:
        return ()
    reps: dict[str, list[nx.Graph]] = {}
    out: list[Graph] = []
    for edges in _cubic_labelled(n):
        g = Graph(n, edges)
        if not g.is_connected():
            continue
        h = nx.Graph(list(g.edges))
        # plain WL cannot separate regular graphs; seed it with BFS layer sizes
        for v, dist in nx.all_pairs_shortest_path_length(h):
            h.nodes[v]["layers"] = str(sorted(Counter(dist.values()).items()))
        key = nx.weisfeiler_lehman_graph_hash(h, node_attr="layers", iterations=3)
        bucket = reps.setdefault(key, [])
        if any(nx.is_isomorphic(h, r) for r in bucket):
            continue
        bucket.append(h)
        out.append(g)
    return tuple(out)


def named_regular_graphs() -> dict[str, Graph]:
    return {
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "K6": complete_graph(6),
        "K3,3": complete_bipartite_graph(3, 3),
        "Petersen": petersen_graph(),
        "Q3": hypercube_graph(3),
        "C8(1,4)": circulant_graph(8, (1, 4)),
    }


INTEGRAL_NAMES = ("K4", "K6", "K3,3", "Petersen", "Q3")


def regular_corpus(max_cubic_order: int = 10) -> dict[str, Graph]:
    """Named graphs plus every connected cubic graph up to ``max_cubic_order`` vertices."""
    corpus = named_regular_graphs()
    for n in range(4, max_cubic_order + 1, 2):
        for k, g in enumerate(connected_cubic_graphs(n)):
            corpus[f"cubic{n}#{k}"] = g
    return corpus
