"""
Building the oriented line graph
================================

A small graph with a pendant edge and a triangle, turned into its symmetric
digraph, its oriented line graph and the undirected graph underneath.
"""

from orientedline import paw_graph, oriented_line_graph, symmetric_digraph, underlying_and_line_graph

g = paw_graph()
print("edges of G:", g.edges)

# every edge becomes a pair of opposite arcs
dg = symmetric_digraph(g)
print("arcs of D(G):", dg.arcs)

# arcs (u,v) -> (v,w) with u != w, so no step ever turns straight back
olg, idx = oriented_line_graph(g)
for a, b in olg.arcs:
    print(f"  {idx[a]} -> {idx[b]}")

# forgetting directions gives L*(G); collapsing each arc pair gives L(G)
lstar, lg, proj = underlying_and_line_graph(g)
print("L*(G):", lstar.n, "vertices,", lstar.m, "edges")
print("L(G): ", lg.n, "vertices,", lg.m, "edges")
print("fibers of the projection:", proj.fibers)
