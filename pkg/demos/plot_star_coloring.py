"""
Star colorings and out-neighbourhood homomorphisms
==================================================

A star coloring gives an orientation together with a map into D(K_q) that is
injective on every out-neighbourhood. The reverse direction does not always
hold, and a four-vertex path already shows it.
"""

from orientedline import (
    Orientation,
    StarConverseCounterexample,
    coloring_to_onih,
    complete_graph,
    cycle_graph,
    is_onh,
    onih_to_coloring,
    path_graph,
    star_chromatic_number,
    symmetric_digraph,
    theorem7_check,
    underlying_and_line_graph,
)

for name, g in [("P4", path_graph(4)), ("C5", cycle_graph(5)), ("K4", complete_graph(4))]:
    c = star_chromatic_number(g, g.n)
    o, psi = coloring_to_onih(c)
    print(f"{name}: star chromatic number {c.q}, coloring {c.f}, orientation {o.chosen}")

# a directed path colored 0,1,0,1 is injective on out-neighbourhoods but
# the path itself is bicolored
o = Orientation(path_graph(4), ((0, 1), (1, 2), (2, 3)))
print("ONIH into D(K2):", is_onh(o.digraph(), symmetric_digraph(complete_graph(2)), [0, 1, 0, 1]))
try:
    onih_to_coloring(o, [0, 1, 0, 1], 2)
except StarConverseCounterexample as exc:
    print("not a star coloring:", exc.violation.kind, exc.violation.vertices)

# a 4-regular claw-free star-colorable graph is divisible by char(L*(K4))
lstar, _, _ = underlying_and_line_graph(complete_graph(4))
report = theorem7_check(lstar, 2)
print("divisible:", report.divisible, "quotient:", report.quotient)
