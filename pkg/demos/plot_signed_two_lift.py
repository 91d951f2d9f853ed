"""
The signed line graph as a 2-lift
=================================

Choosing one arc per edge splits the arcs of D(G) into two halves. Reading
L*(G) as a 2-lift of L(G) through that split gives a signed graph whose
spectrum does not depend on the orientation chosen.
"""

from orientedline import Orientation, charpoly_exact, complete_graph, petersen_graph, signed_line_graph

g = complete_graph(4)
for label, o in [("auto", Orientation.auto(g)), ("seed 1", Orientation.random(g, 1)), ("seed 2", Orientation.random(g, 2))]:
    sg = signed_line_graph(g, o)
    negative = sum(1 for e in sg.base.edges if sg.sign(*e) < 0)
    print(f"{label:>7}: {negative} negative edges, char = {charpoly_exact(sg.adjacency_matrix()).factored()}")

# on the Petersen graph the opposite sign convention visibly flips the spectrum
p = petersen_graph()
for convention in ("straight", "cut"):
    sg = signed_line_graph(p, Orientation.auto(p), convention=convention)
    print(f"{convention:>8}:", charpoly_exact(sg.adjacency_matrix()).factored())
