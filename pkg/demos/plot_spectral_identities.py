"""
Closed forms for line-graph spectra
===================================

For a connected d-regular graph every operator built from the non-backtracking
matrix B has a characteristic polynomial that follows from char(A). Here the
closed forms are compared with direct exact computation on the Petersen graph.
"""

from orientedline import Orientation, petersen_graph, spectrum_handle, verify_identity
from orientedline.spectral_identities import IDENTITIES, formula_for

g = petersen_graph()
h = spectrum_handle(g)
print("char(A) =", h.pA.factored())

for which in IDENTITIES:
    o = Orientation.auto(g) if which == "signed" else None
    report = verify_identity(g, which, o, handle=h)
    print(f"{which:>16}: {report.verdict:<8} {formula_for(h, which).factored()}")

# integer eigenvalues of A carry over to L*(G)
print("char(L*(G)) =", formula_for(h, "lstar").factored())
