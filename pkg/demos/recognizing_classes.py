"""
Recognizing bichain and split permutation graphs
================================================

Every recognizer answers with a certificate: a chain partition when the
answer is yes, an induced forbidden subgraph when it is no.
"""

from bichain import is_bichain, is_split_permutation, z_grid, zsplit_grid
from bichain.classes import dilworth_number, forbidden_graphs
from bichain.graph import cycle_graph, path_graph

###############################################################################
# Z-grids are bichain: each side splits into two neighbourhood chains.

rep = is_bichain(z_grid(4, 4).graph)
print("Z(4,4) bichain:", rep.verdict)
print("chains in part X:", rep.witness["chains"][0])

###############################################################################
# C6 and P7 are rejected, and the witness says where the forbidden graph is.

for G in (cycle_graph(6), path_graph(7), cycle_graph(5)):
    rep = is_bichain(G)
    print(G, "->", rep.verdict, rep.forbidden, rep.witness.mapping)

###############################################################################
# Split permutation graphs: split graphs whose vicinal order has no
# antichain of size 3.  The four sun-like obstructions all have Dilworth
# number 3.

print("Z*(4,4):", is_split_permutation(zsplit_grid(4, 4).graph).verdict)
for name in ("Sun3", "Co-sun3", "Rising-sun", "Co-rising-sun"):
    F = forbidden_graphs()[name]
    print(name, F.n, "vertices, Dilworth number", dilworth_number(F))
