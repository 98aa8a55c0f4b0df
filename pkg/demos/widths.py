"""
Rank-width and clique-width
===========================

Exact values for small graphs, with witnesses.
"""

from bichain import chain_universal, clique_width_expression, rank_width
from bichain.graph import cycle_graph, path_graph
from bichain.transforms import local_complement, pivot
from bichain.width import chain_3expression, rank_decomposition

###############################################################################
# Rank-width comes with a layout whose widest cut realises it.

w, layout = rank_decomposition(cycle_graph(6))
print("rank-width of C6:", w)
print("layout:", layout)

###############################################################################
# Local complementation and pivoting never change rank-width.

G = path_graph(6)
print([rank_width(local_complement(G, v)) for v in range(G.n)])
print([rank_width(pivot(G, u, v)) for u, v in G.edges()])

###############################################################################
# Clique-width is searched exactly; the expression evaluates back to G.
# The prism (complement of C6) is the one 6-vertex graph needing 4 labels.

for G in (path_graph(4), cycle_graph(6), cycle_graph(6).complement()):
    expr = clique_width_expression(G)
    print(G, "cwd =", expr.k, "check:", expr.to_graph() == G)

###############################################################################
# Chain graphs need only three labels, whatever their size.

expr = chain_3expression(10)
print("labels:", sorted(expr.labels_used()), "builds chain graph:", expr.to_graph() == chain_universal(10)[0])
