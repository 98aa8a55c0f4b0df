"""
Antichains, prime graphs and letter graphs
==========================================

The coloured graphs S_k form a labelled antichain; Z-grids are letter
graphs; prime bichain graphs sit in consecutive columns of a Z-grid.
"""

from bichain import decode_letter_graph, s_circ, s_graph, verify_antichain, z_grid, z_letter_encoding
from bichain.graph import find_embedding
from bichain.letters import position_map
from bichain.wqo import canonically_prime_bichain_graphs, interval_report, minimal_column_width

###############################################################################
# Uncoloured, S_3 sits inside S_5.  Coloured, none of S_3..S_8 embeds in another.

print("S3 in S5:", find_embedding(s_graph(3).graph, s_graph(5).graph).mapping)
cert = verify_antichain([s_circ(k) for k in range(3, 9)])
print("antichain:", cert.valid)

###############################################################################
# A 7-column Z-grid read as a 7-letter graph.

L = z_letter_encoding(7, 2)
print("S =", sorted(L.S))
print("word =", L.word)
D = decode_letter_graph(L)
print("decode equals Z(7,2):", position_map(7, 2).is_induced(D, z_grid(7, 2).graph))

###############################################################################
# Canonically prime bichain graphs are rare at this size: one vertex, and
# one tree on seven.  Every placement in Z(6,6) uses consecutive columns.

primes = canonically_prime_bichain_graphs(7)
for row in interval_report(primes, z_grid(6, 6)):
    print(row)

###############################################################################
# How many columns does S_k need?  No reference value, just an observation.

print({k: minimal_column_width(s_graph(k).graph, 8) for k in (2, 3, 4)})
