"""
Grids and pivots
================

The three grid families X, Y and Z, and how a handful of pivots turn an
X-grid into a Y-grid.
"""

from bichain import pivot_x_to_y, x_grid, y_grid, z_grid, zy_cross_embedding
from bichain.grids import Y_INTO_Z, Z_INTO_Y
from bichain.transforms import bottom_row_schedule

###############################################################################
# A grid is a graph plus a shape.  Vertex (column, row) sits at index
# (column - 1) * rows + (row - 1); row 1 is the bottom row.

g = z_grid(4, 3)
print(g.graph)
print("vertex 5 is at", g.coord(5))

###############################################################################
# In an X-grid, consecutive columns induce a chain graph: a vertex is joined
# to every vertex of the next column at the same height or lower.

x = x_grid(3, 3)
for v in x.column(1):
    print(x.coord(v), "->", [x.coord(u) for u in x.graph.neighbours(v) if x.coord(u)[0] == 2])

###############################################################################
# Pivot X(4,4) on alternate bottom-row edges, right to left.  The result is
# Y(4,4), vertex for vertex.

n = 2
print("pivot edges:", [(x_grid(4, 4).coord(u), x_grid(4, 4).coord(v)) for u, v in bottom_row_schedule(n)])
G, trace = pivot_x_to_y(n)
print("equal to Y(4,4):", G == y_grid(4, 4).graph)

###############################################################################
# Z and Y grids embed into each other at double size.

for n in (2, 3):
    e = zy_cross_embedding(n, Z_INTO_Y)
    f = zy_cross_embedding(n, Y_INTO_Z)
    print(n, "Z into Y:", e.mapping[:4], "...  Y into Z:", f.mapping[:4], "...")
