"""Bichain graphs: grids, transforms, widths, recognizers and antichains.

Graphs are simple and undirected, stored as bitset rows (``Graph.adj``).
"""

from .errors import CapacityError, GraphInputError, InternalConsistencyError, PreconditionError
from .graph import (Bipartition, Embedding, Graph, LabelledGraph, LabelPoset, all_bipartitions,
                    all_graphs, are_isomorphic, enumerate_embeddings, find_embedding, induced_subgraph)
from .grids import (chain_universal, s_circ, s_graph, t_circ, t_graph, x_grid, y_grid, z_grid,
                    zsplit_grid, zy_cross_embedding)
from .transforms import local_complement, pivot, pivot_x_to_y, split_bipartite_transform
from .width import clique_width, clique_width_expression, rank_width
from .classes import dilworth_number, is_bichain, is_k_chain, is_split, is_split_permutation
from .decomposition import canonical_decompose, compose, is_canonically_prime
from .letters import LetterSystem, decode_letter_graph, z_letter_encoding, zsplit_letter_encoding
from .wqo import embed_in_bounded_columns, labelled_embeds, verify_antichain

__version__ = "0.1.0"
