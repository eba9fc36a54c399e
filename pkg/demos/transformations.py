"""
Graph transformations
=====================

Havel-Hakimi realization, splitting a vertex, and trading two equal odd
degree vertices for degree-2 and degree-3 vertices.
"""

from degset import DegreeSequence, Graph, degree_sequence_of, realize, reduce_odd_pair, split_vertex

s = DegreeSequence.from_list([3, 3, 3, 3, 2, 2])
g = realize(s)
print("realized", s, "with edges", g.sorted_edges())

# Vertex 0 has degree 3; split it into degrees 2 and 1.
h = split_vertex(g, 0, [2, 1])
print("after split:", degree_sequence_of(h), "edges", h.edge_count)

# Two non-adjacent vertices of equal odd degree in a union of two K4s.
k4 = [(u, v) for u in range(4) for v in range(u + 1, 4)]

two = Graph(8, k4 + [(u + 4, v + 4) for u, v in k4])
r = reduce_odd_pair(two, 0, 4)
print("odd pair reduced:", degree_sequence_of(two), "->", degree_sequence_of(r),
      f"({two.edge_count} -> {r.edge_count} edges)")
