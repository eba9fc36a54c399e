"""
Least size for the degree set {5, 4, 3}
=======================================

Walks one instance from the padded one-copy sequence down to an
optimal graph.
"""

from degset import DegreeSet, lq_exact, min_padding, search_window, lq_oracle
from degset.graphicality import delta

d = DegreeSet([5, 4, 3])

# One vertex per degree is far from graphic; the slack tells by how much.
pad = min_padding(d)
print("base:", pad.base, " slack at k=2:", delta(pad.base, 2))
print("copies of min D needed: C* =", pad.C_star, "->", pad.padded)

# The padded half-sum overshoots the optimum by less than min D.
window = search_window(d)
print("twice the optimum lies in", window, "; even totals:", window.candidates())

out = lq_exact(d, with_graph=True)
print("lq =", out.lq, "witness:", out.witness)
print("oracle agrees:", lq_oracle(d) == out.lq)

# The witness graph, ready for graphviz.
print(out.graph.to_dot())
