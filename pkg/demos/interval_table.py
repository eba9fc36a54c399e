"""
Least sizes for intervals [m, n]
================================

Prints the triangle of lq([m, n]) and shows where the two construction
regimes meet.
"""

from degset.closedform import (
    interval_branch,
    interval_candidates,
    interval_increment_formula,
    lq_interval,
    lq_interval_one,
)

N = 10

for n in range(1, N + 1):
    row = [lq_interval(m, n).lq for m in range(1, n + 1)]
    print(f"n={n:>2}", " ".join(f"{x:>4}" for x in row))

# Small minimum: the rewired graph keeps the size of [1, n].
print()
for n in (6, 9, 10):
    small = [m for m in range(1, n) if interval_branch(m, n) == "small"]
    print(f"n={n}: small-regime m = {small}, all of size {lq_interval_one(n)}")

# Large minimum: exactly one of two candidate sequences is graphic.
print()
for m, n in [(3, 5), (3, 8), (5, 9)]:
    c = interval_candidates(m, n)
    inc = lq_interval(m, n).lq - lq_interval_one(n)
    print(f"[{m},{n}] s1={c.s1} s2={c.s2} -> graphic: {c.graphic}")
    # The m mod 4 increment is only right when ceil(n/2) == m.
    print(f"   increment {inc}, m mod 4 formula says {interval_increment_formula(m)}")
