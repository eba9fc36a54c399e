"""
How good is the padded sequence?
================================

Compares the padded half-sum against the exact optimum over small
degree sets, and checks the ratio bound.
"""

from itertools import combinations

from degset import DegreeSet, approx_sequence, lq_exact
from degset.solver import ratio_bound_m

worst = []
for size in range(1, 4):
    for combo in combinations(range(1, 10), size):
        d = DegreeSet(combo)
        lq = lq_exact(d).lq
        approx = approx_sequence(d).sigma // 2
        ratio = approx / lq
        worst.append((ratio, str(d), approx, lq, 1 + ratio_bound_m(d)))

worst.sort(reverse=True)
print("largest approximation ratios (set, approx, exact, bound):")
for ratio, name, approx, lq, bound in worst[:8]:
    print(f"  {{{name}}}: {approx} vs {lq}  ratio {ratio:.4f} < {bound:.4f}")

exact_hits = sum(1 for r, *_ in worst if r == 1)
print(f"padding is already optimal for {exact_hits} of {len(worst)} sets")
