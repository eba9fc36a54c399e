"""Independent ground truth for the test-suite.

Everything here is deliberately naive and shares no code with the package.
"""

from functools import lru_cache
from itertools import combinations, combinations_with_replacement

import numpy as np


@lru_cache(maxsize=None)
def labelled_graph_degree_table(p: int = 7) -> frozenset:
    """Every degree multiset realised by a simple graph on <= p vertices,
    zeros dropped, sorted nonincreasing.

    Enumerates all 2^(p(p-1)/2) labelled graphs on p vertices; isolated
    vertices cover every smaller order.
    """
    pairs = list(combinations(range(p), 2))
    incidence = np.zeros((len(pairs), p), dtype=np.int16)
    for i, (u, v) in enumerate(pairs):
        incidence[i, u] = incidence[i, v] = 1
    shifts = np.arange(len(pairs), dtype=np.uint32)
    table = set()
    chunk = 1 << 16
    total = 1 << len(pairs)
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.uint32)
        bits = ((masks[:, None] >> shifts) & 1).astype(np.int16)
        deg = -np.sort(-(bits @ incidence), axis=1)
        for row in np.unique(deg, axis=0):
            table.add(tuple(int(x) for x in row if x))
    table.discard(())
    return frozenset(table)


def graphic_by_enumeration(seq, p: int = 7) -> bool:
    return tuple(sorted(seq, reverse=True)) in labelled_graph_degree_table(p)


def all_sequences(max_len: int, max_value: int):
    """Every nonincreasing positive integer tuple with length <= max_len."""
    for p in range(1, max_len + 1):
        for c in combinations_with_replacement(range(max_value, 0, -1), p):
            yield c


def eg_naive(seq) -> bool:
    a = sorted(seq, reverse=True)
    if sum(a) % 2:
        return False
    for k in range(1, len(a) + 1):
        if sum(a[:k]) > k * (k - 1) + sum(min(k, x) for x in a[k:]):
            return False
    return True


def subsets(universe, max_size=None):
    items = list(universe)
    top = len(items) if max_size is None else max_size
    for r in range(1, top + 1):
        for c in combinations(items, r):
            yield c


def degree_audit(vertex_count, edges):
    deg = [0] * vertex_count
    seen = set()
    for u, v in edges:
        assert u != v
        key = (min(u, v), max(u, v))
        assert key not in seen
        seen.add(key)
        deg[u] += 1
        deg[v] += 1
    return deg
