"""Random valid inputs for the graph transformations, with degree audits."""

from brute import degree_audit, eg_naive
from degset.core import DegreeSequence, Graph
from degset.realization import realize, reduce_odd_pair, split_vertex


def random_graphic(rng, lo=4, hi=14):
    while True:
        p = rng.randint(lo, hi)
        values = [rng.randint(1, p - 1) for _ in range(p)]
        if eg_naive(values):
            return DegreeSequence.from_list(values)


def random_split_case(rng):
    g = realize(random_graphic(rng))
    v = rng.randrange(g.vertex_count)
    d = g.degrees()[v]
    cuts = sorted(rng.sample(range(1, d), rng.randint(0, d - 1))) if d > 1 else []
    parts = [b - a for a, b in zip([0] + cuts, cuts + [d])]
    return g, v, parts


def check_split(g, v, parts):
    out = split_vertex(g, v, parts)
    deg_before = g.degrees()
    deg_after = degree_audit(out.vertex_count, out.edges)
    assert out.edge_count == g.edge_count
    new_ids = [v] + list(range(g.vertex_count, out.vertex_count))
    assert [deg_after[i] for i in new_ids] == parts
    assert all(deg_after[u] == deg_before[u] for u in range(g.vertex_count) if u != v)


def random_odd_pair_case(rng):
    """Two non-adjacent vertices sharing an odd degree >= 3."""
    while True:
        if rng.random() < 0.5:
            g = realize(random_graphic(rng, 5, 16))
        else:
            a = realize(random_graphic(rng, 4, 9))
            b = realize(random_graphic(rng, 4, 9))
            g = Graph(a.vertex_count + b.vertex_count,
                      list(a.edges) + [(u + a.vertex_count, v + a.vertex_count) for u, v in b.edges])
        deg = g.degrees()
        pairs = [(x, y) for x in range(g.vertex_count) for y in range(x + 1, g.vertex_count)
                 if deg[x] == deg[y] and deg[x] % 2 and deg[x] >= 3 and not g.has_edge(x, y)]
        if pairs:
            x, y = rng.choice(pairs)
            return g, x, y


def check_odd_pair(g, x, y):
    d = g.degrees()[x]
    out = reduce_odd_pair(g, x, y)
    before = g.degrees()
    after = degree_audit(out.vertex_count, out.edges)
    assert out.edge_count == g.edge_count
    survivors = [u for u in range(g.vertex_count) if u not in (x, y)]
    assert all(after[u] == before[u] for u in survivors)
    new_ids = [x, y] + list(range(g.vertex_count, out.vertex_count))
    assert len(new_ids) == d
    assert all(after[u] == 2 for u in new_ids)
    expected = sorted([b for u, b in enumerate(before) if u not in (x, y)] + [2] * d)
    assert sorted(after) == expected
