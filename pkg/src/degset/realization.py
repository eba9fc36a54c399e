"""Build witness graphs and apply size-preserving rewirings."""

from __future__ import annotations

from typing import Sequence

from .core import DegreeSequence, Graph, expand
from .errors import BadPartition, NotGraphic, PreconditionViolated
from .graphicality import is_graphic

__all__ = ["realize", "split_vertex", "reduce_odd_pair"]


def realize(s: DegreeSequence) -> Graph:
    """Havel–Hakimi construction; vertex i receives degree ``expand(s)[i]``.

    Each round takes the vertex with the largest remaining demand (lowest
    index on ties) and joins it to the next-largest ones, so the output is
    reproducible.
    """
    if not is_graphic(s):
        raise NotGraphic(f"sequence {s} is not graphic")
    remaining = expand(s)
    p = len(remaining)
    edges = []
    alive = list(range(p))
    while alive:
        alive.sort(key=lambda v: (-remaining[v], v))
        v = alive[0]
        need = remaining[v]
        if need == 0:
            break
        targets = alive[1:need + 1]
        if len(targets) < need or remaining[targets[-1]] == 0:
            raise NotGraphic(f"sequence {s} is not graphic")
        for u in targets:
            edges.append((v, u))
            remaining[u] -= 1
        remaining[v] = 0
        alive = [u for u in alive[1:] if remaining[u] > 0]
    return Graph(p, edges)


def split_vertex(g: Graph, v: int, parts: Sequence[int]) -> Graph:
    """Replace v by ``len(parts)`` vertices with the given degrees.

    Neighbours of v, in increasing order, are handed out in contiguous
    blocks. The first part keeps v's index; the others are appended.
    """
    if not 0 <= v < g.vertex_count:
        raise BadPartition(f"vertex {v} not in graph")
    parts = list(parts)
    nbrs = g.neighbors(v)
    if not parts or any(x < 1 for x in parts) or sum(parts) != len(nbrs):
        raise BadPartition(f"parts {parts} do not partition deg {v} = {len(nbrs)}")
    new_ids = [v] + list(range(g.vertex_count, g.vertex_count + len(parts) - 1))
    edges = [e for e in g.edges if v not in e]
    pos = 0
    for vid, size in zip(new_ids, parts):
        edges.extend((vid, u) for u in nbrs[pos:pos + size])
        pos += size
    return Graph(g.vertex_count + len(parts) - 1, edges)


def reduce_odd_pair(g: Graph, x: int, y: int) -> Graph:
    """Trade two non-adjacent vertices of the same odd degree d >= 3 for
    d vertices of degree 2, keeping the edge count.

    With neighbours v_1..v_d of x and w_1..w_d of y (v_1 != w_1), a new
    vertex z joins v_1 and w_1, and for i = 1..(d-1)/2 vertex a_i joins
    v_{2i}, v_{2i+1} while b_i joins w_{2i}, w_{2i+1}. z reuses x's index,
    a_1 reuses y's index and the remaining new vertices are appended.
    """
    n = g.vertex_count
    if not (0 <= x < n and 0 <= y < n) or x == y:
        raise PreconditionViolated(f"need two distinct vertices, got {x}, {y}")
    if g.has_edge(x, y):
        raise PreconditionViolated(f"vertices {x} and {y} are adjacent")
    vs, ws = g.neighbors(x), g.neighbors(y)
    d = len(vs)
    if len(ws) != d:
        raise PreconditionViolated(f"degrees differ: {d} vs {len(ws)}")
    if d < 3 or d % 2 == 0:
        raise PreconditionViolated(f"common degree {d} must be odd and at least 3")
    v1 = vs[0]
    w1 = next((w for w in ws if w != v1), None)
    if w1 is None:
        raise PreconditionViolated("no distinct first neighbours")
    ws = [w1] + [w for w in ws if w != w1]
    alpha = (d - 1) // 2
    z, a1 = x, y
    extra = iter(range(n, n + 2 * alpha - 1))
    a_ids = [a1] + [next(extra) for _ in range(alpha - 1)]
    b_ids = [next(extra) for _ in range(alpha)]
    edges = [e for e in g.edges if x not in e and y not in e]
    edges += [(z, v1), (z, w1)]
    for i in range(alpha):
        edges += [(a_ids[i], vs[2 * i + 1]), (a_ids[i], vs[2 * i + 2])]
        edges += [(b_ids[i], ws[2 * i + 1]), (b_ids[i], ws[2 * i + 2])]
    return Graph(n + 2 * alpha - 1, edges)
