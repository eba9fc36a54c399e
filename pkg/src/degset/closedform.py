"""Exact least sizes for the solved families of degree sets.

Families: singletons, sets whose minimum divides every element (minimum 1
included), sets with minimum 2, and intervals ``[m, n]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DegreeSequence, DegreeSet, Graph, LqOutcome, degree_sequence_of
from .errors import BadInterval, NotApplicable
from .graphicality import is_graphic
from .padding import min_padding
from .realization import realize

__all__ = [
    "IntervalCandidates",
    "min_order",
    "lq_singleton",
    "lq_divisible",
    "lq_min1",
    "lq_min2",
    "lq_interval",
    "lq_interval_one",
    "interval_branch",
    "interval_increment_formula",
    "interval_candidates",
    "build_interval_graph",
    "is_interval",
    "closed_form",
]


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def _outcome(d, witness, method, with_graph, graph=None) -> LqOutcome:
    if with_graph and graph is None:
        graph = realize(witness)
    return LqOutcome(degree_set=d, lq=witness.sigma // 2, witness=witness,
                     method=method, graph=graph if with_graph else None)


def min_order(d: DegreeSet) -> int:
    """Fewest vertices of any graph with degree set d."""
    return d.max + 1


def lq_singleton(d, with_graph: bool = False) -> LqOutcome:
    """d(d+1)/2, attained by the complete graph K_{d+1}. Accepts an int or a one-element set."""
    if isinstance(d, DegreeSet):
        if d.n != 1:
            raise NotApplicable(f"{d} is not a singleton")
        d = d.max
    value = int(d)
    witness = DegreeSequence([(value, value + 1)])
    return _outcome(DegreeSet([value]), witness, "closed-singleton", with_graph)


def lq_divisible(d: DegreeSet, with_graph: bool = False) -> LqOutcome:
    """(sigma(D) + C* min D) / 2 when min D divides every element."""
    if any(x % d.min for x in d.degrees):
        raise NotApplicable(f"{d.min} does not divide every element of {d}")
    if d.n == 1:
        return _outcome(d, DegreeSequence([(d.max, d.max + 1)]), "closed-divisible", with_graph)
    pad = min_padding(d)
    lq2 = d.sigma + pad.C_star * d.min
    assert lq2 == pad.padded.sigma
    return _outcome(d, pad.padded, "closed-divisible", with_graph)


def lq_min1(d: DegreeSet, with_graph: bool = False) -> LqOutcome:
    if d.min != 1:
        raise NotApplicable(f"min of {d} is not 1")
    out = lq_divisible(d, with_graph)
    return LqOutcome(d, out.lq, out.witness, "closed-min1", out.graph)


def lq_min2(d: DegreeSet, with_graph: bool = False) -> LqOutcome:
    """(sigma(D) + 2C*) / 2, plus d_r / 2 when sigma(D) is odd (d_r the smallest odd element)."""
    if d.min != 2:
        raise NotApplicable(f"min of {d} is not 2")
    if d.n == 1:
        return _outcome(d, DegreeSequence([(2, 3)]), "closed-min2", with_graph)
    pad = min_padding(d)
    total = d.sigma + 2 * pad.C_star
    if d.sigma % 2:
        total += min(x for x in d.degrees if x % 2)
    assert total == pad.padded.sigma
    return _outcome(d, pad.padded, "closed-min2", with_graph)


def is_interval(d: DegreeSet) -> bool:
    return d.max - d.min + 1 == d.n


def lq_interval_one(n: int) -> int:
    """Least size for degree set {1, ..., n}: (n(n+1)/2 + ceil(n/2)) / 2."""
    return (n * (n + 1) // 2 + _ceil_half(n)) // 2


def interval_branch(m: int, n: int) -> str:
    """Which regime handles [m, n]: ``singleton``, ``small`` or ``large``.

    The boundary m(m+1) = 2 ceil(n/2) belongs to ``large``.
    """
    if not 1 <= m <= n:
        raise BadInterval(f"need 1 <= m <= n, got [{m}, {n}]")
    if m == n:
        return "singleton"
    if m * (m + 1) < 2 * _ceil_half(n):
        return "small"
    return "large"


def interval_increment_formula(m: int) -> int:
    """The published closed form for lq([m,n]) - lq([1,n]) in the large regime.

    It agrees with the true difference only when ceil(n/2) = m; use
    ``lq_interval`` for correct values. Kept for comparison.
    """
    if m % 4 in (0, 1):
        return m * (m - 1) // 4
    return (m * (m - 1) + 2) // 4


@dataclass(frozen=True)
class IntervalCandidates:
    s1: DegreeSequence
    s2: DegreeSequence
    graphic_one: str

    @property
    def graphic(self) -> DegreeSequence:
        return self.s1 if self.graphic_one == "s1" else self.s2


def interval_candidates(m: int, n: int) -> IntervalCandidates:
    """s1 = n, n-1, ..., m+1, (m)_{m+1} and s2 = n, ..., (m+1)_2, (m)_m."""
    if interval_branch(m, n) != "large":
        raise NotApplicable(f"[{m}, {n}] is not in the large-minimum regime")
    upper = [(x, 1) for x in range(n, m + 1, -1)]
    s1 = DegreeSequence(upper + [(m + 1, 1), (m, m + 1)])
    s2 = DegreeSequence(upper + [(m + 1, 2), (m, m)])
    g1, g2 = is_graphic(s1), is_graphic(s2)
    if g1 == g2:
        raise AssertionError(f"expected exactly one graphic candidate for [{m}, {n}]")
    return IntervalCandidates(s1, s2, "s1" if g1 else "s2")


def build_interval_graph(m: int, n: int) -> Graph:
    """Graph with degree set [m, n] and lq([1, n]) edges, for m(m+1) < 2 ceil(n/2)
    (or m = 1, where no rewiring happens).

    Vertex layout: x_1..x_{h-1} (h = ceil(n/2)), y_1..y_f (f = floor(n/2)),
    then w and w*. The base graph has deg x_i = i, deg y_j = n - j + 1 and
    deg w = deg w* = h. For m > 1 the last m(m-1)/2 vertices of Y drop
    their edge to w* and are shared out in blocks of size m - i to x_i,
    lifting each x_i (i < m) to degree m.
    """
    if m != 1 and interval_branch(m, n) != "small":
        raise NotApplicable(f"[{m}, {n}] is not in the small-minimum regime")
    h, f = _ceil_half(n), n // 2
    xs = list(range(h - 1))
    ys = list(range(h - 1, h - 1 + f))
    w, w_star = h - 1 + f, h + f
    edges = set()
    for i in range(1, h):
        for j in range(1, i + 1):
            edges.add((xs[i - 1], ys[j - 1]))
    for a in range(f):
        for b in range(a + 1, f):
            edges.add((ys[a], ys[b]))
    for y in ys:
        edges.add((y, w))
        edges.add((y, w_star))
    if n % 2:
        edges.add((w, w_star))
    if m > 1:
        moved = m * (m - 1) // 2
        y_prime = ys[f - moved:]
        pos = 0
        for i in range(1, m):
            for y in y_prime[pos:pos + m - i]:
                edges.discard((y, w_star))
                edges.add((xs[i - 1], y))
            pos += m - i
    return Graph(w_star + 1, edges)


def lq_interval(m: int, n: int, with_graph: bool = False) -> LqOutcome:
    branch = interval_branch(m, n)
    d = DegreeSet.interval(m, n)
    if branch == "singleton":
        return lq_singleton(m, with_graph)
    if branch == "small":
        g = build_interval_graph(m, n)
        witness = degree_sequence_of(g)
        assert witness.sigma == 2 * lq_interval_one(n)
        return _outcome(d, witness, "closed-interval", with_graph, g)
    cand = interval_candidates(m, n)
    return _outcome(d, cand.graphic, "closed-interval", with_graph)


def closed_form(d: DegreeSet, with_graph: bool = False) -> LqOutcome:
    """First applicable closed form, in the order singleton, min 1,
    divisible, min 2, interval."""
    if d.n == 1:
        return lq_singleton(d, with_graph)
    if d.min == 1:
        return lq_min1(d, with_graph)
    if all(x % d.min == 0 for x in d.degrees):
        return lq_divisible(d, with_graph)
    if d.min == 2:
        return lq_min2(d, with_graph)
    if is_interval(d):
        return lq_interval(d.min, d.max, with_graph)
    raise NotApplicable(f"no closed form applies to {d}")
