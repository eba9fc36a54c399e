"""Domain types: degree sets, run-length degree sequences, simple graphs.

All values are immutable once built.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Iterable, Optional

from .errors import LimitExceeded, ParseError, ZeroDegreeVertex

__all__ = [
    "Limits",
    "DEFAULT_LIMITS",
    "DegreeSet",
    "DegreeSequence",
    "Graph",
    "LqOutcome",
    "METHODS",
    "expand",
    "degree_sequence_of",
    "degree_set_of",
    "parse_set",
    "parse_sequence",
]

METHODS = (
    "closed-divisible",
    "closed-min1",
    "closed-min2",
    "closed-interval",
    "closed-singleton",
    "window-search",
    "oracle",
)


@dataclass(frozen=True)
class Limits:
    """Size guards. ``max_sigma`` of None means no cap on the degree total."""

    max_degree: int = 10_000
    max_length: int = 10_000
    max_sigma: Optional[int] = None

    def check_degree(self, d: int) -> None:
        if d > self.max_degree:
            raise LimitExceeded(f"degree {d} exceeds limit {self.max_degree}")

    def check_length(self, p: int) -> None:
        if p > self.max_length:
            raise LimitExceeded(f"sequence length {p} exceeds limit {self.max_length}")


DEFAULT_LIMITS = Limits()


@dataclass(frozen=True)
class DegreeSet:
    """A nonempty set of positive integers, kept in strictly decreasing order."""

    degrees: tuple[int, ...]

    def __init__(self, degrees: Iterable[int], limits: Limits = DEFAULT_LIMITS):
        values = [int(d) for d in degrees]
        if not values:
            raise ValueError("degree set must be nonempty")
        if any(d < 1 for d in values):
            raise ValueError(f"degrees must be positive: {values}")
        if len(set(values)) != len(values):
            raise ValueError(f"duplicate degrees in {values}")
        limits.check_degree(max(values))
        object.__setattr__(self, "degrees", tuple(sorted(values, reverse=True)))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def max(self) -> int:
        return self.degrees[0]

    @property
    def min(self) -> int:
        return self.degrees[-1]

    @property
    def sigma(self) -> int:
        return sum(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __contains__(self, d) -> bool:
        return d in self.degrees

    def __str__(self) -> str:
        return ",".join(map(str, self.degrees))

    @classmethod
    def interval(cls, m: int, n: int) -> "DegreeSet":
        return cls(range(m, n + 1))


@dataclass(frozen=True)
class DegreeSequence:
    """Nonincreasing sequence of positive integers stored as ``(value, multiplicity)`` runs."""

    runs: tuple[tuple[int, int], ...]

    def __init__(self, runs: Iterable[tuple[int, int]]):
        runs = tuple((int(d), int(m)) for d, m in runs)
        if not runs:
            raise ValueError("degree sequence must be nonempty")
        for (d, m) in runs:
            if d < 1 or m < 1:
                raise ValueError(f"run ({d}, {m}) must have positive value and multiplicity")
        for (a, _), (b, _) in zip(runs, runs[1:]):
            if a <= b:
                raise ValueError("run values must be strictly decreasing")
        object.__setattr__(self, "runs", runs)

    @classmethod
    def from_list(cls, values: Iterable[int]) -> "DegreeSequence":
        """Build from a plain list of degrees in any order."""
        counts = Counter(int(v) for v in values)
        return cls(sorted(counts.items(), reverse=True))

    @classmethod
    def from_multiplicities(cls, d: DegreeSet, mults: Iterable[int]) -> "DegreeSequence":
        return cls(zip(d.degrees, mults))

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.runs)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.runs)

    @property
    def n(self) -> int:
        return len(self.runs)

    @property
    def p(self) -> int:
        return sum(m for _, m in self.runs)

    @property
    def sigma(self) -> int:
        return sum(d * m for d, m in self.runs)

    @property
    def breakpoints(self) -> tuple[int, ...]:
        return tuple(accumulate(m for _, m in self.runs))

    @property
    def max(self) -> int:
        return self.runs[0][0]

    @property
    def min(self) -> int:
        return self.runs[-1][0]

    def degree_set(self) -> DegreeSet:
        return DegreeSet(self.values)

    def with_extra(self, value: int, copies: int = 1) -> "DegreeSequence":
        """Return a copy with ``copies`` more occurrences of ``value``."""
        counts = Counter(dict((d, m) for d, m in self.runs))
        counts[value] += copies
        return DegreeSequence(sorted(((d, m) for d, m in counts.items() if m), reverse=True))

    def __iter__(self):
        return iter(expand(self))

    def __len__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return ",".join(str(d) if m == 1 else f"{d}^{m}" for d, m in self.runs)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``."""

    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            e = (min(u, v), max(u, v))
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", frozenset(canon))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_edge_list(self) -> str:
        """One ``"u v"`` line per edge, 0-indexed, sorted."""
        return "".join(f"{u} {v}\n" for u, v in self.sorted_edges())

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.vertex_count)]
        lines += [f"  {u} -- {v};" for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str, vertex_count: Optional[int] = None) -> "Graph":
        pairs = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            u, v = line.split()
            pairs.append((int(u), int(v)))
        if vertex_count is None:
            vertex_count = 1 + max((max(e) for e in pairs), default=-1)
        return cls(vertex_count, pairs)


@dataclass(frozen=True)
class LqOutcome:
    """Least size of a graph with a given degree set, with its witness."""

    degree_set: DegreeSet
    lq: int
    witness: DegreeSequence
    method: str
    graph: Optional[Graph] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if self.witness.sigma != 2 * self.lq:
            raise ValueError(f"witness sum {self.witness.sigma} != 2 * {self.lq}")
        if self.witness.values != self.degree_set.degrees:
            raise ValueError("witness degree set differs from the queried set")
        if self.graph is not None and degree_sequence_of(self.graph) != self.witness:
            raise ValueError("witness graph does not realize the witness sequence")


def expand(s: DegreeSequence) -> list[int]:
    out = []
    for d, m in s.runs:
        out.extend([d] * m)
    return out


def degree_sequence_of(g: Graph) -> DegreeSequence:
    deg = g.degrees()
    if not deg:
        raise ZeroDegreeVertex("graph has no vertices")
    if min(deg) == 0:
        raise ZeroDegreeVertex(f"vertex {deg.index(0)} has degree 0")
    return DegreeSequence.from_list(deg)


def degree_set_of(g: Graph) -> DegreeSet:
    return degree_sequence_of(g).degree_set()


_INT = re.compile(r"^\d+$")
_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_set(text: str, limits: Limits = DEFAULT_LIMITS) -> DegreeSet:
    """Parse ``"5,4,3"`` (whitespace ignored) into a DegreeSet."""
    body = re.sub(r"\s+", "", text)
    parts = body.split(",") if body else []
    if not parts or not all(_INT.match(p) for p in parts):
        raise ParseError(f"cannot parse degree set {text!r}")
    try:
        return DegreeSet((int(p) for p in parts), limits=limits)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_sequence(text: str, limits: Limits = DEFAULT_LIMITS) -> DegreeSequence:
    """Parse ``"5,4,3^5"`` into a DegreeSequence; ``d^m`` means m copies of d."""
    body = re.sub(r"\s+", "", text)
    parts = body.split(",") if body else []
    values = []
    for p in parts:
        match = _TERM.match(p)
        if not match:
            raise ParseError(f"cannot parse sequence term {p!r} in {text!r}")
        d = int(match.group(1))
        m = int(match.group(2)) if match.group(2) is not None else 1
        limits.check_degree(d)
        values.append((d, m))
    if not values:
        raise ParseError(f"empty sequence {text!r}")
    limits.check_length(sum(m for _, m in values))
    counts = Counter()
    for d, m in values:
        counts[d] += m
    try:
        return DegreeSequence(sorted(((d, m) for d, m in counts.items() if m), reverse=True))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
