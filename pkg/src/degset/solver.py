"""Exact least size for any degree set by a bounded window search.

The padded sequence from :func:`degset.padding.min_padding` is graphic and
its half-sum exceeds the optimum by less than ``min D``. So twice the
optimum lies in ``(sigma(s_bar) - 2 min D, sigma(s_bar)]`` and scanning the
even totals of that window in ascending order finds it. Each total is
decomposed as ``sum m_i d_i`` with every ``m_i >= 1`` and the resulting
sequences are tested for graphicality.

``lq_oracle`` is an independent brute force: it scans upward from the set
sum without the window and uses the unrefined Erdős–Gallai test.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import DEFAULT_LIMITS, DegreeSequence, DegreeSet, LqOutcome, Limits
from .errors import LimitExceeded
from .graphicality import is_graphic_full, is_graphic_refined
from .padding import min_padding
from .realization import realize

__all__ = [
    "SearchWindow",
    "RatioBound",
    "approx_sequence",
    "search_window",
    "iter_multiplicities",
    "enumerate_multiplicities",
    "lq_exact",
    "lq_oracle",
    "oracle_outcome",
    "approx_ratio_bound",
    "ratio_bound_m",
]


@dataclass(frozen=True)
class SearchWindow:
    """Even totals in ``(lo_exclusive, hi_inclusive]`` that may equal twice the optimum."""

    lo_exclusive: int
    hi_inclusive: int

    def candidates(self) -> list[int]:
        start = self.lo_exclusive + 1
        start += start % 2
        return list(range(start, self.hi_inclusive + 1, 2))

    def __contains__(self, sigma: int) -> bool:
        return self.lo_exclusive < sigma <= self.hi_inclusive

    def __str__(self) -> str:
        return f"({self.lo_exclusive}, {self.hi_inclusive}]"


@dataclass(frozen=True)
class RatioBound:
    m_bound: float
    witness_ratio: float

    @property
    def holds(self) -> bool:
        return self.witness_ratio < 1 + self.m_bound


def approx_sequence(d: DegreeSet) -> DegreeSequence:
    return min_padding(d).padded


def search_window(d: DegreeSet) -> SearchWindow:
    top = approx_sequence(d).sigma
    return SearchWindow(top - 2 * d.min, top)


def iter_multiplicities(d: DegreeSet, sigma: int) -> Iterator[tuple[int, ...]]:
    """Yield every positive ``(m_1, ..., m_n)`` with ``sum m_i d_i = sigma``,
    lexicographically ascending.

    Each m_i is bounded by ``(sigma - sum_{j != i} d_j) / d_i``; a suffix
    gcd prunes branches whose remainder the tail cannot represent.
    """
    degs = d.degrees
    n = len(degs)
    # Work with the excess over one copy of each degree: sum k_i d_i = rem, k_i >= 0.
    rem0 = sigma - sum(degs)
    if rem0 < 0:
        return
    suffix_gcd = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_gcd[i] = math.gcd(degs[i], suffix_gcd[i + 1])

    prefix: list[int] = []

    def rec(i: int, rem: int):
        if i == n - 1:
            if rem % degs[i] == 0:
                yield tuple(prefix) + (rem // degs[i] + 1,)
            return
        for k in range(rem // degs[i] + 1):
            rest = rem - k * degs[i]
            if rest % suffix_gcd[i + 1]:
                continue
            prefix.append(k + 1)
            yield from rec(i + 1, rest)
            prefix.pop()

    yield from rec(0, rem0)


def enumerate_multiplicities(d: DegreeSet, sigma: int) -> list[tuple[int, ...]]:
    return list(iter_multiplicities(d, sigma))


def _first_graphic(d: DegreeSet, sigma: int) -> Optional[DegreeSequence]:
    for mults in iter_multiplicities(d, sigma):
        s = DegreeSequence.from_multiplicities(d, mults)
        # Fewer than max D + 1 vertices can never work.
        if s.p > d.max and is_graphic_refined(s):
            return s
    return None


def lq_exact(
    d: DegreeSet,
    with_graph: bool = False,
    limits: Limits = DEFAULT_LIMITS,
    workers: int = 1,
) -> LqOutcome:
    """Least size of a graph with degree set ``d`` by ascending window search.

    With ``workers > 1`` the window totals are tested concurrently; the
    smallest graphic total wins, so the result matches the sequential scan.
    Raises LimitExceeded (carrying the window and last total ruled out) when
    the scan would pass ``limits.max_sigma`` or the padded length exceeds
    ``limits.max_length``.
    """
    limits.check_degree(d.max)
    pad = min_padding(d)
    limits.check_length(pad.padded.p)
    window = SearchWindow(pad.padded.sigma - 2 * d.min, pad.padded.sigma)
    sigmas = window.candidates()
    if limits.max_sigma is not None:
        allowed = [s for s in sigmas if s <= limits.max_sigma]
    else:
        allowed = sigmas

    hit = None
    if workers > 1 and len(allowed) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda s: _first_graphic(d, s), allowed))
        hit = next((r for r in results if r is not None), None)
    else:
        for sigma in allowed:
            hit = _first_graphic(d, sigma)
            if hit is not None:
                break

    if hit is None:
        if len(allowed) < len(sigmas):
            searched = allowed[-1] if allowed else window.lo_exclusive
            raise LimitExceeded(
                f"search for {d} needs totals above max_sigma={limits.max_sigma}",
                window=window, searched_up_to=searched)
        raise AssertionError(f"window {window} of {d} contains no graphic total")
    graph = realize(hit) if with_graph else None
    return LqOutcome(d, hit.sigma // 2, hit, "window-search", graph)


def _oracle_vectors(degs: tuple[int, ...], sigma: int):
    # Fill multiplicities from the smallest degree upward, independently of
    # iter_multiplicities.
    n = len(degs)
    out = []

    def rec(i: int, rem: int, acc: list[int]):
        if i < 0:
            if rem == 0:
                out.append(tuple(acc[::-1]))
            return
        floor_rest = sum(degs[:i])
        m = 1
        while rem - m * degs[i] >= floor_rest:
            rec(i - 1, rem - m * degs[i], acc + [m])
            m += 1

    rec(n - 1, sigma, [])
    return sorted(out)


def oracle_outcome(
    d: DegreeSet,
    max_degree: int = 10,
    max_size: int = 5,
    max_sigma: Optional[int] = None,
    with_graph: bool = False,
) -> LqOutcome:
    if d.max > max_degree or d.n > max_size:
        raise LimitExceeded(
            f"oracle limited to max degree {max_degree} and {max_size} elements, got {d}")
    # Disjoint complete graphs K_{d+1}, one per degree, always realize d.
    cap = sum(x * (x + 1) for x in d.degrees)
    if max_sigma is not None:
        cap = min(cap, max_sigma)
    sigma = d.sigma + d.sigma % 2
    while sigma <= cap:
        for mults in _oracle_vectors(d.degrees, sigma):
            s = DegreeSequence(zip(d.degrees, mults))
            if is_graphic_full(s):
                graph = realize(s) if with_graph else None
                return LqOutcome(d, sigma // 2, s, "oracle", graph)
        sigma += 2
    raise LimitExceeded(f"oracle found nothing for {d} up to total {cap}",
                        searched_up_to=cap)


def lq_oracle(d: DegreeSet, max_degree: int = 10, max_size: int = 5,
              max_sigma: Optional[int] = None) -> int:
    return oracle_outcome(d, max_degree, max_size, max_sigma).lq


def ratio_bound_m(d: DegreeSet) -> float:
    """min{2/(d_1+1), 2(sqrt 2 - 1)/(n-1)}; the second term only for n >= 2."""
    m = 2 / (d.max + 1)
    if d.n >= 2:
        m = min(m, 2 * (math.sqrt(2) - 1) / (d.n - 1))
    return m


def approx_ratio_bound(d: DegreeSet, lq: int) -> RatioBound:
    bound = RatioBound(ratio_bound_m(d), approx_sequence(d).sigma / (2 * lq))
    if not bound.holds:
        raise AssertionError(
            f"ratio {bound.witness_ratio} not below 1 + {bound.m_bound} for {d}")
    return bound
