"""Erdős–Gallai graphicality tests.

``delta(s, k)`` is the slack of the k-th Erdős–Gallai inequality::

    delta(s, k) = k(k-1) + sum_{i>k} min(k, a_i) - sum_{i<=k} a_i

A sequence is graphic iff its sum is even and every slack is nonnegative.
The refined test only looks at breakpoints (ends of runs) that do not
exceed the strong index.
"""

from __future__ import annotations

from typing import Optional

from .core import DegreeSequence, expand
from .errors import IndexOutOfRange

__all__ = [
    "delta",
    "delta_expanded",
    "is_graphic_full",
    "is_graphic_refined",
    "is_graphic",
    "strong_index",
    "first_violation",
]


def delta(s: DegreeSequence, k: int) -> int:
    """Slack of the k-th inequality, computed over runs in O(n)."""
    p = s.p
    if not 1 <= k <= p:
        raise IndexOutOfRange(f"k={k} outside 1..{p}")
    head = 0  # sum of a_1..a_k
    tail = 0  # sum of min(k, a_i) for i > k
    pos = 0
    for d, m in s.runs:
        inside = min(m, max(0, k - pos))
        head += inside * d
        tail += (m - inside) * min(k, d)
        pos += m
    return k * (k - 1) + tail - head


def delta_expanded(a: list[int], k: int) -> int:
    """Direct O(p) evaluation on an explicit nonincreasing list."""
    p = len(a)
    if not 1 <= k <= p:
        raise IndexOutOfRange(f"k={k} outside 1..{p}")
    return k * (k - 1) + sum(min(k, x) for x in a[k:]) - sum(a[:k])


def is_graphic_full(s: DegreeSequence) -> bool:
    """Check every one of the p inequalities on the expanded sequence."""
    a = expand(s)
    if sum(a) % 2:
        return False
    prefix = 0
    for k in range(1, len(a) + 1):
        prefix += a[k - 1]
        if prefix > k * (k - 1) + sum(min(k, x) for x in a[k:]):
            return False
    return True


def strong_index(s: DegreeSequence) -> int:
    """Largest t with a_t >= t - 1.

    The condition is monotone in t, so within a run of value d starting
    after position ``pos`` it holds exactly for t <= d + 1.
    """
    t = 0
    pos = 0
    for d, m in s.runs:
        if pos + 1 > d + 1:
            break
        t = min(pos + m, d + 1)
        pos += m
    return t


def is_graphic_refined(s: DegreeSequence) -> bool:
    if s.sigma % 2:
        return False
    t = strong_index(s)
    for b in s.breakpoints:
        if b > t:
            break
        if delta(s, b) < 0:
            return False
    return True


is_graphic = is_graphic_refined


def first_violation(s: DegreeSequence) -> Optional[tuple[int, int]]:
    """First breakpoint k with negative slack, as ``(k, delta)``; None if there is none.

    Parity is not considered here.
    """
    for b in s.breakpoints:
        dl = delta(s, b)
        if dl < 0:
            return b, dl
    return None
