"""Least number of extra copies of the smallest degree that makes the
one-copy-each sequence of a degree set graphic.

Two parity regimes:

* ``a``: the set sum is even, or the smallest degree is odd. The base is
  ``d_1, ..., d_n`` and c is maximised over ``1 <= k <= n-1``; one more copy
  is added when that is needed to make the total even.
* ``b``: the set sum is odd and the smallest degree is even. The smallest
  odd element is doubled in the base, which fixes parity for every C, and
  c is maximised over ``1 <= k <= n``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DegreeSequence, DegreeSet
from .graphicality import delta, is_graphic

__all__ = ["PaddingResult", "CASES", "compute_c", "min_padding", "pad_singleton"]

CASES = ("a-even-sum", "a-odd-min", "b-odd-sum-even-min", "singleton")


@dataclass(frozen=True)
class PaddingResult:
    base: DegreeSequence
    c: int
    k_star: int
    C_star: int
    case: str
    padded: DegreeSequence

    @property
    def d_min(self) -> int:
        return self.base.min

    def slack_at_k_star(self) -> int:
        return delta(self.padded, self.k_star)

    def slack_bound(self):
        """Strict upper bound on ``delta(padded, k_star)``; None for singletons."""
        if self.case.startswith("a"):
            return 2 * self.d_min
        if self.case.startswith("b"):
            return self.d_min
        return None


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def compute_c(base: DegreeSequence, k_range: int) -> tuple[int, int]:
    """Return ``(c, k_star)``.

    ``c = max over 1 <= k <= k_range of ceil(-delta(base, k) / min(k, d_n))``,
    clamped below at 0. ``k_star`` is the smallest k attaining the unclamped
    maximum.
    """
    if k_range < 1:
        raise ValueError("k_range must be at least 1")
    d_n = base.min
    best, k_star = None, 1
    for k in range(1, k_range + 1):
        val = _ceil_div(-delta(base, k), min(k, d_n))
        if best is None or val > best:
            best, k_star = val, k
    return max(0, best), k_star


def pad_singleton(d: int) -> PaddingResult:
    """Only K_{d+1} is d-regular on the fewest vertices."""
    base = DegreeSequence([(d, 1)])
    return PaddingResult(base=base, c=d, k_star=1, C_star=d, case="singleton",
                         padded=DegreeSequence([(d, d + 1)]))


def min_padding(d: DegreeSet) -> PaddingResult:
    if d.n == 1:
        return pad_singleton(d.max)
    d_n = d.min
    sigma = d.sigma
    if sigma % 2 == 1 and d_n % 2 == 0:
        d_r = min(x for x in d.degrees if x % 2 == 1)
        base = DegreeSequence((x, 2 if x == d_r else 1) for x in d.degrees)
        c, k_star = compute_c(base, d.n)
        C_star = c
        case = "b-odd-sum-even-min"
    else:
        base = DegreeSequence((x, 1) for x in d.degrees)
        c, k_star = compute_c(base, d.n - 1)
        C_star = c + 1 if d_n % 2 == 1 and (sigma + c * d_n) % 2 == 1 else c
        case = "a-even-sum" if sigma % 2 == 0 else "a-odd-min"
    padded = base.with_extra(d_n, C_star) if C_star else base
    assert is_graphic(padded), f"padding of {d} is not graphic"
    return PaddingResult(base=base, c=c, k_star=k_star, C_star=C_star, case=case, padded=padded)
