import math

import pytest

from brute import eg_naive, labelled_graph_degree_table, subsets
from degset.core import DegreeSequence, DegreeSet, Limits, expand
from degset.errors import LimitExceeded
from degset.graphicality import is_graphic_full
from degset.solver import (
    approx_ratio_bound,
    approx_sequence,
    enumerate_multiplicities,
    iter_multiplicities,
    lq_exact,
    lq_oracle,
    oracle_outcome,
    ratio_bound_m,
    search_window,
)


def D(*xs):
    return DegreeSet(xs)


def brute_vectors(d, sigma):
    """Every positive vector with sum m_i d_i = sigma, by product over per-coordinate bounds."""
    from itertools import product
    degs = d.degrees
    bounds = [max(0, (sigma - (sum(degs) - x)) // x) for x in degs]
    return sorted(m for m in product(*(range(1, b + 1) for b in bounds))
                  if sum(a * b for a, b in zip(m, degs)) == sigma)


def test_approx_sequence_examples():
    assert expand(approx_sequence(D(5, 4, 3))) == [5, 4, 3, 3, 3, 3, 3]
    assert approx_sequence(D(5, 4, 3)).sigma == 24
    assert expand(approx_sequence(D(1))) == [1, 1]
    assert approx_sequence(D(3, 2, 1)).sigma == 8


@pytest.mark.parametrize("degrees, window", [((5, 4, 3), (18, 24)), ((1,), (0, 2)), ((3, 2, 1), (6, 8))])
def test_search_window(degrees, window):
    w = search_window(DegreeSet(degrees))
    assert (w.lo_exclusive, w.hi_inclusive) == window


def test_enumerate_multiplicities_examples():
    assert enumerate_multiplicities(D(5, 4, 3), 20) == [(1, 3, 1), (2, 1, 2)]
    assert enumerate_multiplicities(D(2), 6) == [(3,)]
    assert enumerate_multiplicities(D(5, 4, 3), 11) == []


def test_enumerate_matches_brute_force():
    for degrees in subsets(range(1, 8), max_size=3):
        d = DegreeSet(degrees)
        for sigma in range(1, 40):
            assert enumerate_multiplicities(d, sigma) == brute_vectors(d, sigma), (degrees, sigma)


@pytest.mark.parametrize("degrees, expected", [((5, 4, 3), 11), ((3, 2, 1), 4), ((2,), 3)])
def test_lq_exact_examples(degrees, expected):
    out = lq_exact(DegreeSet(degrees), with_graph=True)
    assert out.lq == expected
    assert out.method == "window-search"
    assert out.graph.edge_count == expected


def test_worked_instance_witness():
    out = lq_exact(D(5, 4, 3))
    assert expand(out.witness) == [5, 4, 4, 3, 3, 3]
    assert is_graphic_full(out.witness)
    for mults in enumerate_multiplicities(D(5, 4, 3), 20):
        assert not eg_naive(expand(DegreeSequence.from_multiplicities(D(5, 4, 3), mults)))


@pytest.mark.parametrize("degrees, expected", [((5, 4, 3), 11), ((1,), 1), ((4, 2), 6)])
def test_oracle_examples(degrees, expected):
    assert lq_oracle(DegreeSet(degrees)) == expected


def test_oracle_limits():
    with pytest.raises(LimitExceeded):
        lq_oracle(D(11, 3))
    with pytest.raises(LimitExceeded):
        lq_oracle(D(6, 5, 4, 3, 2, 1))
    assert lq_oracle(D(6, 5, 4, 3, 2, 1), max_size=6) == 12


def test_oracle_validated_by_graph_enumeration():
    """Where every graph with fewer edges than the oracle answer would fit on 7
    vertices, exhaustive enumeration confirms the answer."""
    table = labelled_graph_degree_table(7)
    best = {}
    for seq in table:
        key = tuple(sorted(set(seq), reverse=True))
        best[key] = min(best.get(key, math.inf), sum(seq) // 2)
    checked = 0
    for degrees in subsets(range(1, 7)):
        d = DegreeSet(degrees)
        out = oracle_outcome(d, max_size=6)
        if 2 * (out.lq - 1) // d.min > 7:
            continue
        checked += 1
        assert best.get(d.degrees, math.inf) >= out.lq, degrees
        if out.witness.p <= 7:
            assert best[d.degrees] == out.lq
    assert checked >= 20


def test_exact_matches_oracle_on_small_sets():
    for degrees in subsets(range(1, 9)):
        d = DegreeSet(degrees)
        assert lq_exact(d).lq == lq_oracle(d, max_degree=8, max_size=8), degrees


def test_gap_and_domination():
    for degrees in subsets(range(1, 9), max_size=4):
        d = DegreeSet(degrees)
        lq = lq_exact(d).lq
        s_bar = approx_sequence(d)
        assert 0 <= s_bar.sigma // 2 - lq <= d.min - 1
        a = expand(s_bar)
        w = search_window(d)
        for sigma in w.candidates():
            for mults in iter_multiplicities(d, sigma):
                s = DegreeSequence.from_multiplicities(d, mults)
                if is_graphic_full(s):
                    b = expand(s)
                    assert all(x <= y for x, y in zip(a, b)), (degrees, b)


def test_ratio_bound_examples():
    r = approx_ratio_bound(D(5, 4, 3), 11)
    assert r.m_bound == pytest.approx(1 / 3)
    assert r.witness_ratio == pytest.approx(12 / 11)
    r = approx_ratio_bound(D(1), 1)
    assert r.m_bound == 1 and r.witness_ratio == 1
    assert approx_ratio_bound(D(3, 2, 1), 4).witness_ratio == 1
    assert ratio_bound_m(D(9, 8, 7, 6, 5)) == pytest.approx(2 / 10)
    assert ratio_bound_m(D(6, 5, 4, 3, 2, 1)) == pytest.approx(2 * (math.sqrt(2) - 1) / 5)


def test_limit_exceeded_carries_window():
    d = D(9, 7, 5)
    w = search_window(d)
    with pytest.raises(LimitExceeded) as info:
        lq_exact(d, limits=Limits(max_sigma=30))
    assert info.value.window == w
    assert info.value.searched_up_to == w.lo_exclusive
    with pytest.raises(LimitExceeded) as info:
        lq_exact(d, limits=Limits(max_sigma=w.lo_exclusive + 3))
    assert info.value.searched_up_to == w.lo_exclusive + 2
    # Raising the limit resumes to the true answer.
    assert lq_exact(D(9, 7, 5), limits=Limits(max_sigma=10_000)).lq == lq_oracle(D(9, 7, 5))


def test_parallel_matches_sequential():
    for degrees in [(5, 4, 3), (9, 7, 5), (10, 7, 4), (8, 6, 5, 3), (10, 9, 7, 4)]:
        d = DegreeSet(degrees)
        assert lq_exact(d, workers=4) == lq_exact(d)
