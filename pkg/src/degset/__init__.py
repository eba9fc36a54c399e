"""Least number of edges of a simple graph with a prescribed degree set.

The main entry points are :func:`lq_exact` (any degree set), the closed
forms in :mod:`degset.closedform`, and :func:`min_padding`, whose padded
sequence is within ``min D - 1`` edges of optimal.
"""

from .closedform import (
    IntervalCandidates,
    build_interval_graph,
    closed_form,
    interval_candidates,
    lq_divisible,
    lq_interval,
    lq_min1,
    lq_min2,
    lq_singleton,
    min_order,
)
from .core import (
    DegreeSequence,
    DegreeSet,
    Graph,
    Limits,
    LqOutcome,
    degree_sequence_of,
    degree_set_of,
    expand,
    parse_sequence,
    parse_set,
)
from .errors import (
    BadInterval,
    BadPartition,
    DegsetError,
    IndexOutOfRange,
    LimitExceeded,
    NotApplicable,
    NotGraphic,
    ParseError,
    PreconditionViolated,
    ZeroDegreeVertex,
)
from .graphicality import delta, is_graphic, is_graphic_full, is_graphic_refined, strong_index
from .padding import PaddingResult, compute_c, min_padding, pad_singleton
from .realization import realize, reduce_odd_pair, split_vertex
from .solver import (
    RatioBound,
    SearchWindow,
    approx_ratio_bound,
    approx_sequence,
    enumerate_multiplicities,
    lq_exact,
    lq_oracle,
    search_window,
)

__all__ = [
    "IntervalCandidates",
    "build_interval_graph",
    "closed_form",
    "interval_candidates",
    "lq_divisible",
    "lq_interval",
    "lq_min1",
    "lq_min2",
    "lq_singleton",
    "min_order",
    "DegreeSequence",
    "DegreeSet",
    "Graph",
    "Limits",
    "LqOutcome",
    "degree_sequence_of",
    "degree_set_of",
    "expand",
    "parse_sequence",
    "parse_set",
    "BadInterval",
    "BadPartition",
    "DegsetError",
    "IndexOutOfRange",
    "LimitExceeded",
    "NotApplicable",
    "NotGraphic",
    "ParseError",
    "PreconditionViolated",
    "ZeroDegreeVertex",
    "RatioBound",
    "SearchWindow",
    "approx_ratio_bound",
    "approx_sequence",
    "enumerate_multiplicities",
    "lq_exact",
    "lq_oracle",
    "search_window",
    "delta",
    "is_graphic",
    "is_graphic_full",
    "is_graphic_refined",
    "strong_index",
    "PaddingResult",
    "compute_c",
    "min_padding",
    "pad_singleton",
    "realize",
    "reduce_odd_pair",
    "split_vertex",
]

__version__ = "0.1.0"
