"""Exact counts of labeled acyclic digraphs by number of descents.

A descent of a labeled digraph is an edge x -> y with x > y.  The
package computes d(n,k), the number of acyclic digraphs on vertices
1..n with exactly k descents, through memoized exact-integer
recurrences (`DescentCounter`), and ships the machinery used to trust
those numbers: an exhaustive brute-force enumerator for small n, a
golden fixture of known-good values, classical cross-checks on the row
totals, and a persisted-cache format plus CLI.
"""
from .combinatorics import (
    binomial,
    gaussian_coefficient,
    gaussian_coeffs,
    partition_count,
    pow2,
    two_factorial,
)
from .engine import (
    FAMILIES,
    DescentCounter,
    labeled_dag_total,
    series_identity_check,
)
from .golden import GOLDEN_COUNTS, GOLDEN_MAX_N, GOLDEN_TOTALS, golden_value
from .oracle import (
    Dag,
    DagStats,
    OracleCounts,
    enumerate_counts,
    is_acyclic,
    stats,
    subset_pair_histogram,
)

__version__ = "0.1.0"

__all__ = [
    "binomial",
    "gaussian_coeffs",
    "gaussian_coefficient",
    "partition_count",
    "pow2",
    "two_factorial",
    "FAMILIES",
    "DescentCounter",
    "labeled_dag_total",
    "series_identity_check",
    "GOLDEN_COUNTS",
    "GOLDEN_MAX_N",
    "GOLDEN_TOTALS",
    "golden_value",
    "Dag",
    "DagStats",
    "OracleCounts",
    "enumerate_counts",
    "is_acyclic",
    "stats",
    "subset_pair_histogram",
]
