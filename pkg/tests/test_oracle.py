import functools
import operator

import pytest

from dagdescents.engine import labeled_dag_total
from dagdescents.combinatorics import gaussian_coefficient
from dagdescents.oracle import (
    Dag,
    OracleCounts,
    enumerate_counts,
    is_acyclic,
    ordered_pairs,
    stats,
    subset_pair_histogram,
)


def test_pair_ordering_is_lexicographic():
    assert ordered_pairs(3) == ((1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2))


def test_dag_edge_round_trip():
    g = Dag.from_edges(4, [(2, 1), (1, 3), (3, 4)])
    assert set(g.edges()) == {(2, 1), (1, 3), (3, 4)}
    assert Dag(4, g.mask).edges() == g.edges()


def test_dag_rejects_bad_input():
    with pytest.raises(ValueError):
        Dag.from_edges(3, [(1, 1)])  # self-loop unrepresentable
    with pytest.raises(ValueError):
        Dag.from_edges(3, [(1, 4)])
    with pytest.raises(ValueError):
        Dag(3, 1 << 6)  # only 6 pair bits exist for n=3
    with pytest.raises(ValueError):
        Dag(0, 0)


def test_is_acyclic():
    assert is_acyclic(Dag.from_edges(3, []))
    assert is_acyclic(Dag.from_edges(3, [(2, 1), (1, 3)]))
    assert not is_acyclic(Dag.from_edges(2, [(1, 2), (2, 1)]))
    assert not is_acyclic(Dag.from_edges(3, [(3, 1), (1, 2), (2, 3)]))


def test_stats_hand_examples():
    s = stats(Dag.from_edges(3, [(2, 1), (1, 3)]))
    assert s.descents == 1
    assert s.reachable_from_lowest == frozenset({1, 3})
    assert s.descents_into_lowest == 1
    assert s.predecessors_of_lowest == frozenset({2})

    s = stats(Dag.from_edges(2, []))
    assert s.descents == 0
    assert s.reachable_from_lowest == frozenset({1})
    assert s.reachable_from_highest == frozenset({2})

    s = stats(Dag.from_edges(3, [(1, 3), (3, 2)]))
    assert s.descents == 1  # 3 -> 2
    assert s.reachable_from_lowest == frozenset({1, 2, 3})
    assert s.reachable_from_highest == frozenset({2, 3})


def test_stats_rejects_cycles():
    with pytest.raises(ValueError):
        stats(Dag.from_edges(2, [(1, 2), (2, 1)]))


def test_two_vertex_tables():
    counts = enumerate_counts(2)
    assert counts.by_descents == [2, 1]
    assert counts.spanning_from_lowest == [1, 0]
    assert counts.spanning_from_highest == [0, 1]


def test_three_vertex_tables():
    counts = enumerate_counts(3)
    assert counts.by_descents == [8, 11, 5, 1]
    assert counts.spanning_from_lowest == [3, 2, 0, 0]
    assert counts.spanning_from_highest == [0, 1, 3, 1]
    ks = range(len(counts.by_descents))
    assert [counts.descent_incidences_into_lowest(k) for k in ks] == \
        [0, 7, 7, 2]
    assert [counts.reachability_incidences_from_lowest(k) for k in ks] == \
        [9, 8, 1, 0]
    assert [counts.lowest_indegree_overcount(k) for k in ks] == [0, 0, 2, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_totals_match_alternating_recurrence(n):
    assert enumerate_counts(n).total() == labeled_dag_total(n)


def test_size_gates():
    with pytest.raises(ValueError):
        enumerate_counts(0)
    with pytest.raises(ValueError):
        enumerate_counts(6)  # needs allow_slow
    with pytest.raises(ValueError):
        enumerate_counts(7, allow_slow=True)  # hard cap
    with pytest.raises(ValueError):
        enumerate_counts(3, mask_range=(0, 1 << 7))


def test_chunked_runs_merge_to_full_table():
    # n=4 scans 2**12 = 4096 masks; split them at uneven boundaries
    full = enumerate_counts(4)
    edges = [0, 17, 100, 1000, 2048, 4095, 4096]
    chunks = [enumerate_counts(4, mask_range=(lo, hi))
              for lo, hi in zip(edges, edges[1:])]
    merged = functools.reduce(operator.add, chunks, OracleCounts.zeros(4))
    assert merged == full


def test_merge_rejects_different_n():
    with pytest.raises(ValueError):
        enumerate_counts(2) + enumerate_counts(3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fast_path_agrees_with_per_graph_stats(n):
    """The tight enumeration loop must tally exactly what stats() reports."""
    slow = OracleCounts.zeros(n)
    for mask in range(1 << (n * (n - 1))):
        g = Dag(n, mask)
        if not is_acyclic(g):
            continue
        s = stats(g)
        k = s.descents
        slow.by_descents[k] += 1
        if len(s.reachable_from_lowest) == n:
            slow.spanning_from_lowest[k] += 1
        if len(s.reachable_from_highest) == n:
            slow.spanning_from_highest[k] += 1
        for m in range(2, n + 1):
            if m in s.predecessors_of_lowest:
                slow.edge_into_lowest[k][m] += 1
            if m in s.reachable_from_lowest:
                slow.vertex_reachable_from_lowest[k][m] += 1
        slow.lowest_indegree[k][s.descents_into_lowest] += 1
    assert slow == enumerate_counts(n)


def test_subset_pair_histogram_examples():
    assert subset_pair_histogram(2, 1) == [1, 1]
    assert subset_pair_histogram(4, 2) == [1, 1, 2, 1, 1]
    assert subset_pair_histogram(5, 0) == [1]
    assert subset_pair_histogram(4, 4) == [1]


def test_subset_pair_histogram_rejects_bad_j():
    with pytest.raises(ValueError):
        subset_pair_histogram(3, 4)
    with pytest.raises(ValueError):
        subset_pair_histogram(3, -1)


def test_subset_pair_histogram_matches_gaussian_coefficients():
    for n in range(9):
        for j in range(n + 1):
            hist = subset_pair_histogram(n, j)
            assert hist == [gaussian_coefficient(n, j, i)
                            for i in range(j * (n - j) + 1)], (n, j)
