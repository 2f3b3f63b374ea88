"""Recurrence engine counting labeled acyclic digraphs by descents.

A descent of a labeled digraph is an edge x -> y with x > y.  The
central quantity is d(n,k), the number of acyclic digraphs on vertices
1..n with exactly k descents.  It is computed through six mutually
recursive count families, all memoized in dense per-n rows:

- ``d``: all acyclic digraphs with k descents;
- ``t``: those in which every vertex is reachable from vertex 1;
- ``u``: those in which every vertex is reachable from vertex n;
- ``A``: incidence pairs (graph, edge m -> 1) — each graph counted once
  per edge into vertex 1;
- ``B``: incidence pairs (graph, vertex m >= 2 reachable from 1);
- ``Cw``: the weighted sum over m >= 2 of (m-1) times the number of
  graphs with exactly m edges into vertex 1.

The d recurrence splits on whether vertex 1 is a source.  If it is, the
rest of the graph is any (n-1)-vertex graph with k descents plus any
subset of ascents out of vertex 1, giving 2^(n-1) * d(n-1,k).  If not,
the graph arises from some k-1-descent graph by inserting one edge
m -> 1; insertions that would duplicate an edge (A), or close a cycle
because m was already reachable from 1 (B), are subtracted, and graphs
reachable through several insertions are compensated by Cw:

    d(n,k) = 2^(n-1) d(n-1,k) + (n-1) d(n,k-1)
             - A(n,k-1) - B(n,k-1) - Cw(n,k)

t and u recurse on the vertex split X / Y, where X is the set reachable
from the top (for t) or bottom (for u) label; the number of admissible
splits with i increasing cross pairs is a Gaussian binomial coefficient,
and the cross edges contribute binomial factors for the descents chosen
among them.  A, B and Cw decompose the same way around the set reachable
from vertex 1.

Everything is exact integer arithmetic.  Tables fill bottom-up level by
level (no deep call recursion), so large n cannot exhaust the stack.
Values are deterministic: any query order produces identical tables.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterator

from .combinatorics import (
    binomial,
    gaussian_coefficient,
    gaussian_coeffs,
    pow2,
    two_factorial,
)

#: Family tags, also used as the on-disk cache vocabulary.
FAMILIES = ("d", "t", "u", "A", "B", "Cw")


class DescentCounter:
    """Memo-table holder for the six count families.

    Rows fill strictly bottom-up: all six families at vertex count m are
    completed before level m+1 starts, so every recurrence only ever
    reads finished rows.  Instances are not thread-safe; confine each to
    one thread of control.
    """

    def __init__(self) -> None:
        self._rows: dict[str, dict[int, list[int]]] = {
            tag: {} for tag in FAMILIES}
        self._rows["d"][0] = [1]  # the empty graph has zero descents
        self._staged: dict[tuple[str, int, int], int] = {}

    # ------------------------------------------------------------------
    # public queries

    def dag_count(self, n: int, k: int) -> int:
        """Number of labeled acyclic digraphs on n vertices with k descents."""
        self._validate(n, k, smallest_n=0)
        self._ensure(n)
        return self._lookup("d", n, k)

    def spanning_from_lowest(self, n: int, k: int) -> int:
        """Count of such digraphs where every vertex is reachable from 1."""
        self._validate(n, k, smallest_n=1)
        self._ensure(n)
        return self._lookup("t", n, k)

    def spanning_from_highest(self, n: int, k: int) -> int:
        """Count of such digraphs where every vertex is reachable from n."""
        self._validate(n, k, smallest_n=1)
        self._ensure(n)
        return self._lookup("u", n, k)

    def descent_incidences_into_lowest(self, n: int, k: int) -> int:
        """Number of (graph, edge m->1) pairs over graphs with k descents."""
        self._validate(n, k, smallest_n=1)
        self._ensure(n)
        return self._lookup("A", n, k)

    def reachability_incidences_from_lowest(self, n: int, k: int) -> int:
        """Number of (graph, vertex m>=2 reachable from 1) pairs."""
        self._validate(n, k, smallest_n=1)
        self._ensure(n)
        return self._lookup("B", n, k)

    def lowest_indegree_overcount(self, n: int, k: int) -> int:
        """Sum of (m-1) * #graphs with exactly m edges into vertex 1, m >= 2."""
        self._validate(n, k, smallest_n=1)
        self._ensure(n)
        return self._lookup("Cw", n, k)

    def table(self, n_max: int) -> list[list[int]]:
        """Rows [d(n,0), ..., d(n,C(n,2))] for n = 1..n_max."""
        if n_max < 1:
            raise ValueError(f"n_max must be at least 1, got {n_max}")
        self._ensure(n_max)
        return [list(self._rows["d"][n]) for n in range(1, n_max + 1)]

    def row_total(self, n: int) -> int:
        """Sum over k of dag_count(n, k)."""
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        self._ensure(n)
        return sum(self._rows["d"][n])

    # ------------------------------------------------------------------
    # memo persistence hooks (used by the cache file layer)

    def entries(self) -> Iterator[tuple[str, int, int, int]]:
        """All memoized values as (family, n, k, value), deterministic order."""
        for tag in FAMILIES:
            for n in sorted(self._rows[tag]):
                for k, value in enumerate(self._rows[tag][n]):
                    yield tag, n, k, value

    def preload(self, family: str, n: int, k: int, value: int) -> None:
        """Stage a known value so the fill step can skip recomputing it.

        Staged values are trusted, so callers are expected to validate
        them first (the cache layer re-checks everything that overlaps
        the golden fixture).  Values that contradict structural facts —
        a nonzero count past k = C(n,2), or a mismatch with an already
        computed cell — are rejected with ValueError.
        """
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        if n < 0 or k < 0:
            raise ValueError(f"indices must be nonnegative, got n={n} k={k}")
        if value < 0:
            raise ValueError(f"counts are nonnegative, got {value}")
        if family != "d" and n == 0:
            raise ValueError(f"family {family} starts at n=1")
        if k > n * (n - 1) // 2:
            if value != 0:
                raise ValueError(
                    f"{family}({n},{k}) must be 0: k exceeds C(n,2)")
            return  # nothing to store; lookups past the row end are 0
        row = self._rows[family].get(n)
        if row is not None:
            if row[k] != value:
                raise ValueError(
                    f"{family} {n} {k} conflicts with computed value "
                    f"{row[k]} (got {value})")
            return
        key = (family, n, k)
        if self._staged.get(key, value) != value:
            raise ValueError(f"conflicting staged values for {family} {n} {k}")
        self._staged[key] = value

    # ------------------------------------------------------------------
    # internals

    @staticmethod
    def _validate(n: int, k: int, smallest_n: int) -> None:
        if n < smallest_n:
            raise ValueError(f"n must be at least {smallest_n}, got {n}")
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")

    def _lookup(self, family: str, n: int, k: int) -> int:
        row = self._rows[family].get(n)
        if row is None:  # t/u/... at n=0 have no row; only d(0,*) is queried
            raise ValueError(f"family {family} starts at n=1")
        return row[k] if k < len(row) else 0

    def _ensure(self, n: int) -> None:
        done = self._rows["d"]
        for level in range(1, n + 1):
            if level not in done:
                self._fill_level(level)

    def _fill_level(self, n: int) -> None:
        size = n * (n - 1) // 2 + 1
        staged = self._staged

        def fill(tag: str, compute: Callable[[int], int]) -> list[int]:
            row = [0] * size
            for k in range(size):
                cached = staged.pop((tag, n, k), None)
                if cached is not None:
                    row[k] = cached
                    continue
                value = compute(k)
                if value < 0:
                    raise RuntimeError(
                        f"internal inconsistency: {tag}({n},{k}) = {value}")
                row[k] = value
            self._rows[tag][n] = row
            return row

        # Order matters: the B sum reads the level-n t row (its j = n term
        # is (n-1) * t(n,k)), and the d row reads all of A, B, Cw at level n.
        fill("t", lambda k: two_factorial(n - 1) if k == 0
             else self._t_recurrence(n, k))
        fill("u", lambda k: int(n == 1) if k == 0
             else self._u_recurrence(n, k))
        a_row = fill("A", lambda k: 0 if k == 0
                     else self._descent_incidence_sum(n, k))
        b_row = fill("B", lambda k: self._reach_incidence_sum(n, k))
        cw_row = fill("Cw", lambda k: 0 if k < 2
                      else self._multi_indegree_overcount(n, k))

        d_prev = self._rows["d"][n - 1]
        d_row = [0] * size
        source_ways = pow2(n - 1)
        for k in range(size):
            cached = staged.pop(("d", n, k), None)
            if cached is not None:
                d_row[k] = cached
                continue
            if k == 0:
                d_row[0] = pow2(n * (n - 1) // 2)
                continue
            above = d_prev[k] if k < len(d_prev) else 0
            value = (source_ways * above + (n - 1) * d_row[k - 1]
                     - a_row[k - 1] - b_row[k - 1] - cw_row[k])
            if value < 0:
                raise RuntimeError(
                    f"internal inconsistency: d({n},{k}) = {value}")
            d_row[k] = value
        self._rows["d"][n] = d_row

    def _t_recurrence(self, n: int, k: int) -> int:
        """Spanning-from-1 graphs with k descents, n >= 2, k >= 1.

        Split on the set X of the j vertices reachable from vertex n
        (so n is in X and 1 is in Y = complement).  The subgraph on X is
        any spanning-from-its-top graph with s descents, the subgraph on
        Y any spanning-from-1 graph with r descents; i counts increasing
        cross pairs, of which k-s-r become descents; at least one of the
        n-j increasing edges from Y into vertex n must be present.
        """
        rows_t, rows_u = self._rows["t"], self._rows["u"]
        total = 0
        for j in range(1, n):
            u_row = rows_u[j]
            t_row = rows_t[n - j]
            q_row = gaussian_coeffs(n - 2, j - 1)
            exp_base = (j - 1) * (n - j)
            into_top = pow2(n - j) - 1
            for i, q in enumerate(q_row):
                if q == 0:
                    continue
                weight = q * into_top * pow2(exp_base - i)
                cross = 0
                for r, tv in enumerate(t_row):
                    if r > k:
                        break
                    if tv == 0:
                        continue
                    rem = k - r
                    for s in range(min(rem, len(u_row) - 1) + 1):
                        uv = u_row[s]
                        if uv == 0:
                            continue
                        choose = binomial(i, rem - s)
                        if choose:
                            cross += tv * uv * choose
                total += weight * cross
        return total

    def _u_recurrence(self, n: int, k: int) -> int:
        """Spanning-from-n graphs with k descents, n >= 2, k >= 1.

        Split on the set X of the j vertices reachable from vertex 1
        (1 in X, n in Y).  At least one cross descent must point at
        vertex 1, hence the difference of binomials: all choices of the
        k-r-s cross descents minus the choices avoiding vertex 1's n-j
        incoming pairs.  Cross pairs number at least n-1 (the pairs
        through vertices 1 and n alone).
        """
        rows_t, rows_u = self._rows["t"], self._rows["u"]
        total = 0
        for j in range(1, n):
            t_row = rows_t[j]
            u_row = rows_u[n - j]
            top = j * (n - j)
            for i in range(n - 1, top + 1):
                q = gaussian_coefficient(n - 2, j - 1, i - n + 1)
                if q == 0:
                    continue
                weight = q * pow2(top - i)
                cross = 0
                for r, uv in enumerate(u_row):
                    if r > k - 1:
                        break
                    if uv == 0:
                        continue
                    for s in range(min(k - 1 - r, len(t_row) - 1) + 1):
                        tv = t_row[s]
                        if tv == 0:
                            continue
                        need = k - r - s
                        choose = binomial(i, need) - binomial(i - n + j, need)
                        if choose:
                            cross += uv * tv * choose
                total += weight * cross
        return total

    def _descent_incidence_sum(self, n: int, k: int) -> int:
        """(graph, edge m->1) incidence pairs over graphs with k descents.

        Split on the set X of the j vertices reachable from vertex 1; the
        count of edges into vertex 1 (all from Y, all descents) enters
        with weight equal to itself, producing the incidence sum.
        """
        rows_t, rows_d = self._rows["t"], self._rows["d"]
        total = 0
        for j in range(1, n):
            t_row = rows_t[j]
            d_row = rows_d[n - j]
            q_row = gaussian_coeffs(n - 1, j - 1)
            exp_base = (j - 1) * (n - j)
            outside = n - j
            for i, q in enumerate(q_row):
                if q == 0:
                    continue
                weight = q * pow2(exp_base - i)
                cross = 0
                for r, dv in enumerate(d_row):
                    if r > k - 1:
                        break
                    if dv == 0:
                        continue
                    for s in range(min(k - 1 - r, len(t_row) - 1) + 1):
                        tv = t_row[s]
                        if tv == 0:
                            continue
                        rem = k - r - s  # >= 1 descents left for cross edges
                        inner = 0
                        for count in range(1, rem + 1):
                            into_lowest = binomial(outside, count)
                            if into_lowest == 0:
                                break  # count exceeded n-j; later ones too
                            rest = binomial(i, rem - count)
                            if rest:
                                inner += count * into_lowest * rest
                        if inner:
                            cross += dv * tv * inner
                total += weight * cross
        return total

    def _reach_incidence_sum(self, n: int, k: int) -> int:
        """(graph, vertex m>=2 reachable from 1) incidence pairs.

        Split on the set X of the j vertices reachable from vertex 1;
        each graph contributes j-1 incidences.  Every vertex of Y sits
        above vertex 1, so the cross pairs number at least n-j.
        """
        rows_t, rows_d = self._rows["t"], self._rows["d"]
        total = 0
        for j in range(2, n + 1):
            t_row = rows_t[j]
            d_row = rows_d[n - j]
            top = j * (n - j)
            for i in range(n - j, top + 1):
                q = gaussian_coefficient(n - 1, j - 1, i - n + j)
                if q == 0:
                    continue
                weight = q * pow2(top - i)
                cross = 0
                for r, dv in enumerate(d_row):
                    if r > k:
                        break
                    if dv == 0:
                        continue
                    for s in range(min(k - r, len(t_row) - 1) + 1):
                        tv = t_row[s]
                        if tv == 0:
                            continue
                        choose = binomial(i, k - r - s)
                        if choose:
                            cross += dv * tv * choose
                total += (j - 1) * weight * cross
        return total

    def _multi_indegree_overcount(self, n: int, k: int) -> int:
        """Weighted count of graphs with several edges into vertex 1.

        A graph with exactly m >= 2 such edges carries weight m-1.  The
        m edges all come from Y (the vertices not reachable from 1), so
        j <= n-m and the within-part descents satisfy r+s <= k-m.
        """
        rows_t, rows_d = self._rows["t"], self._rows["d"]
        total = 0
        for j in range(1, n - 1):
            t_row = rows_t[j]
            d_row = rows_d[n - j]
            q_row = gaussian_coeffs(n - 1, j - 1)
            exp_base = (j - 1) * (n - j)
            outside = n - j
            for i, q in enumerate(q_row):
                if q == 0:
                    continue
                weight = q * pow2(exp_base - i)
                cross = 0
                for r, dv in enumerate(d_row):
                    if r > k - 2:
                        break
                    if dv == 0:
                        continue
                    for s in range(min(k - 2 - r, len(t_row) - 1) + 1):
                        tv = t_row[s]
                        if tv == 0:
                            continue
                        cap = k - r - s  # multiplicity m can reach this
                        inner = 0
                        for m in range(2, min(cap, outside) + 1):
                            picks = binomial(outside, m)
                            rest = binomial(i, cap - m)
                            if rest:
                                inner += (m - 1) * picks * rest
                        if inner:
                            cross += dv * tv * inner
                total += weight * cross
        return total


def labeled_dag_total(n: int) -> int:
    """Total number of labeled acyclic digraphs on n vertices.

    Computed by the classic alternating inclusion-exclusion over the
    nonempty set of k source vertices:

        a_n = sum_{k=1..n} (-1)^(k+1) C(n,k) 2^(k(n-k)) a_(n-k),  a_0 = 1.

    Entirely independent of the descent recurrences, which makes it a
    useful cross-check on their row sums.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    totals = [1]
    for m in range(1, n + 1):
        acc = 0
        for k in range(1, m + 1):
            term = math.comb(m, k) * (1 << (k * (m - k))) * totals[m - k]
            acc += term if k % 2 else -term
        totals.append(acc)
    return totals[n]


def series_identity_check(degree: int) -> bool:
    """Verify the reciprocal-series identity for DAG totals, exactly.

    With weights w_n = 1 / (n! * 2^C(n,2)), the series sum a_n w_n x^n
    (a_n = labeled_dag_total(n)) and sum (-1)^n w_n x^n are reciprocal
    formal power series.  Returns True iff their Cauchy product equals 1
    through the requested degree, using exact rationals throughout.
    """
    if degree < 0:
        raise ValueError(f"degree must be nonnegative, got {degree}")
    weights = [Fraction(1, math.factorial(m) * (1 << math.comb(m, 2)))
               for m in range(degree + 1)]
    lead = [labeled_dag_total(m) * weights[m] for m in range(degree + 1)]
    alternating = [(-1) ** m * weights[m] for m in range(degree + 1)]
    for d in range(degree + 1):
        convolution = sum(lead[i] * alternating[d - i] for i in range(d + 1))
        if convolution != (1 if d == 0 else 0):
            return False
    return True
