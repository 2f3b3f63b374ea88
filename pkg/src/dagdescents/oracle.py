"""Exhaustive ground-truth enumeration of labeled digraphs.

This is the brute-force side of the differential test setup: iterate over
every possible edge set on n vertices, keep the acyclic ones, and tally
the same statistics the recurrence engine computes.  The two
implementations share no counting logic, so exact agreement on small n is
strong evidence for both.

Vertices carry labels 1..n.  An edge x -> y with x > y is a descent.  An
edge set is encoded as a bitmask over the n*(n-1) ordered pairs (x, y)
with x != y, taken in lexicographic order:

    (1,2), (1,3), ..., (1,n), (2,1), (2,3), ..., (n,n-1)

Bit p of the mask is set iff the p-th pair in that order is an edge.  The
ordering is load-bearing: chunked enumeration runs and stored fixtures
rely on it, so it must never change.

Enumeration cost is 2**(n*(n-1)) masks: n=5 is ~10^6 (seconds), n=6 is
~10^9 and takes hours in pure Python, so it sits behind an explicit
``allow_slow`` override.  Larger n is refused outright.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

MAX_ORACLE_N = 6


@lru_cache(maxsize=None)
def ordered_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All ordered pairs (x, y), x != y, of labels 1..n in mask-bit order."""
    return tuple((x, y) for x in range(1, n + 1)
                 for y in range(1, n + 1) if y != x)


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: p for p, pair in enumerate(ordered_pairs(n))}


@dataclass(frozen=True)
class Dag:
    """A labeled digraph on vertices 1..n held as an edge bitmask.

    Despite the name, the mask may describe a cyclic graph; only
    ``stats`` insists on acyclicity.  Self-loops are unrepresentable.
    """

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"Dag needs at least one vertex, got n={self.n}")
        if not 0 <= self.mask < 1 << (self.n * (self.n - 1)):
            raise ValueError(f"edge mask out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Dag":
        index = _pair_index(n)
        mask = 0
        for edge in edges:
            x, y = edge
            if edge not in index:
                raise ValueError(f"invalid edge {x}->{y} for n={n}")
            mask |= 1 << index[edge]
        return cls(n, mask)

    def edges(self) -> tuple[tuple[int, int], ...]:
        pairs = ordered_pairs(self.n)
        return tuple(pairs[p] for p in range(len(pairs))
                     if (self.mask >> p) & 1)


@dataclass(frozen=True)
class DagStats:
    """Per-graph statistics over an acyclic digraph.

    ``reachable_from_lowest`` / ``reachable_from_highest`` are the label
    sets reachable from vertex 1 / vertex n (every vertex reaches
    itself).  ``predecessors_of_lowest`` holds the labels m with an edge
    m -> 1; every such edge is a descent, since m > 1.
    """

    descents: int
    reachable_from_lowest: frozenset[int]
    reachable_from_highest: frozenset[int]
    predecessors_of_lowest: frozenset[int]

    @property
    def descents_into_lowest(self) -> int:
        return len(self.predecessors_of_lowest)


def _adjacency(g: Dag) -> list[int]:
    """Out-neighbourhoods as vertex bitsets (bit v = label v+1)."""
    adj = [0] * g.n
    for x, y in g.edges():
        adj[x - 1] |= 1 << (y - 1)
    return adj


def is_acyclic(g: Dag) -> bool:
    """True iff the edge set admits a topological order.

    Iteratively strips vertices of in-degree zero; the graph is acyclic
    exactly when everything can be stripped.
    """
    preds = [0] * g.n
    for x, y in g.edges():
        preds[y - 1] |= 1 << (x - 1)
    remaining = (1 << g.n) - 1
    while remaining:
        sources = 0
        pending = remaining
        while pending:
            low = pending & -pending
            if preds[low.bit_length() - 1] & remaining == 0:
                sources |= low
            pending ^= low
        if sources == 0:
            return False
        remaining ^= sources
    return True


def _reachable(adj: list[int], start_bit: int) -> int:
    """Bitset of vertices reachable from the vertex bit, reflexively."""
    seen = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        pending = frontier
        while pending:
            low = pending & -pending
            nxt |= adj[low.bit_length() - 1]
            pending ^= low
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _labels(bits: int) -> frozenset[int]:
    return frozenset(v + 1 for v in range(bits.bit_length())
                     if (bits >> v) & 1)


def stats(g: Dag) -> DagStats:
    """Statistics bundle for an acyclic ``g``; rejects cyclic input."""
    if not is_acyclic(g):
        raise ValueError("graph has a directed cycle")
    edges = g.edges()
    adj = _adjacency(g)
    return DagStats(
        descents=sum(1 for x, y in edges if x > y),
        reachable_from_lowest=_labels(_reachable(adj, 1)),
        reachable_from_highest=_labels(_reachable(adj, 1 << (g.n - 1))),
        predecessors_of_lowest=frozenset(x for x, y in edges if y == 1),
    )


@dataclass
class OracleCounts:
    """Exhaustive count tables for one vertex count n.

    All lists are indexed by descent count k = 0..C(n,2).  The
    two-dimensional tables are indexed [k][m] with m a vertex label
    (entries for m outside the meaningful range stay 0):

    - ``by_descents[k]``: acyclic digraphs with k descents.
    - ``spanning_from_lowest[k]``: those where every vertex is reachable
      from vertex 1.
    - ``spanning_from_highest[k]``: every vertex reachable from vertex n.
    - ``edge_into_lowest[k][m]``: graphs containing the edge m -> 1.
    - ``vertex_reachable_from_lowest[k][m]``: graphs where m is
      reachable from vertex 1 (m >= 2).
    - ``lowest_indegree[k][m]``: graphs with exactly m edges into
      vertex 1.

    Tables from disjoint mask ranges merge by ``+``.
    """

    n: int
    by_descents: list[int]
    spanning_from_lowest: list[int]
    spanning_from_highest: list[int]
    edge_into_lowest: list[list[int]]
    vertex_reachable_from_lowest: list[list[int]]
    lowest_indegree: list[list[int]]

    @classmethod
    def zeros(cls, n: int) -> "OracleCounts":
        size = n * (n - 1) // 2 + 1
        return cls(
            n=n,
            by_descents=[0] * size,
            spanning_from_lowest=[0] * size,
            spanning_from_highest=[0] * size,
            edge_into_lowest=[[0] * (n + 1) for _ in range(size)],
            vertex_reachable_from_lowest=[[0] * (n + 1) for _ in range(size)],
            lowest_indegree=[[0] * (n + 1) for _ in range(size)],
        )

    def __add__(self, other: "OracleCounts") -> "OracleCounts":
        if not isinstance(other, OracleCounts):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("cannot merge counts for different n")
        merged = OracleCounts.zeros(self.n)
        for k in range(len(self.by_descents)):
            merged.by_descents[k] = self.by_descents[k] + other.by_descents[k]
            merged.spanning_from_lowest[k] = (
                self.spanning_from_lowest[k] + other.spanning_from_lowest[k])
            merged.spanning_from_highest[k] = (
                self.spanning_from_highest[k] + other.spanning_from_highest[k])
            for m in range(self.n + 1):
                merged.edge_into_lowest[k][m] = (
                    self.edge_into_lowest[k][m] + other.edge_into_lowest[k][m])
                merged.vertex_reachable_from_lowest[k][m] = (
                    self.vertex_reachable_from_lowest[k][m]
                    + other.vertex_reachable_from_lowest[k][m])
                merged.lowest_indegree[k][m] = (
                    self.lowest_indegree[k][m] + other.lowest_indegree[k][m])
        return merged

    def total(self) -> int:
        return sum(self.by_descents)

    def descent_incidences_into_lowest(self, k: int) -> int:
        """Number of (graph, edge m->1) pairs among graphs with k descents."""
        return sum(self.edge_into_lowest[k][2:])

    def reachability_incidences_from_lowest(self, k: int) -> int:
        """Number of (graph, vertex m reachable from 1) pairs, m >= 2."""
        return sum(self.vertex_reachable_from_lowest[k][2:])

    def lowest_indegree_overcount(self, k: int) -> int:
        """Sum of (m-1) * #graphs with exactly m edges into vertex 1, m >= 2."""
        return sum((m - 1) * c
                   for m, c in enumerate(self.lowest_indegree[k]) if m >= 2)


def enumerate_counts(n: int, *, allow_slow: bool = False,
                     mask_range: tuple[int, int] | None = None) -> OracleCounts:
    """Count every acyclic digraph on n vertices by brute force.

    Scans edge masks in ``mask_range`` (default: all 2**(n*(n-1)) of
    them), skipping cyclic graphs, and accumulates an ``OracleCounts``.
    Splitting the full range into disjoint chunks and summing the
    results reproduces the full-range table exactly, so runs may be
    chunked or parallelised freely.

    n = 6 means 2**30 masks (hours in pure Python) and therefore
    requires ``allow_slow=True``; n > 6 is refused.
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if n > MAX_ORACLE_N:
        raise ValueError(
            f"exhaustive enumeration is limited to n <= {MAX_ORACLE_N}; "
            f"got n={n}")
    if n == MAX_ORACLE_N and not allow_slow:
        raise ValueError(
            "n=6 scans 2**30 edge masks and takes hours; "
            "pass allow_slow=True to run it anyway")

    bits_per_vertex = n - 1
    block_mask = (1 << bits_per_vertex) - 1
    full = (1 << n) - 1
    total_bits = n * (n - 1)
    start, stop = mask_range if mask_range is not None else (0, 1 << total_bits)
    if not 0 <= start <= stop <= 1 << total_bits:
        raise ValueError(f"mask_range {mask_range!r} out of bounds for n={n}")

    # Per-vertex lookup tables over the 2**(n-1) possible out-edge blocks.
    # Block bit b of vertex index x targets label b+1 if b < x else b+2,
    # matching the lexicographic pair order in the module docstring.
    out_table = []
    descent_table = []
    for x in range(n):
        out_row = [0] * (block_mask + 1)
        for v in range(block_mask + 1):
            targets = 0
            pending = v
            while pending:
                low = pending & -pending
                b = low.bit_length() - 1
                targets |= 1 << (b if b < x else b + 1)
                pending ^= low
            out_row[v] = targets
        out_table.append(out_row)
        low_bits = (1 << x) - 1
        descent_table.append(
            [(v & low_bits).bit_count() for v in range(block_mask + 1)])

    counts = OracleCounts.zeros(n)
    by_descents = counts.by_descents
    spanning_lo = counts.spanning_from_lowest
    spanning_hi = counts.spanning_from_highest
    edge_into_lo = counts.edge_into_lowest
    reach_from_lo = counts.vertex_reachable_from_lowest
    indegree_lo = counts.lowest_indegree
    shifts = tuple(x * bits_per_vertex for x in range(n))
    highest_bit = 1 << (n - 1)

    for mask in range(start, stop):
        blocks = [(mask >> s) & block_mask for s in shifts]
        adj = [row[v] for row, v in zip(out_table, blocks)]

        # Peel sinks; anything left over lies on a cycle.
        remaining = full
        while remaining:
            removable = 0
            pending = remaining
            while pending:
                low = pending & -pending
                if adj[low.bit_length() - 1] & remaining == 0:
                    removable |= low
                pending ^= low
            if removable == 0:
                break
            remaining ^= removable
        if remaining:
            continue

        k = sum(row[v] for row, v in zip(descent_table, blocks))
        by_descents[k] += 1

        reach_lo = _reachable(adj, 1)
        if reach_lo == full:
            spanning_lo[k] += 1
        if _reachable(adj, highest_bit) == full:
            spanning_hi[k] += 1

        indegree = 0
        edge_row = edge_into_lo[k]
        reach_row = reach_from_lo[k]
        for m in range(2, n + 1):
            if blocks[m - 1] & 1:  # block bit 0 of vertex m is the edge m->1
                edge_row[m] += 1
                indegree += 1
            if (reach_lo >> (m - 1)) & 1:
                reach_row[m] += 1
        indegree_lo[k][indegree] += 1

    return counts


def subset_pair_histogram(n: int, j: int) -> list[int]:
    """Histogram, over all j-subsets X of {1..n}, of the number of pairs
    (x, y) with x in X, y outside X, and x < y.

    Index i of the result counts the subsets producing exactly i such
    pairs; the list has length j*(n-j) + 1.  This brute-force histogram
    is the independent check that the Gaussian binomial coefficients
    count what they are supposed to.
    """
    if n < 0 or not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got n={n}, j={j}")
    hist = [0] * (j * (n - j) + 1)
    for subset in itertools.combinations(range(1, n + 1), j):
        members = set(subset)
        pairs = sum(1 for x in subset
                    for y in range(x + 1, n + 1) if y not in members)
        hist[pairs] += 1
    return hist
