"""Exact total coalition number: upper bounds, pruned search, brute-force oracle.

``tc_exact`` tries class counts from the best applicable upper bound down to
2 and accepts the first partition that works, so the first hit is optimal by
definition.  ``tc_oracle`` ignores every bound and enumerates all set
partitions; the two share nothing but the validity predicate, which is what
makes their agreement a meaningful correctness check.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import Graph, is_isolate_free, max_degree, min_degree
from .coalition import VertexPartition, is_total_coalition_partition

ORACLE_MAX_VERTICES = 9
DEFAULT_BUDGET_MS = 60_000


@dataclass(frozen=True)
class BoundBreakdown:
    """Applicable upper bounds for the total coalition number.

    ``quadratic`` folds the parity refinement: floor(d^2/4) + d + 1 for even
    maximum degree d, (d+1)(d+3)/4 for odd.  ``minmax`` is
    dmin*(dmax - dmin + 2), defined only when dmin < floor((dmax+2)/2).
    ``delta1``/``delta2`` are the legacy minimum-degree-1/2 bounds, and
    ``trivial`` is the vertex count.
    """

    quadratic: int
    minmax: int | None
    delta1: int | None
    delta2: int | None
    trivial: int

    @property
    def minimum(self) -> int:
        vals = [self.quadratic, self.trivial]
        for v in (self.minmax, self.delta1, self.delta2):
            if v is not None:
                vals.append(v)
        return min(vals)

    def as_dict(self) -> dict:
        return {
            "quadratic": self.quadratic,
            "minmax": self.minmax,
            "delta1": self.delta1,
            "delta2": self.delta2,
            "trivial": self.trivial,
            "minimum": self.minimum,
        }


def quadratic_bound(dmax: int) -> int:
    """Sharp upper bound as a function of the maximum degree alone."""
    if dmax % 2 == 0:
        return dmax * dmax // 4 + dmax + 1
    return (dmax + 1) * (dmax + 3) // 4


def tc_upper_bound(g: Graph) -> BoundBreakdown:
    """All applicable upper bounds for TC of ``g`` (isolate-free required)."""
    if g.n == 0:
        raise ValueError("empty graph: total coalition number undefined")
    if not is_isolate_free(g):
        raise ValueError("graph has an isolated vertex: total coalition number undefined")
    dmax = max_degree(g)
    dmin = min_degree(g)
    minmax = dmin * (dmax - dmin + 2) if dmin < (dmax + 2) // 2 else None
    delta1 = dmax + 1 if dmin == 1 else None
    delta2 = 2 * dmax if dmin == 2 else None
    return BoundBreakdown(quadratic_bound(dmax), minmax, delta1, delta2, g.n)


@dataclass
class TcReport:
    """Result of an exact computation.

    ``tc`` is 0 with ``certificate`` None when no total coalition partition
    exists for any class count >= 2 (a reportable outcome, not an error).
    ``exact`` is False when the time budget ran out before the search
    finished; ``tc`` is then only the best established lower bound.
    """

    tc: int
    certificate: VertexPartition | None
    bounds: BoundBreakdown
    nodes_explored: int
    exact: bool
    elapsed_ms: float


class _Budget(Exception):
    pass


def _search_k(g: Graph, k: int, deadline: float | None, stats: list[int]) -> list[int] | None:
    """First (in restricted-growth order) total coalition partition into k classes.

    Vertices are assigned in index order; the first vertex always opens class
    0, which kills class-relabeling symmetry.  A branch dies as soon as a
    class would totally dominate (supersets of a total dominating set stay
    total dominating) or the leftover vertices cannot open enough classes.
    """
    n = g.n
    adj = g.adj
    full = g.full_mask
    classes = [0] * k
    doms = [0] * k
    found: list[int] | None = None

    def rec(i: int, used: int):
        nonlocal found
        stats[0] += 1
        if deadline is not None and stats[0] % 4096 == 0 and time.monotonic() > deadline:
            raise _Budget()
        if used + (n - i) < k:
            return
        if i == n:
            if used != k:
                return
            for a in range(k):
                da = doms[a]
                if not any(b != a and da | doms[b] == full for b in range(k)):
                    return
            found = classes.copy()
            return
        vbit = 1 << i
        av = adj[i]
        for c in range(min(used + 1, k)):
            nd = doms[c] | av
            if nd == full:
                continue  # class would become a total dominating set
            old = doms[c]
            classes[c] |= vbit
            doms[c] = nd
            rec(i + 1, used + (1 if c == used else 0))
            classes[c] ^= vbit
            doms[c] = old
            if found is not None:
                return

    rec(0, 0)
    return found


def tc_exact(g: Graph, budget_ms: float | None = DEFAULT_BUDGET_MS) -> TcReport:
    """Exact total coalition number with a certificate partition.

    Deterministic: identical inputs yield identical certificates (fixed
    vertex order, descending class-count order, lowest class index first).
    """
    start = time.monotonic()
    bounds = tc_upper_bound(g)
    deadline = None if budget_ms is None else start + budget_ms / 1000.0
    stats = [0]
    kmax = min(g.n, bounds.minimum)
    for k in range(kmax, 1, -1):
        try:
            sol = _search_k(g, k, deadline, stats)
        except _Budget:
            elapsed = (time.monotonic() - start) * 1000.0
            return TcReport(0, None, bounds, stats[0], False, elapsed)
        if sol is not None:
            elapsed = (time.monotonic() - start) * 1000.0
            return TcReport(k, VertexPartition(g.n, sol), bounds, stats[0], True, elapsed)
    elapsed = (time.monotonic() - start) * 1000.0
    return TcReport(0, None, bounds, stats[0], True, elapsed)


def iter_set_partitions(n: int, exact_k: int | None = None):
    """Yield set partitions of 0..n-1 as lists of bitmasks.

    Classes appear in order of their smallest element (restricted-growth
    enumeration).  With ``exact_k`` only partitions into that many classes
    are produced.
    """

    blocks: list[int] = []

    def rec(v: int):
        if v == n:
            if exact_k is None or len(blocks) == exact_k:
                yield blocks.copy()
            return
        if exact_k is not None and len(blocks) + (n - v) < exact_k:
            return
        for i in range(len(blocks)):
            blocks[i] |= 1 << v
            yield from rec(v + 1)
            blocks[i] ^= 1 << v
        if exact_k is None or len(blocks) < exact_k:
            blocks.append(1 << v)
            yield from rec(v + 1)
            blocks.pop()

    yield from rec(0)


def tc_oracle(g: Graph) -> int:
    """Maximum class count over exhaustive enumeration of all set partitions.

    Independent of the pruned search: no bounds, no pruning, shared code
    limited to the validity predicate.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle supports at most {ORACLE_MAX_VERTICES} vertices, got {g.n}")
    if g.n == 0:
        raise ValueError("empty graph: total coalition number undefined")
    if not is_isolate_free(g):
        raise ValueError("graph has an isolated vertex: total coalition number undefined")
    best = 0
    for blocks in iter_set_partitions(g.n):
        if len(blocks) <= best:
            continue
        p = VertexPartition(g.n, blocks)
        if is_total_coalition_partition(g, p):
            best = len(blocks)
    return best


def singleton_partition_tc(g: Graph) -> bool:
    """True iff the all-singletons partition is a total coalition partition.

    Equivalently: every vertex v has a partner u with N(v) | N(u) = V.
    (A singleton never totally dominates, since no vertex is its own
    neighbor.)
    """
    if g.n == 0:
        raise ValueError("empty graph: total coalition number undefined")
    if not is_isolate_free(g):
        raise ValueError("graph has an isolated vertex: total coalition number undefined")
    full = g.full_mask
    for v in range(g.n):
        av = g.adj[v]
        if not any(u != v and av | g.adj[u] == full for u in range(g.n)):
            return False
    return True
