"""Domination and total domination predicates plus the small-instance oracle.

All vertex sets are int bitmasks over the host graph.  Total domination of a
set S is decided by folding the neighbor masks of S's members into one union
and comparing against the full vertex mask, so the predicate that dominates
solver runtime costs O(|S|) word operations and allocates nothing.
"""
from __future__ import annotations

import itertools

from .graphs import Graph, bits, is_isolate_free

MAX_ORACLE_VERTICES = 20


def _check_subset(g: Graph, s: int, name: str = "vertex set") -> None:
    if s & ~g.full_mask:
        raise ValueError(f"{name} has bits >= n={g.n}")


def dominated_mask(g: Graph, s: int) -> int:
    """Union of the neighborhoods of the members of ``s``."""
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return out


def is_dominating(g: Graph, s: int) -> bool:
    """True iff every vertex outside ``s`` has a neighbor in ``s``."""
    _check_subset(g, s)
    return g.full_mask & ~s & ~dominated_mask(g, s) == 0


def is_total_dominating(g: Graph, s: int) -> bool:
    """True iff every vertex of g (members of ``s`` included) has a neighbor in ``s``."""
    _check_subset(g, s)
    return dominated_mask(g, s) == g.full_mask


def min_total_dominating_size(g: Graph) -> int:
    """Minimum cardinality of a total dominating set, by exhaustive search.

    Searches sizes 2, 3, ... in order; size 1 is impossible because a vertex
    never dominates itself.
    """
    if g.n == 0:
        raise ValueError("empty graph has no total dominating set")
    if not is_isolate_free(g):
        raise ValueError("graph with an isolated vertex has no total dominating set")
    if g.n > MAX_ORACLE_VERTICES:
        raise ValueError(f"exhaustive search supports at most {MAX_ORACLE_VERTICES} vertices")
    full = g.full_mask
    for size in range(2, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            union = 0
            for v in combo:
                union |= g.adj[v]
            if union == full:
                return size
    raise AssertionError("isolate-free graph must admit V as a total dominating set")


def forms_total_coalition(g: Graph, a: int, b: int) -> bool:
    """True iff neither ``a`` nor ``b`` totally dominates but their union does."""
    _check_subset(g, a, "first set")
    _check_subset(g, b, "second set")
    if a & b:
        raise ValueError("coalition sets must be disjoint")
    if a == 0 or b == 0:
        raise ValueError("coalition sets must be nonempty")
    da = dominated_mask(g, a)
    full = g.full_mask
    if da == full:
        return False
    db = dominated_mask(g, b)
    if db == full:
        return False
    return da | db == full
