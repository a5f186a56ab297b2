"""Vertex partitions, total coalition partitions, and the derived coalition graph.

A total coalition partition splits the vertices into nonempty classes so
that no class is a total dominating set and every class forms a total
coalition with at least one other class.  The coalition graph has one
vertex per class and an edge for every coalition pair.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, bits, mask_of, set_of
from .domination import dominated_mask


class VertexPartition:
    """Ordered list of vertex classes (int bitmasks) over a host of size n.

    The container itself accepts any class list whose bits are < n; the three
    partition invariants (nonempty, disjoint, covering) are checked by
    :func:`validate_partition` so that broken inputs can be reported instead
    of rejected at construction.
    """

    __slots__ = ("n", "classes")

    def __init__(self, n: int, classes):
        classes = tuple(classes)
        full = (1 << n) - 1
        for i, c in enumerate(classes):
            if c & ~full:
                raise ValueError(f"class {i} has vertex bits >= n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "classes", classes)

    def __setattr__(self, name, value):
        raise AttributeError("VertexPartition is immutable")

    @classmethod
    def from_sets(cls, n: int, sets) -> "VertexPartition":
        return cls(n, [mask_of(s) for s in sets])

    @classmethod
    def singletons(cls, n: int) -> "VertexPartition":
        return cls(n, [1 << v for v in range(n)])

    @property
    def k(self) -> int:
        return len(self.classes)

    def as_sets(self) -> list[list[int]]:
        return [set_of(c) for c in self.classes]

    def class_of(self, v: int) -> int | None:
        """Index of the first class containing v, or None."""
        for i, c in enumerate(self.classes):
            if c >> v & 1:
                return i
        return None

    def __eq__(self, other):
        return (
            isinstance(other, VertexPartition)
            and self.n == other.n
            and self.classes == other.classes
        )

    def __hash__(self):
        return hash((self.n, self.classes))

    def __repr__(self):
        return f"VertexPartition(n={self.n}, classes={self.as_sets()})"


@dataclass(frozen=True)
class PartitionIssues:
    """Violations of the partition invariants; empty lists mean valid."""

    empty_classes: list[int] = field(default_factory=list)
    overlap_vertices: list[int] = field(default_factory=list)
    uncovered_vertices: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.empty_classes or self.overlap_vertices or self.uncovered_vertices)

    def messages(self) -> list[str]:
        out = []
        if self.empty_classes:
            out.append(f"empty classes at indices {self.empty_classes}")
        if self.overlap_vertices:
            out.append(f"vertices in more than one class: {self.overlap_vertices}")
        if self.uncovered_vertices:
            out.append(f"vertices in no class: {self.uncovered_vertices}")
        return out


def validate_partition(g: Graph, p: VertexPartition) -> PartitionIssues:
    """Report violations of the three partition invariants."""
    if p.n != g.n:
        raise ValueError(f"partition over {p.n} vertices does not match graph on {g.n}")
    empty = [i for i, c in enumerate(p.classes) if c == 0]
    seen = 0
    overlap = 0
    for c in p.classes:
        overlap |= seen & c
        seen |= c
    uncovered = g.full_mask & ~seen
    return PartitionIssues(empty, set_of(overlap), set_of(uncovered))


def _class_domination(g: Graph, p: VertexPartition) -> list[int]:
    return [dominated_mask(g, c) for c in p.classes]


def coalition_partners(g: Graph, p: VertexPartition) -> list[int | None]:
    """For each class, the lowest-index class it forms a total coalition with.

    None marks a class with no partner (including any class that is itself a
    total dominating set, which can never be in a coalition pair).
    """
    issues = validate_partition(g, p)
    if not issues.ok:
        raise ValueError("invalid partition: " + "; ".join(issues.messages()))
    full = g.full_mask
    doms = _class_domination(g, p)
    td = [d == full for d in doms]
    partners: list[int | None] = []
    for i in range(p.k):
        partner = None
        if not td[i]:
            for j in range(p.k):
                if j == i or td[j]:
                    continue
                if doms[i] | doms[j] == full:
                    partner = j
                    break
        partners.append(partner)
    return partners


def is_total_coalition_partition(g: Graph, p: VertexPartition) -> bool:
    """True iff no class totally dominates and every class has a coalition partner."""
    return all(j is not None for j in coalition_partners(g, p))


@dataclass(frozen=True)
class CoalitionGraph:
    """Coalition graph of a partition; vertex i of ``graph`` is class i of ``partition``."""

    graph: Graph
    partition: VertexPartition

    @property
    def class_labels(self) -> list[int]:
        """Vertex -> partition class index (identity by construction)."""
        return list(range(self.graph.n))


def build_tcg(g: Graph, p: VertexPartition) -> CoalitionGraph:
    """Coalition graph of a valid total coalition partition.

    Edges are found by testing all k(k-1)/2 class pairs against the cached
    per-class domination masks; vertex order follows class order, so the
    output is deterministic.
    """
    issues = validate_partition(g, p)
    if not issues.ok:
        raise ValueError("invalid partition: " + "; ".join(issues.messages()))
    full = g.full_mask
    doms = _class_domination(g, p)
    if any(d == full for d in doms):
        i = next(i for i, d in enumerate(doms) if d == full)
        raise ValueError(f"class {i} is a total dominating set; not a total coalition partition")
    k = p.k
    rows = [0] * k
    for i in range(k):
        di = doms[i]
        for j in range(i + 1, k):
            if di | doms[j] == full:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    if any(r == 0 for r in rows):
        i = next(i for i, r in enumerate(rows) if r == 0)
        raise ValueError(f"class {i} has no coalition partner; not a total coalition partition")
    return CoalitionGraph(Graph(k, rows), p)


# ---------------------------------------------------------------------------
# Partition file format: one class per line, comma-separated 0-based indices;
# blank lines and '#' comments ignored.
# ---------------------------------------------------------------------------


def parse_partition(text: str, n: int) -> VertexPartition:
    classes = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        members = []
        for token in line.split(","):
            token = token.strip()
            if not token:
                continue
            try:
                v = int(token)
            except ValueError:
                raise ValueError(f"line {lineno}: {token!r} is not a vertex index") from None
            if not 0 <= v < n:
                raise ValueError(f"line {lineno}: vertex {v} outside 0..{n - 1}")
            members.append(v)
        classes.append(mask_of(members))
    return VertexPartition(n, classes)


def format_partition(p: VertexPartition) -> str:
    return "\n".join(",".join(str(v) for v in set_of(c)) for c in p.classes) + "\n"
