"""Bitmask-backed simple graphs.

Vertices are 0..n-1 and every vertex set in this package is a plain int
bitmask (bit v set <=> vertex v is in the set).  Adjacency is one mask per
vertex, which keeps the hot predicates (neighborhood unions, domination
tests) down to a few word operations.

The module also carries the small-graph machinery the rest of the package
leans on: exact maximum matching, a canonical form for isomorphism tests
(n <= 16), graph6 and edge-list serialization.
"""
from __future__ import annotations

import itertools

MAX_VERTICES = 128
CANONICAL_MAX_VERTICES = 16


def bits(mask: int):
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    """Bitmask with one bit per vertex in ``vertices``."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> list[int]:
    """Sorted vertex list of a bitmask."""
    return list(bits(mask))


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor bitmask of v.  The constructor enforces the
    representation invariants (symmetry, no self-loops, all bits < n), so
    every Graph instance in the package satisfies them.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside supported range 0..{MAX_VERTICES}")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency row of vertex {v} has bits >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbor_mask(self, v: int) -> int:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as sorted (u, v) pairs with u < v."""
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            for u in bits(row):
                out.append((v, u))
        return out

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))


def from_edges(n: int, edges) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse silently."""
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and ``leaves`` leaves."""
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def is_isolate_free(g: Graph) -> bool:
    return all(row != 0 for row in g.adj)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("degree of the empty graph is undefined")
    return min(row.bit_count() for row in g.adj)


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("degree of the empty graph is undefined")
    return max(row.bit_count() for row in g.adj)


def is_vertex_cover(g: Graph, s: int) -> bool:
    """True iff every edge of g has at least one endpoint in the mask ``s``."""
    if s & ~g.full_mask:
        raise ValueError("vertex set has bits >= n")
    outside = g.full_mask & ~s
    for v in bits(outside):
        if g.adj[v] & outside:
            return False
    return True


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    rows = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph(g1.n + g2.n, rows)


def relabel(g: Graph, perm) -> Graph:
    """Relabeled copy where old vertex v becomes perm[v]."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of 0..n-1")
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        nv = perm[v]
        for u in bits(row):
            rows[nv] |= 1 << perm[u]
    return Graph(g.n, rows)


def induced_subgraph(g: Graph, s: int) -> Graph:
    """Subgraph induced by the mask ``s``, relabeled to 0..|s|-1."""
    verts = set_of(s)
    index = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for v in verts:
        for u in bits(g.adj[v] & s):
            rows[index[v]] |= 1 << index[u]
    return Graph(len(verts), rows)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full_mask


# ---------------------------------------------------------------------------
# Maximum matching
# ---------------------------------------------------------------------------


def _matching_size(adj, memo, mask: int) -> int:
    # Vertices with no free neighbor can never be matched; dropping them
    # canonicalizes the memo state.  (No cascade: a free vertex adjacent to a
    # dropped one would have made the dropped one non-isolated.)
    drop = 0
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if not adj[v] & mask:
            drop |= low
    mask &= ~drop
    if mask == 0:
        return 0
    cached = memo.get(mask)
    if cached is not None:
        return cached
    v = (mask & -mask).bit_length() - 1
    rest = mask ^ (1 << v)
    best = _matching_size(adj, memo, rest)  # leave v unmatched
    seen: list[int] = []
    for u in bits(adj[v] & mask):
        # Skip neighbors interchangeable with one already tried.
        ignore = ~((1 << u) | (1 << v))
        if any(adj[u] & ignore & mask == adj[w] & ignore & mask for w in seen):
            continue
        seen.append(u)
        cand = 1 + _matching_size(adj, memo, rest ^ (1 << u))
        if cand > best:
            best = cand
    memo[mask] = best
    return best


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """One maximum matching, as a deterministic list of (u, v) pairs."""
    memo: dict[int, int] = {}
    adj = g.adj
    mask = g.full_mask
    out: list[tuple[int, int]] = []
    while mask:
        target = _matching_size(adj, memo, mask)
        if target == 0:
            break
        v = None
        for cand in bits(mask):
            if adj[cand] & mask:
                v = cand
                break
        if v is None:
            break
        rest = mask ^ (1 << v)
        if _matching_size(adj, memo, rest) == target:
            mask = rest  # v unmatched in some optimum
            continue
        for u in bits(adj[v] & mask):
            if 1 + _matching_size(adj, memo, rest ^ (1 << u)) == target:
                out.append((v, u))
                mask = rest ^ (1 << u)
                break
    return out


def maximum_matching_size(g: Graph) -> int:
    return _matching_size(g.adj, {}, g.full_mask)


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def _refined_cells(g: Graph) -> list[list[int]]:
    """Stable ordered partition of the vertices by iterated degree refinement.

    Colors are dense ranks of invariant signatures, so the cell order does
    not depend on the input labeling.
    """
    n = g.n
    colors = [g.degree(v) for v in range(n)]
    rank = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [rank[c] for c in colors]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return [cells[c] for c in sorted(cells)]


def _min_labeling(g: Graph) -> tuple[list[int], list[int]]:
    """Minimum adjacency column string over cell-respecting labelings.

    Returns (columns, permutation) where columns[p] packs the adjacency bits
    between position p and positions 0..p-1 (earlier position = more
    significant bit) and permutation[p] is the original vertex placed at p.
    """
    n = g.n
    adj = g.adj
    cells = _refined_cells(g)
    pos_cell: list[int] = []
    for ci, cell in enumerate(cells):
        pos_cell.extend([ci] * len(cell))

    best: list[int] | None = None
    best_perm: list[int] | None = None
    cols: list[int] = []
    placed: list[int] = []
    used = 0

    def rec(pos: int):
        nonlocal best, best_perm, used
        if pos == n:
            if best is None or cols < best:
                best = cols.copy()
                best_perm = placed.copy()
            return
        scored = []
        for v in cells[pos_cell[pos]]:
            if used >> v & 1:
                continue
            col = 0
            av = adj[v]
            for u in placed:
                col = col << 1 | (av >> u & 1)
            scored.append((col, v))
        scored.sort()
        kept: list[tuple[int, int]] = []
        for col, v in scored:
            dup = False
            for col2, w in kept:
                if col2 != col:
                    continue
                ignore = ~((1 << v) | (1 << w))
                if adj[v] & ignore == adj[w] & ignore:
                    dup = True  # swapping v and w is an automorphism
                    break
            if dup:
                continue
            kept.append((col, v))
        for col, v in kept:
            if best is not None:
                prefix = best[:pos]
                if cols == prefix and col > best[pos]:
                    break  # ascending order: nothing better follows
                if cols > prefix:
                    return
            cols.append(col)
            placed.append(v)
            used |= 1 << v
            rec(pos + 1)
            used ^= 1 << v
            placed.pop()
            cols.pop()

    rec(0)
    assert best is not None and best_perm is not None
    return best, best_perm


def _pack_columns(n: int, cols: list[int]) -> bytes:
    acc = 0
    total = 0
    for p in range(1, n):
        acc = acc << p | cols[p]
        total += p
    pad = (-total) % 8
    acc <<= pad
    return bytes([n]) + acc.to_bytes((total + pad) // 8, "big")


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: equal strings iff isomorphic graphs (n <= 16)."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise ValueError(
            f"canonical form supports at most {CANONICAL_MAX_VERTICES} vertices, got {g.n}"
        )
    if g.n <= 1:
        return bytes([g.n])
    cols, _ = _min_labeling(g)
    return _pack_columns(g.n, cols)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled representative of g's isomorphism class."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise ValueError(
            f"canonical form supports at most {CANONICAL_MAX_VERTICES} vertices, got {g.n}"
        )
    if g.n <= 1:
        return g
    _, perm = _min_labeling(g)
    inverse = [0] * g.n
    for pos, v in enumerate(perm):
        inverse[v] = pos
    return relabel(g, inverse)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    return canonical_form(g1) == canonical_form(g2)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _g6_checked(data: str, i: int) -> int:
    c = ord(data[i])
    if not 63 <= c <= 126:
        raise Graph6ParseError(f"invalid graph6 byte {c}", i)
    return c - 63


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (supports n <= 128 via the long form)."""
    data = text.strip()
    if not data:
        raise Graph6ParseError("empty graph6 string", 0)
    if data.startswith(">>graph6<<"):
        data = data[10:]
    i = 0
    first = _g6_checked(data, i)
    if first == 63:  # '~': long form
        i += 1
        if i >= len(data):
            raise Graph6ParseError("truncated vertex count", i)
        if ord(data[i]) == 126:
            raise Graph6ParseError("graph6 inputs beyond 258047 vertices unsupported", i)
        n = 0
        for _ in range(3):
            if i >= len(data):
                raise Graph6ParseError("truncated vertex count", i)
            n = n << 6 | _g6_checked(data, i)
            i += 1
    else:
        n = first
        i += 1
    if n > MAX_VERTICES:
        raise Graph6ParseError(f"vertex count {n} exceeds capacity {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - i < nbytes:
        raise Graph6ParseError(f"expected {nbytes} adjacency bytes, got {len(data) - i}", len(data))
    if len(data) - i > nbytes:
        raise Graph6ParseError("trailing bytes after adjacency data", i + nbytes)
    rows = [0] * n
    bit = 0
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for k in range(nbytes):
        group = _g6_checked(data, i + k)
        for b in range(5, -1, -1):
            if bit >= nbits:
                if group >> b & 1:
                    raise Graph6ParseError("nonzero padding bits", i + k)
                continue
            if group >> b & 1:
                u, v = pairs[bit]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, rows)


def to_graph6(g: Graph) -> str:
    """Encode as one graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    out = [head]
    group = 0
    filled = 0
    for v in range(1, n):
        for u in range(v):
            group = group << 1 | (g.adj[u] >> v & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then m lines "u v" (0-based)
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
