"""Deterministic generators whose outputs certify the sharpness of the bounds.

Both extremal families share one block plan:

* ``hubs`` -- h mutually adjacent vertices v_0..v_{h-1}; hub i anchors the
  big class i.
* ``singletons`` -- w pendant neighbors per hub; every one of them is its
  own partition class.  Their only job is to cover the hub they hang off.
* ``gadgets`` -- copies of a pair of h-cliques joined by a perfect matching;
  in each clique every big class appears exactly once, with the matching
  joining equal classes.  Gadget vertices carry the leftover edge capacity
  used to let every big class dominate every pendant it does not own.

The cross edges from gadget vertices to pendants are assigned in a fixed
order (gadget copy ascending, first clique before second, pendant targets
ascending) and stop the moment a class dominates everything except its own
hub, so generated graphs are reproducible byte for byte.  Any leftover edge
capacity is simply left unused.

``build_realizer`` turns an arbitrary isolate-free graph into a host graph
plus a partition whose coalition graph is the input.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph, from_edges, to_graph6
from .coalition import VertexPartition, format_partition


@dataclass(frozen=True)
class ConstructionLayout:
    """A generated graph, its partition, and the named vertex blocks."""

    graph: Graph
    partition: VertexPartition
    blocks: dict[str, range]
    params: dict[str, int]

    @property
    def class_count(self) -> int:
        return self.partition.k

    def sidecar(self) -> dict:
        """JSON-serializable block annotation (block name -> index range)."""
        return {
            "params": dict(self.params),
            "classes": self.class_count,
            "vertices": self.graph.n,
            "blocks": {name: [r.start, r.stop] for name, r in self.blocks.items()},
        }


def _build_layout(hubs: int, per_hub: int, copies: int, params: dict[str, int]) -> ConstructionLayout:
    """Shared block plan; hub degree is (hubs-1) + per_hub, gadget capacity per_hub-1."""
    slots = per_hub - 1  # free endpoints per gadget vertex after clique + matching
    o_base = hubs
    g_base = hubs + hubs * per_hub
    n = g_base + copies * 2 * hubs

    edges: list[tuple[int, int]] = []
    for i in range(hubs):
        for j in range(i + 1, hubs):
            edges.append((i, j))
    for i in range(hubs):
        for j in range(per_hub):
            edges.append((i, o_base + i * per_hub + j))

    def clique_a(t: int, i: int) -> int:
        return g_base + t * 2 * hubs + i

    def clique_b(t: int, i: int) -> int:
        return g_base + t * 2 * hubs + hubs + i

    for t in range(copies):
        for i in range(hubs):
            for j in range(i + 1, hubs):
                edges.append((clique_a(t, i), clique_a(t, j)))
                edges.append((clique_b(t, i), clique_b(t, j)))
            edges.append((clique_a(t, i), clique_b(t, i)))

    # Cross edges: class i must dominate every pendant outside its own row.
    for i in range(hubs):
        targets = [
            o_base + i2 * per_hub + j
            for i2 in range(hubs)
            if i2 != i
            for j in range(per_hub)
        ]
        sources = []
        for t in range(copies):
            sources.append(clique_a(t, i))
            sources.append(clique_b(t, i))
        needed = len(targets)
        capacity = len(sources) * slots
        if capacity < needed:
            raise AssertionError(
                f"gadget capacity {capacity} below demand {needed}; parameters inconsistent"
            )
        ti = 0
        for s in sources:
            take = min(slots, needed - ti)
            for _ in range(take):
                edges.append((s, targets[ti]))
                ti += 1
            if ti == needed:
                break

    graph = from_edges(n, edges)

    classes = []
    for i in range(hubs):
        mask = 1 << i
        for t in range(copies):
            mask |= 1 << clique_a(t, i)
            mask |= 1 << clique_b(t, i)
        classes.append(mask)
    for v in range(o_base, g_base):
        classes.append(1 << v)
    partition = VertexPartition(n, classes)

    blocks = {"hubs": range(0, hubs), "singletons": range(o_base, g_base)}
    for t in range(copies):
        start = g_base + t * 2 * hubs
        blocks[f"gadget_{t}_a"] = range(start, start + hubs)
        blocks[f"gadget_{t}_b"] = range(start + hubs, start + 2 * hubs)

    params = dict(params)
    params["copies"] = copies
    params["classes"] = len(classes)
    return ConstructionLayout(graph, partition, blocks, params)


def build_quadratic_extremal(delta: int) -> ConstructionLayout:
    """Graph with maximum degree ``delta`` whose partition meets the quadratic bound.

    Class count is delta^2/4 + delta + 1 for even delta and
    (delta+1)(delta+3)/4 for odd delta.
    """
    if delta < 3:
        raise ValueError(
            "quadratic extremal construction requires maximum degree >= 3; "
            "below that the gadget vertices have no free edge capacity"
        )
    if delta % 2 == 0:
        r = delta // 2
        hubs = r + 1
        per_hub = r
        copies = (r + 3) // 2
    else:
        r = (delta - 1) // 2
        hubs = r + 1
        per_hub = r + 1
        copies = (r + 2) // 2  # ceil((r+1)/2)
    return _build_layout(hubs, per_hub, copies, {"max_degree": delta, "r": r})


def build_minmax_extremal(min_degree: int, max_degree: int) -> ConstructionLayout:
    """Graph attaining dmin*(dmax - dmin + 2) classes with both degrees exact.

    Requires dmax >= 2 and 1 <= dmin < floor((dmax + 2) / 2).
    """
    dmin, dmax = min_degree, max_degree
    if dmax < 2:
        raise ValueError("max degree >= 2 required (at max degree 1 the degree constraint is contradictory)")
    if dmin < 1:
        raise ValueError("min degree >= 1 required")
    if dmin >= (dmax + 2) // 2:
        raise ValueError(
            f"min degree {dmin} must be below floor((max degree + 2)/2) = {(dmax + 2) // 2}"
        )
    hubs = dmin
    per_hub = dmax - dmin + 1
    copies = (dmin + 1) // 2
    return _build_layout(
        hubs, per_hub, copies, {"min_degree": dmin, "max_degree": dmax}
    )


def build_realizer(g: Graph) -> tuple[Graph, VertexPartition]:
    """Host graph and partition whose coalition graph is exactly ``g``.

    Host vertices: the n originals spanning a complete graph; per edge
    (j, k) two helper vertices, one adjacent to all originals except j
    (assigned to class k) and one adjacent to all except k (assigned to
    class j); per non-edge {j, k} one helper adjacent to all originals
    except j and k, assigned to the lowest-index class other than j and k.
    """
    n = g.n
    if n < 2:
        raise ValueError("realizer needs at least 2 vertices")
    for v in range(n):
        if g.adj[v] == 0:
            raise ValueError(
                f"vertex {v} is isolated; its class would have no coalition partner"
            )
    edge_list = g.edges()
    non_edges = [
        (j, k) for j in range(n) for k in range(j + 1, n) if not g.has_edge(j, k)
    ]
    host_n = n + 2 * len(edge_list) + len(non_edges)
    edges: list[tuple[int, int]] = []
    for j in range(n):
        for k in range(j + 1, n):
            edges.append((j, k))

    class_members: list[list[int]] = [[v] for v in range(n)]
    cursor = n
    for (j, k) in edge_list:
        u_missing_j = cursor
        u_missing_k = cursor + 1
        cursor += 2
        for v in range(n):
            if v != j:
                edges.append((u_missing_j, v))
            if v != k:
                edges.append((u_missing_k, v))
        class_members[k].append(u_missing_j)
        class_members[j].append(u_missing_k)
    for (j, k) in non_edges:
        x = cursor
        cursor += 1
        for v in range(n):
            if v != j and v != k:
                edges.append((x, v))
        target = next(i for i in range(n) if i != j and i != k)
        class_members[target].append(x)

    host = from_edges(host_n, edges)
    partition = VertexPartition.from_sets(host_n, class_members)
    return host, partition


def write_layout(layout: ConstructionLayout, prefix: str) -> list[str]:
    """Write graph6, partition file and JSON sidecar; returns the paths."""
    paths = [f"{prefix}.g6", f"{prefix}.partition", f"{prefix}.json"]
    with open(paths[0], "w") as fh:
        fh.write(to_graph6(layout.graph) + "\n")
    with open(paths[1], "w") as fh:
        fh.write(format_partition(layout.partition))
    with open(paths[2], "w") as fh:
        json.dump(layout.sidecar(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return paths
