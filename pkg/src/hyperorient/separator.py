"""Minimum-degree separators and hyperarc-connectivity via max flow.

A directed hypergraph expands into a capacitated incidence digraph with one
extra node per hyperarc: hyperarc ``(X, v)`` on edge ``e`` becomes the
unit-capacity arc ``w_e -> v`` plus an unsaturable arc ``x -> w_e`` for every
tail ``x`` in ``X`` (capacity ``m + 1``, which no flow can fill because every
source-sink path crosses some unit arc).  A minimum cut in that digraph is a
minimum out-degree separator of the hypergraph, and the set of nodes
reachable from the source in the final residual network is the unique
inclusion-minimal minimizer.  In-degree separators use the arc-reversed
digraph.

Vertex ``i`` is node ``i``; the node for edge ``e`` is ``n + e``.  When a
query needs several sources or sinks they are merged through super-nodes
``n + m`` and ``n + m + 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .core import (
    Hypergraph,
    Orientation,
    PreconditionError,
    VertexSet,
    _same_instance,
)


@dataclass(frozen=True)
class IncidenceDigraph:
    """Capacitated digraph as a plain arc list ``(from, to, capacity)``."""

    n_nodes: int
    arcs: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for u, v, c in self.arcs:
            if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
                raise PreconditionError("arc endpoint out of range")
            if u == v or c <= 0:
                raise PreconditionError("arcs need distinct endpoints and positive capacity")


def incidence_digraph(h: Hypergraph, o: Orientation, reverse: bool = False) -> IncidenceDigraph:
    """Incidence digraph of a directed hypergraph (arc-reversed on request)."""
    _same_instance(h, o)
    n, m = h.n, h.m
    big = m + 1
    arcs = []
    for e in range(m):
        w = n + e
        head = o.heads[e]
        for x in h.edges[e]:
            if x != head:
                arcs.append((w, x, big) if reverse else (x, w, big))
        arcs.append((head, w, 1) if reverse else (w, head, 1))
    return IncidenceDigraph(n + m, tuple(arcs))


def max_flow_min_cut(
    g: IncidenceDigraph,
    source: int,
    sink: int,
    limit: Optional[int] = None,
) -> tuple[int, Optional[frozenset[int]]]:
    """Shortest-augmenting-path max flow with the minimal min-cut side.

    Returns ``(value, nodes)`` where ``nodes`` is everything reachable from
    the source in the final residual network: the source side of the unique
    inclusion-minimal minimum cut.  With ``limit`` set, augmentation stops
    once ``limit`` units flow; the result is then ``(limit, None)`` and means
    "the max flow is at least ``limit``".

    Residual BFS scans neighbors in ascending node order, so intermediate
    states are reproducible (the final reachable set is unique regardless).
    """
    if source == sink:
        raise PreconditionError("source and sink must differ")
    if not (0 <= source < g.n_nodes and 0 <= sink < g.n_nodes):
        raise PreconditionError("source or sink out of range")
    to: list[int] = []
    cap: list[int] = []
    adj: list[list[int]] = [[] for _ in range(g.n_nodes)]
    for u, v, c in g.arcs:
        adj[u].append(len(to))
        to.append(v)
        cap.append(c)
        adj[v].append(len(to))
        to.append(u)
        cap.append(0)
    for lst in adj:
        lst.sort(key=lambda i: (to[i], i))

    flow = 0
    while limit is None or flow < limit:
        parent = [-1] * g.n_nodes
        parent[source] = -2
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for i in adj[u]:
                v = to[i]
                if cap[i] > 0 and parent[v] == -1:
                    parent[v] = i
                    queue.append(v)
        if parent[sink] == -1:
            break
        bottleneck = None
        v = sink
        while v != source:
            i = parent[v]
            bottleneck = cap[i] if bottleneck is None else min(bottleneck, cap[i])
            v = to[i ^ 1]
        if limit is not None:
            bottleneck = min(bottleneck, limit - flow)
        v = sink
        while v != source:
            i = parent[v]
            cap[i] -= bottleneck
            cap[i ^ 1] += bottleneck
            v = to[i ^ 1]
        flow += bottleneck
    if limit is not None and flow >= limit:
        return flow, None

    seen = [False] * g.n_nodes
    seen[source] = True
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for i in adj[u]:
            v = to[i]
            if cap[i] > 0 and not seen[v]:
                seen[v] = True
                queue.append(v)
    return flow, frozenset(i for i in range(g.n_nodes) if seen[i])


@dataclass(frozen=True)
class SeparatorResult:
    """Minimum degree over the constrained separators plus the unique
    inclusion-minimal minimizer."""

    value: int
    separator: VertexSet


def _solve(
    h: Hypergraph,
    o: Orientation,
    side: str,
    source_set: VertexSet,
    avoid_set: VertexSet,
    limit: Optional[int] = None,
) -> tuple[int, Optional[VertexSet]]:
    """Minimize out-degree (``side='out'``) or in-degree (``side='in'``) over
    vertex sets that contain all of ``source_set`` and avoid ``avoid_set``.

    Returns ``(value, minimal minimizer)``; ``(limit, None)`` when the
    minimum is at least ``limit``.
    """
    if source_set.is_empty or avoid_set.is_empty:
        raise PreconditionError("source and avoid sets must be nonempty")
    if source_set.mask & avoid_set.mask:
        raise PreconditionError("source and avoid sets overlap")
    g = incidence_digraph(h, o, reverse=(side == "in"))
    ss, tt = g.n_nodes, g.n_nodes + 1
    big = h.m + 1
    arcs = list(g.arcs)
    for x in source_set:
        arcs.append((ss, x, big))
    for y in avoid_set:
        arcs.append((y, tt, big))
    extended = IncidenceDigraph(g.n_nodes + 2, tuple(arcs))
    value, reach = max_flow_min_cut(extended, ss, tt, limit=limit)
    if reach is None:
        return value, None
    mask = 0
    for node in reach:
        if node < h.n:
            mask |= 1 << node
    separator = VertexSet.from_mask(h.n, mask)
    if not source_set <= separator or separator.mask & avoid_set.mask:
        raise PreconditionError("internal: separator missed its constraints")
    return value, separator


def min_out_separator(h: Hypergraph, o: Orientation, s: int, sinks: VertexSet) -> SeparatorResult:
    """Minimum out-degree over sets containing ``s`` and avoiding ``sinks``,
    together with the inclusion-minimal minimizer."""
    if not 0 <= s < h.n:
        raise PreconditionError(f"vertex {s} out of range")
    if sinks.is_empty:
        raise PreconditionError("sink set must be nonempty")
    if s in sinks:
        raise PreconditionError("source lies in the sink set")
    value, separator = _solve(h, o, "out", VertexSet.singleton(h.n, s), sinks)
    assert separator is not None
    return SeparatorResult(value, separator)


def min_in_separator(h: Hypergraph, o: Orientation, t: int, sources: VertexSet) -> SeparatorResult:
    """Minimum in-degree over sets containing ``t`` and avoiding ``sources``,
    together with the inclusion-minimal minimizer."""
    if not 0 <= t < h.n:
        raise PreconditionError(f"vertex {t} out of range")
    if sources.is_empty:
        raise PreconditionError("source set must be nonempty")
    if t in sources:
        raise PreconditionError("sink lies in the source set")
    value, separator = _solve(h, o, "in", VertexSet.singleton(h.n, t), sources)
    assert separator is not None
    return SeparatorResult(value, separator)


def hyperarc_connectivity(h: Hypergraph, o: Orientation) -> int:
    """Largest ``k`` such that every nonempty proper vertex set has
    out-degree at least ``k``.

    Every candidate set either contains vertex 0 or misses it, so the
    minimum over all sets equals the minimum over separator queries between
    vertex 0 and each other vertex, in both directions.
    """
    _same_instance(h, o)
    best = h.m + 1
    for v in range(1, h.n):
        for src, snk in ((0, v), (v, 0)):
            value, _ = _solve(
                h,
                o,
                "out",
                VertexSet.singleton(h.n, src),
                VertexSet.singleton(h.n, snk),
                limit=best,
            )
            if value < best:
                best = value
                if best == 0:
                    return 0
    return best
