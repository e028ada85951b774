"""Admissible hyperpath search inside a region of the ``r_family``.

Both searches grow an arborescence over explored vertices while an
exploration window shrinks onto ever smaller tight sets:

* the forward search starts from a safe source of a minimal in-tight set and
  only explores heads inside the window; whenever it enters a vertex whose
  minimal out-tight set is strictly smaller than the window, the window
  shrinks to it.  The final window is a minimal out-tight set and a safe
  sink inside it ends the path.
* the backward search mirrors this: it grows from a safe sink toward tails,
  shrinking the window onto minimal in-tight sets, and ends at a safe
  source.

Shrinking is what makes the resulting trimmed path *admissible*: once the
search enters a tight set of the opposite sign it never leaves it again, so
reorienting the path one hyperarc at a time never pushes a cut below the
current connectivity level.

Every tie is broken deterministically: hyperarcs are scanned in ascending
edge id (restarting after each mutation) and the smallest eligible vertex is
taken, so identical inputs produce identical paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Hypergraph,
    Hyperpath,
    InvariantViolation,
    Orientation,
    PathArc,
    PreconditionError,
    VertexSet,
    in_degree,
    out_degree,
)
from .families import CutFamilies, find_safe_sink, find_safe_source


@dataclass(frozen=True)
class AdmissiblePath:
    """Search result: endpoint sets, safe endpoints, and the hyperpath."""

    s_set: VertexSet
    t_set: VertexSet
    source: int
    sink: int
    path: Hyperpath


def _pick_member(fam_members: tuple[VertexSet, ...], region: VertexSet) -> VertexSet:
    for member in fam_members:
        if member <= region:
            return member
    raise InvariantViolation(f"no minimal member inside region {region}")


def admissible_path_in_tminus(
    h: Hypergraph, o: Orientation, fam: CutFamilies, region: VertexSet
) -> AdmissiblePath:
    """Admissible path inside an in-tight region of the ``r_family``.

    Forward search from a safe source; the trimming never leaves the region
    and never leaves any out-tight window it enters, and the final window
    must be a member of ``m_plus`` holding a safe sink.
    """
    if region not in fam.r_family:
        raise PreconditionError("region is not a member of r_family")
    if not region.is_full and in_degree(h, o, region) != fam.k:
        raise PreconditionError("region is not in-tight")
    s_set = _pick_member(fam.m_minus, region)
    source = find_safe_source(h, o, fam, s_set)

    explored = VertexSet.singleton(h.n, source)
    parent: dict[int, tuple[int, int]] = {}
    window = region
    while True:
        pick = None
        for e in range(h.m):
            v = o.heads[e]
            if v in window and v not in explored and o.tail(e).mask & explored.mask:
                pick = e
                break
        if pick is None:
            break
        v = o.heads[pick]
        u = min(iter(VertexSet.from_mask(h.n, o.tail(pick).mask & explored.mask)))
        explored = explored.add(v)
        parent[v] = (u, pick)
        q = fam.q_plus[v]
        if q < window:
            window = q

    t_set = window
    if t_set not in fam.m_plus:
        raise InvariantViolation(
            "search window did not settle on a minimal out-tight set: "
            "instance is not sufficiently partition-connected, or bug"
        )
    if not region.is_full and t_set == region:
        raise InvariantViolation("final window equals the region")
    sink = find_safe_sink(h, o, fam, t_set)
    if sink == source:
        raise InvariantViolation("safe source and safe sink coincide")

    arcs = []
    cur = sink
    while cur != source:
        if cur not in parent:
            raise InvariantViolation(f"sink {sink} was never explored from {source}")
        u, e = parent[cur]
        arcs.append(PathArc(edge=e, tail=u, head=cur))
        cur = u
    arcs.reverse()
    path = Hyperpath(tuple(arcs))
    _check_path(h, fam, region, path)
    return AdmissiblePath(s_set, t_set, source, sink, path)


def admissible_path_in_tplus(
    h: Hypergraph, o: Orientation, fam: CutFamilies, region: VertexSet
) -> AdmissiblePath:
    """Admissible path inside an out-tight region of the ``r_family``.

    Backward search from a safe sink over hyperarcs entering the explored
    set; every eligible tail of the picked hyperarc is consumed before the
    scan restarts, and the window shrinks onto minimal in-tight sets.  The
    final window must be a member of ``m_minus`` holding a safe source.
    """
    if region not in fam.r_family:
        raise PreconditionError("region is not a member of r_family")
    if not region.is_full and out_degree(h, o, region) != fam.k:
        raise PreconditionError("region is not out-tight")
    t_set = _pick_member(fam.m_plus, region)
    sink = find_safe_sink(h, o, fam, t_set)

    explored = VertexSet.singleton(h.n, sink)
    onward: dict[int, tuple[int, int]] = {}
    window = region
    while True:
        pick = None
        for e in range(h.m):
            v = o.heads[e]
            if v in explored and o.tail(e).mask & window.mask & ~explored.mask:
                pick = e
                break
        if pick is None:
            break
        v = o.heads[pick]
        while True:
            eligible = o.tail(pick).mask & window.mask & ~explored.mask
            if not eligible:
                break
            u = min(iter(VertexSet.from_mask(h.n, eligible)))
            explored = explored.add(u)
            onward[u] = (pick, v)
            q = fam.q_minus[u]
            if q < window:
                window = q

    s_set = window
    if s_set not in fam.m_minus:
        raise InvariantViolation(
            "search window did not settle on a minimal in-tight set: "
            "instance is not sufficiently partition-connected, or bug"
        )
    if not region.is_full and s_set == region:
        raise InvariantViolation("final window equals the region")
    source = find_safe_source(h, o, fam, s_set)
    if source == sink:
        raise InvariantViolation("safe source and safe sink coincide")

    arcs = []
    cur = source
    while cur != sink:
        if cur not in onward:
            raise InvariantViolation(f"source {source} was never explored toward {sink}")
        e, v = onward[cur]
        arcs.append(PathArc(edge=e, tail=cur, head=v))
        cur = v
    path = Hyperpath(tuple(arcs))
    _check_path(h, fam, region, path)
    return AdmissiblePath(s_set, t_set, source, sink, path)


def _check_path(h: Hypergraph, fam: CutFamilies, region: VertexSet, path: Hyperpath) -> None:
    if len(path.arcs) >= h.n:
        raise InvariantViolation("path has as many arcs as vertices")
    vertices = {path.s} | {arc.head for arc in path.arcs}
    if any(v not in region for v in vertices):
        raise InvariantViolation("trimming leaves the region")


def reachability_check(
    h: Hypergraph,
    o: Orientation,
    fam: CutFamilies,
    v: int,
    target_region: VertexSet | None = None,
    side: str = "out",
) -> bool:
    """Diagnostic: every vertex of the region is search-reachable.

    For ``side='out'`` the region defaults to ``q_plus[v]`` and the check is
    that a forward search from ``v`` staying inside the region reaches all
    of it; ``side='in'`` mirrors this backward inside ``q_minus[v]``.
    """
    if side not in ("out", "in"):
        raise PreconditionError("side must be 'out' or 'in'")
    if not 0 <= v < h.n:
        raise PreconditionError(f"vertex {v} out of range")
    region = target_region if target_region is not None else (
        fam.q_plus[v] if side == "out" else fam.q_minus[v]
    )
    if v not in region:
        raise PreconditionError("vertex lies outside the region")
    explored = VertexSet.singleton(h.n, v)
    changed = True
    while changed:
        changed = False
        for e in range(h.m):
            head = o.heads[e]
            if side == "out":
                if (
                    head in region
                    and head not in explored
                    and o.tail(e).mask & explored.mask
                ):
                    explored = explored.add(head)
                    changed = True
            else:
                if head in explored:
                    gain = o.tail(e).mask & region.mask & ~explored.mask
                    if gain:
                        explored = VertexSet.from_mask(h.n, explored.mask | gain)
                        changed = True
    return region <= explored
