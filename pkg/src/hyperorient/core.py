"""Exact hypergraph and directed-hypergraph primitives.

Vertices are the dense integers ``0..n-1``.  A hyperedge is a vertex set of
size at least two; hyperedges are kept in input order (their position is the
edge id) and may repeat, in which case they count with multiplicity.
Orienting a hyperedge toward a head vertex turns it into a hyperarc: the head
receives, every other vertex of the edge is a tail.

All quantities are exact integer counts, every iteration order is ascending,
and every value is immutable, so each operation is a pure deterministic
function of its inputs and values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class PreconditionError(ValueError):
    """Arguments violate an operation's contract."""


class InvalidReorientation(PreconditionError):
    """The requested vertex is not a legal new head for the edge."""


class InvariantViolation(RuntimeError):
    """An internal postcondition failed.

    Raised when a search or family computation reaches a state that is
    impossible for feasible inputs; it signals either an instance that lacks
    the required partition-connectivity or a bug.
    """


class VertexSet:
    """Immutable subset of ``{0, .., n-1}`` backed by a bitmask.

    Comparison operators follow set semantics (``<=`` is subset, ``<`` is
    proper subset).  Deterministic tie-breaking everywhere in this package
    uses :meth:`sort_key`, which orders by size first and then
    lexicographically on the sorted member tuple.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, members: Iterable[int] = ()) -> None:
        if n < 0:
            raise PreconditionError("vertex count must be non-negative")
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise PreconditionError(f"vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        self.n = n
        self.mask = mask

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "VertexSet":
        if mask < 0 or mask >> n:
            raise PreconditionError("mask has bits outside 0..n-1")
        out = cls.__new__(cls)
        out.n = n
        out.mask = mask
        return out

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls.from_mask(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls.from_mask(n, (1 << n) - 1)

    @classmethod
    def singleton(cls, n: int, v: int) -> "VertexSet":
        if not 0 <= v < n:
            raise PreconditionError(f"vertex {v} outside 0..{n - 1}")
        return cls.from_mask(n, 1 << v)

    def _check(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet):
            raise PreconditionError(f"expected VertexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise PreconditionError("vertex sets over different ground sets")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and self.mask >> v & 1 == 1

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VertexSet)
            and other.n == self.n
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self.n, self.mask & other.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self.n, self.mask | other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self.n, self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "VertexSet") -> bool:
        self._check(other)
        return other <= self

    def __gt__(self, other: "VertexSet") -> bool:
        return other < self

    def complement(self) -> "VertexSet":
        return VertexSet.from_mask(self.n, ~self.mask & ((1 << self.n) - 1))

    def add(self, v: int) -> "VertexSet":
        if not 0 <= v < self.n:
            raise PreconditionError(f"vertex {v} outside 0..{self.n - 1}")
        return VertexSet.from_mask(self.n, self.mask | 1 << v)

    def remove(self, v: int) -> "VertexSet":
        if not 0 <= v < self.n:
            raise PreconditionError(f"vertex {v} outside 0..{self.n - 1}")
        return VertexSet.from_mask(self.n, self.mask & ~(1 << v))

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), self.members())

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {{{', '.join(map(str, self))}}})"


def crossing(x: VertexSet, y: VertexSet) -> bool:
    """Whether two vertex sets cross: they overlap, neither contains the
    other, and their union is not everything."""
    x._check(y)
    full = (1 << x.n) - 1
    return (
        x.mask & y.mask != 0
        and x.mask | y.mask != full
        and x.mask & ~y.mask != 0
        and y.mask & ~x.mask != 0
    )


def canonical_sorted(sets: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Deduplicate and sort vertex sets in canonical order."""
    uniq = {(s.n, s.mask): s for s in sets}
    return tuple(sorted(uniq.values(), key=VertexSet.sort_key))


def minimal_members(sets: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Inclusion-minimal members of a family, canonically sorted."""
    pool = canonical_sorted(sets)
    out = []
    for s in pool:
        if not any(t.mask != s.mask and t.mask & ~s.mask == 0 for t in pool):
            out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """Undirected hypergraph: a vertex count and an ordered multiset of
    hyperedges, each a vertex set of size at least two."""

    n: int
    edges: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise PreconditionError("hypergraph needs at least two vertices")
        if not isinstance(self.edges, tuple):
            object.__setattr__(self, "edges", tuple(self.edges))
        for i, e in enumerate(self.edges):
            if not isinstance(e, VertexSet) or e.n != self.n:
                raise PreconditionError(f"edge {i} is not a vertex set over 0..{self.n - 1}")
            if len(e) < 2:
                raise PreconditionError(f"edge {i} has fewer than two vertices")

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def __repr__(self) -> str:
        edges = ", ".join("{" + ",".join(map(str, e)) + "}" for e in self.edges)
        return f"Hypergraph(n={self.n}, edges=[{edges}])"


def hypergraph(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Convenience constructor from plain vertex collections."""
    return Hypergraph(n, tuple(VertexSet(n, e) for e in edges))


@dataclass(frozen=True)
class Orientation:
    """Head assignment for every edge of a hypergraph.

    Together with its hypergraph this is a directed hypergraph: edge ``e``
    becomes the hyperarc ``(edges[e] - heads[e], heads[e])``.
    """

    hypergraph: Hypergraph
    heads: tuple[int, ...]

    def __post_init__(self) -> None:
        h = self.hypergraph
        if not isinstance(self.heads, tuple):
            object.__setattr__(self, "heads", tuple(self.heads))
        if len(self.heads) != h.m:
            raise PreconditionError(f"expected {h.m} heads, got {len(self.heads)}")
        for e, v in enumerate(self.heads):
            if v not in h.edges[e]:
                raise PreconditionError(f"head {v} not in edge {e}")

    def tail(self, e: int) -> VertexSet:
        return self.hypergraph.edges[e].remove(self.heads[e])

    def hyperarc(self, e: int) -> tuple[VertexSet, int]:
        return self.tail(e), self.heads[e]

    def __repr__(self) -> str:
        return f"Orientation(heads={list(self.heads)})"


def _same_instance(h: Hypergraph, o: Orientation) -> None:
    if o.hypergraph is not h and o.hypergraph != h:
        raise PreconditionError("orientation does not belong to this hypergraph")


def _proper_nonempty(h: Hypergraph, x: VertexSet) -> None:
    if x.n != h.n:
        raise PreconditionError("vertex set over a different ground set")
    if x.is_empty or x.is_full:
        raise PreconditionError("degree functions need a nonempty proper vertex set")


def degree(h: Hypergraph, x: VertexSet) -> int:
    """Number of hyperedges meeting both ``x`` and its complement."""
    _proper_nonempty(h, x)
    xm = x.mask
    return sum(1 for e in h.edges if e.mask & xm and e.mask & ~xm)


def in_degree(h: Hypergraph, o: Orientation, x: VertexSet) -> int:
    """Number of hyperarcs whose head lies in ``x`` and whose tail set is
    not fully inside ``x``."""
    _same_instance(h, o)
    _proper_nonempty(h, x)
    xm = x.mask
    count = 0
    for e, v in enumerate(o.heads):
        if xm >> v & 1 and (h.edges[e].mask & ~(1 << v)) & ~xm:
            count += 1
    return count


def out_degree(h: Hypergraph, o: Orientation, x: VertexSet) -> int:
    """Number of hyperarcs whose head lies outside ``x`` and whose tail set
    meets ``x``."""
    _same_instance(h, o)
    _proper_nonempty(h, x)
    xm = x.mask
    count = 0
    for e, v in enumerate(o.heads):
        if not xm >> v & 1 and (h.edges[e].mask & ~(1 << v)) & xm:
            count += 1
    return count


class Partition:
    """Partition of the vertex set into pairwise-disjoint nonempty classes.

    Classes are stored canonically sorted; disjointness and coverage are
    checked on construction.
    """

    __slots__ = ("n", "classes")

    def __init__(self, n: int, classes: Iterable[Iterable[int] | VertexSet]) -> None:
        parts = []
        for c in classes:
            part = c if isinstance(c, VertexSet) else VertexSet(n, c)
            if part.n != n:
                raise PreconditionError("partition class over a different ground set")
            if part.is_empty:
                raise PreconditionError("partition classes must be nonempty")
            parts.append(part)
        union = 0
        total = 0
        for part in parts:
            union |= part.mask
            total += len(part)
        if union != (1 << n) - 1 or total != n:
            raise PreconditionError("classes must partition the vertex set")
        self.n = n
        self.classes = canonical_sorted(parts)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.classes)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Partition)
            and other.n == self.n
            and other.classes == self.classes
        )

    def __hash__(self) -> int:
        return hash((self.n, self.classes))

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.classes)
        return f"Partition({body})"


def crossing_edges(h: Hypergraph, p: Partition) -> int:
    """Number of hyperedges that intersect at least two classes of ``p``."""
    if p.n != h.n:
        raise PreconditionError("partition over a different ground set")
    count = 0
    for e in h.edges:
        hit = 0
        for c in p.classes:
            if e.mask & c.mask:
                hit += 1
                if hit == 2:
                    count += 1
                    break
    return count


def reorient(o: Orientation, e: int, u: int) -> Orientation:
    """Reorient edge ``e`` toward ``u``: replace hyperarc ``(X, v)`` by
    ``(X - u + v, u)``.  The underlying hyperedge is unchanged."""
    h = o.hypergraph
    if not 0 <= e < h.m:
        raise PreconditionError(f"edge id {e} out of range")
    if u not in h.edges[e]:
        raise InvalidReorientation(f"vertex {u} not in edge {e}")
    if u == o.heads[e]:
        raise InvalidReorientation(f"vertex {u} is already the head of edge {e}")
    heads = list(o.heads)
    heads[e] = u
    return Orientation(h, tuple(heads))


@dataclass(frozen=True)
class PathArc:
    """One hyperarc of a hyperpath with its chosen tail vertex recorded.

    ``head`` snapshots the head at the time the path was found, so a path
    stays meaningful while the orientation it came from is being modified.
    """

    edge: int
    tail: int
    head: int


@dataclass(frozen=True)
class Hyperpath:
    """Sequence of hyperarcs chaining ``s`` to ``t`` with distinct heads."""

    arcs: tuple[PathArc, ...]

    def __post_init__(self) -> None:
        if not self.arcs:
            raise PreconditionError("hyperpath needs at least one arc")

    @property
    def s(self) -> int:
        return self.arcs[0].tail

    @property
    def t(self) -> int:
        return self.arcs[-1].head


def trim(h: Hypergraph, path: Hyperpath) -> tuple[int, ...]:
    """Vertex sequence ``s, a_1, .., a_l`` of the induced plain directed path.

    Rejects malformed hyperpaths: tail or head outside the edge, a chosen
    tail that is not the previous head, or repeated vertices.
    """
    for i, arc in enumerate(path.arcs):
        if not 0 <= arc.edge < h.m:
            raise PreconditionError(f"arc {i}: edge id {arc.edge} out of range")
        e = h.edges[arc.edge]
        if arc.head not in e:
            raise PreconditionError(f"arc {i}: head {arc.head} not in edge {arc.edge}")
        if arc.tail not in e or arc.tail == arc.head:
            raise PreconditionError(f"arc {i}: tail {arc.tail} is not a tail of edge {arc.edge}")
        if i > 0 and arc.tail != path.arcs[i - 1].head:
            raise PreconditionError(f"arc {i}: chosen tail {arc.tail} is not the previous head")
    seq = (path.s,) + tuple(arc.head for arc in path.arcs)
    if len(set(seq)) != len(seq):
        raise PreconditionError("hyperpath revisits a vertex")
    return seq
