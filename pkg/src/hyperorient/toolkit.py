"""Instance generator and text formats.

Hypergraph format (``.hg``): a ``n <count>`` line, then one
``e <v1> <v2> ...`` line per hyperedge.  Line order defines edge ids,
``#`` starts a comment, tokens are whitespace-separated.

Orientation format (``.or``): one ``o <edge_id> <head>`` line per edge,
every edge id exactly once, any order.

Trace format: one JSON object per line.  A header
``{"n":.., "m":.., "lambda_initial":.., "k_target":..}``, then
``{"step": i, "edge": e, "old_head": u, "new_head": v, "lambda": l}`` per
step (1-based), then a ``{"lambda_final":.., "steps":..}`` footer.  The
initial orientation is not embedded; it travels as a ``.or`` file.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .augment import ReorientationStep, ReorientationTrace
from .core import Hypergraph, Orientation, PreconditionError, VertexSet


class ParseError(ValueError):
    """Malformed input text; the message carries the 1-based line number."""


@dataclass(frozen=True)
class GenSpec:
    """Parameters for the guaranteed-feasible instance generator."""

    n: int
    k: int
    extra_edges: int = 0
    max_edge_size: int = 3
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 3:
            raise PreconditionError("generator needs n >= 3")
        if self.k < 1:
            raise PreconditionError("generator needs k >= 1")
        if self.extra_edges < 0:
            raise PreconditionError("extra_edges must be non-negative")
        if not 2 <= self.max_edge_size <= self.n:
            raise PreconditionError("max_edge_size must be in 2..n")


def gen_instance(spec: GenSpec) -> Hypergraph:
    """Union of ``k`` independently shuffled spanning cycles (as size-2
    edges) plus random extra hyperedges.

    Every spanning cycle crosses any partition into ``t`` classes at least
    ``t`` times and extra edges only add crossings, so the result is
    ``(k, k)``-partition-connected by construction.  The procedure is fully
    determined by the seed: per cycle one ``shuffle`` of ``[0..n-1]``, per
    extra edge one ``randint`` for the size then one ``sample``.
    """
    rng = random.Random(spec.seed)
    n = spec.n
    edges: list[VertexSet] = []
    for _ in range(spec.k):
        perm = list(range(n))
        rng.shuffle(perm)
        for i in range(n):
            edges.append(VertexSet(n, (perm[i], perm[(i + 1) % n])))
    for _ in range(spec.extra_edges):
        size = rng.randint(2, spec.max_edge_size)
        edges.append(VertexSet(n, rng.sample(range(n), size)))
    return Hypergraph(n, tuple(edges))


def gen_orientation(h: Hypergraph, seed: int = 0, mode: str = "random") -> Orientation:
    """Seeded orientation: one uniform head pick per edge in edge order.

    ``mode='min-head'`` ignores the seed and orients every edge toward its
    smallest vertex, a deterministic adversarial start.
    """
    if mode == "min-head":
        return Orientation(h, tuple(min(e) for e in h.edges))
    if mode != "random":
        raise PreconditionError(f"unknown orientation mode {mode!r}")
    rng = random.Random(seed)
    heads = []
    for e in h.edges:
        members = e.members()
        heads.append(members[rng.randrange(len(members))])
    return Orientation(h, tuple(heads))


def _tokenize(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the ``.hg`` format."""
    n = None
    edges: list[VertexSet] = []
    for lineno, tokens in _tokenize(text):
        kind = tokens[0]
        if kind == "n":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate n line")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(f"line {lineno}: expected 'n <count>'")
            n = int(tokens[1])
            if n < 2:
                raise ParseError(f"line {lineno}: need at least two vertices")
        elif kind == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before the n line")
            if len(tokens) < 3:
                raise ParseError(f"line {lineno}: edges need at least two vertices")
            try:
                members = [int(t) for t in tokens[1:]]
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer vertex") from None
            if len(set(members)) != len(members):
                raise ParseError(f"line {lineno}: repeated vertex in edge")
            if any(not 0 <= v < n for v in members):
                raise ParseError(f"line {lineno}: vertex outside 0..{n - 1}")
            edges.append(VertexSet(n, members))
        else:
            raise ParseError(f"line {lineno}: unknown directive {kind!r}")
    if n is None:
        raise ParseError("line 1: missing n line")
    return Hypergraph(n, tuple(edges))


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"n {h.n}"]
    for e in h.edges:
        lines.append("e " + " ".join(map(str, e)))
    return "\n".join(lines) + "\n"


def parse_orientation(text: str, h: Hypergraph) -> Orientation:
    """Parse the ``.or`` format against its hypergraph."""
    heads: dict[int, int] = {}
    for lineno, tokens in _tokenize(text):
        if tokens[0] != "o" or len(tokens) != 3:
            raise ParseError(f"line {lineno}: expected 'o <edge_id> <head>'")
        try:
            e, v = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token") from None
        if not 0 <= e < h.m:
            raise ParseError(f"line {lineno}: edge id {e} out of range")
        if e in heads:
            raise ParseError(f"line {lineno}: edge {e} oriented twice")
        if v not in h.edges[e]:
            raise ParseError(f"line {lineno}: vertex {v} not in edge {e}")
        heads[e] = v
    missing = [e for e in range(h.m) if e not in heads]
    if missing:
        raise ParseError(f"line 1: no orientation for edge {missing[0]}")
    return Orientation(h, tuple(heads[e] for e in range(h.m)))


def format_orientation(o: Orientation) -> str:
    lines = [f"o {e} {v}" for e, v in enumerate(o.heads)]
    return "\n".join(lines) + "\n"


def format_trace(trace: ReorientationTrace) -> str:
    lines = [
        json.dumps(
            {
                "n": trace.n,
                "m": trace.m,
                "lambda_initial": trace.lambda_initial,
                "k_target": trace.k_target,
            }
        )
    ]
    for i, step in enumerate(trace.steps, start=1):
        lines.append(
            json.dumps(
                {
                    "step": i,
                    "edge": step.edge,
                    "old_head": step.old_head,
                    "new_head": step.new_head,
                    "lambda": step.lambda_after,
                }
            )
        )
    lines.append(json.dumps({"lambda_final": trace.lambda_final, "steps": len(trace.steps)}))
    return "\n".join(lines) + "\n"


def parse_trace(text: str, initial: Orientation) -> ReorientationTrace:
    """Parse a trace file against the orientation it starts from."""
    h = initial.hypergraph
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            records.append((lineno, json.loads(line)))
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {lineno}: invalid JSON ({exc.msg})") from None
    if len(records) < 2:
        raise ParseError("line 1: trace needs a header and a footer")
    lineno, header = records[0]
    for key in ("n", "m", "lambda_initial", "k_target"):
        if key not in header:
            raise ParseError(f"line {lineno}: header misses {key!r}")
    if header["n"] != h.n or header["m"] != h.m:
        raise ParseError(f"line {lineno}: header is for a different hypergraph")
    lineno, footer = records[-1]
    for key in ("lambda_final", "steps"):
        if key not in footer:
            raise ParseError(f"line {lineno}: footer misses {key!r}")
    steps = []
    for expected, (lineno, rec) in enumerate(records[1:-1], start=1):
        for key in ("step", "edge", "old_head", "new_head", "lambda"):
            if key not in rec:
                raise ParseError(f"line {lineno}: step misses {key!r}")
        if rec["step"] != expected:
            raise ParseError(f"line {lineno}: step index {rec['step']}, expected {expected}")
        steps.append(
            ReorientationStep(
                edge=rec["edge"],
                old_head=rec["old_head"],
                new_head=rec["new_head"],
                lambda_after=rec["lambda"],
            )
        )
    if footer["steps"] != len(steps):
        raise ParseError(f"line {records[-1][0]}: footer claims {footer['steps']} steps, found {len(steps)}")
    return ReorientationTrace(
        initial=initial,
        k_target=header["k_target"],
        lambda_initial=header["lambda_initial"],
        lambda_final=footer["lambda_final"],
        steps=tuple(steps),
    )
