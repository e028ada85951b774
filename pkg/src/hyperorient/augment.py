"""Connectivity-raising reorientation: one level at a time, one hyperarc at
a time, never letting the connectivity drop.

Raising the level from ``k`` to ``k + 1`` loops: compute the cut families at
level ``k``, pick the canonically smallest region of the ``r_family``, find
an admissible path in it, and reorient the path's hyperarcs one by one
toward their recorded tails (end to start inside an in-tight region, start
to end inside an out-tight one).  The connectivity is recomputed after every
single reorientation and asserted to stay at least ``k``; reaching ``k + 1``
mid-path ends the level immediately, which keeps the per-step connectivity
sequence non-decreasing.  Each full path strictly shrinks the potential
``(|m_all|, -covered vertices)``, so a level finishes within ``n^2``
iterations and ``n^3`` single-hyperarc steps.

The input hypergraph must be sufficiently partition-connected for the target
level; that precondition is not tested exactly (deliberately out of scope).
Violations surface as :class:`NotPartitionConnectedError` through fail-fast
guards: a missing safe endpoint, a stuck search, a connectivity drop, a
non-decreasing potential, or a blown step budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .core import (
    Hypergraph,
    InvariantViolation,
    Orientation,
    Partition,
    PreconditionError,
    VertexSet,
    reorient,
)
from .families import CutFamilies, compute_families, is_in_tight
from .pathsearch import AdmissiblePath, admissible_path_in_tminus, admissible_path_in_tplus
from .separator import _solve, hyperarc_connectivity


class NotPartitionConnectedError(RuntimeError):
    """The instance cannot support the requested connectivity level.

    ``certificate`` carries a violated vertex set or partition when one is
    cheaply available, else ``None``.
    """

    def __init__(self, message: str, certificate: VertexSet | Partition | None = None):
        super().__init__(message)
        self.certificate = certificate


@dataclass(frozen=True)
class ReorientationStep:
    """One single-hyperarc reorientation with the connectivity after it."""

    edge: int
    old_head: int
    new_head: int
    lambda_after: int


@dataclass(frozen=True)
class ReorientationTrace:
    """Certified reorientation sequence from an initial orientation."""

    initial: Orientation
    k_target: int
    lambda_initial: int
    lambda_final: int
    steps: tuple[ReorientationStep, ...]

    @property
    def n(self) -> int:
        return self.initial.hypergraph.n

    @property
    def m(self) -> int:
        return self.initial.hypergraph.m


@dataclass(frozen=True)
class PathEvent:
    """Observer record emitted once per admissible path, before it is
    applied.  ``families`` and ``orientation`` are the pre-path state."""

    level: int
    iteration: int
    region: VertexSet
    branch: str
    result: AdmissiblePath
    families: CutFamilies
    orientation: Orientation


Observer = Callable[[PathEvent], None]


def _potential(fam: CutFamilies) -> tuple[int, int]:
    return (len(fam.m_all), -sum(len(x) for x in fam.m_all))


def _lambda_capped(h: Hypergraph, o: Orientation, cap: int) -> int:
    """Exact connectivity, computed with flows capped at ``cap``; valid
    whenever the true value is below ``cap``."""
    best = cap
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


def _drop_certificate(h: Hypergraph, o: Orientation, k: int) -> Optional[VertexSet]:
    """A vertex set with out-degree below ``k``, if one is cheap to find."""
    for v in range(1, h.n):
        for src, snk in ((0, v), (v, 0)):
            value, sep = _solve(
                h,
                o,
                "out",
                VertexSet.singleton(h.n, src),
                VertexSet.singleton(h.n, snk),
                limit=k,
            )
            if sep is not None and value < k:
                return sep
    return None


def augment_one(
    h: Hypergraph,
    o: Orientation,
    level: Optional[int] = None,
    observer: Optional[Observer] = None,
) -> tuple[Orientation, ReorientationTrace]:
    """Raise the connectivity from ``level`` (the current exact value by
    default) to ``level + 1`` by single-hyperarc reorientations.

    Returns the new orientation and a trace whose per-step connectivity is
    non-decreasing and never below ``level``.  If the orientation is already
    above ``level`` the trace is empty.
    """
    lam0 = hyperarc_connectivity(h, o)
    k = lam0 if level is None else level
    if k > lam0:
        raise PreconditionError(f"orientation has connectivity {lam0}, below level {k}")

    n = h.n
    budget = n**3 + n
    steps: list[ReorientationStep] = []
    cur = o
    lam_cur = lam0
    prev_potential: Optional[tuple[int, int]] = None
    iteration = 0

    while lam_cur == k:
        fam = compute_families(h, cur, level=None)
        if fam.k != k:
            if fam.k > k:
                break
            raise NotPartitionConnectedError(
                f"connectivity dropped to {fam.k} below level {k}",
                certificate=_drop_certificate(h, cur, k),
            )
        pot = _potential(fam)
        if prev_potential is not None and not pot < prev_potential:
            raise NotPartitionConnectedError(
                f"families potential did not decrease: {prev_potential} -> {pot}"
            )
        prev_potential = pot
        iteration += 1
        if iteration > n * n:
            raise NotPartitionConnectedError(f"more than {n * n} path iterations at level {k}")

        region = fam.r_family[0]
        in_branch = is_in_tight(h, cur, k, region, fam.r)
        try:
            if in_branch:
                result = admissible_path_in_tminus(h, cur, fam, region)
            else:
                result = admissible_path_in_tplus(h, cur, fam, region)
        except InvariantViolation as exc:
            raise NotPartitionConnectedError(str(exc)) from exc
        if observer is not None:
            observer(
                PathEvent(
                    level=k,
                    iteration=iteration,
                    region=region,
                    branch="in-tight" if in_branch else "out-tight",
                    result=result,
                    families=fam,
                    orientation=cur,
                )
            )

        order = tuple(reversed(result.path.arcs)) if in_branch else result.path.arcs
        for arc in order:
            if len(steps) >= budget:
                raise NotPartitionConnectedError(f"step budget {budget} exhausted at level {k}")
            old_head = cur.heads[arc.edge]
            if old_head != arc.head:
                raise InvariantViolation(f"edge {arc.edge} changed head mid-path")
            cur = reorient(cur, arc.edge, arc.tail)
            lam_after = _lambda_capped(h, cur, cap=lam_cur + 2)
            if lam_after < k:
                raise NotPartitionConnectedError(
                    f"connectivity dropped to {lam_after} during a path at level {k}",
                    certificate=_drop_certificate(h, cur, k),
                )
            steps.append(ReorientationStep(arc.edge, old_head, arc.tail, lam_after))
            lam_cur = lam_after
            if lam_cur > k:
                break

    if lam_cur <= k:
        raise InvariantViolation("augmentation loop ended below its target")
    if len(steps) > n**3:
        raise InvariantViolation(f"level used {len(steps)} steps, above the n^3 bound")
    trace = ReorientationTrace(
        initial=o,
        k_target=k + 1,
        lambda_initial=lam0,
        lambda_final=lam_cur,
        steps=tuple(steps),
    )
    return cur, trace


def augment_to(
    h: Hypergraph,
    o: Orientation,
    k_target: int,
    observer: Optional[Observer] = None,
) -> ReorientationTrace:
    """Raise the connectivity to ``k_target`` by repeated single increments.

    The concatenated trace uses at most ``(k_target - lambda_initial) * n^3``
    steps.  ``k_target`` below the initial connectivity is rejected.
    """
    lam0 = hyperarc_connectivity(h, o)
    if k_target < lam0:
        raise PreconditionError(f"target {k_target} is below the initial connectivity {lam0}")
    steps: list[ReorientationStep] = []
    cur = o
    lam = lam0
    while lam < k_target:
        cur, partial = augment_one(h, cur, level=lam, observer=observer)
        steps.extend(partial.steps)
        lam = partial.lambda_final
    if len(steps) > (k_target - lam0) * h.n**3:
        raise InvariantViolation("total steps exceed the (k - lambda) * n^3 bound")
    return ReorientationTrace(
        initial=o,
        k_target=k_target,
        lambda_initial=lam0,
        lambda_final=lam,
        steps=tuple(steps),
    )


def apply_trace(trace: ReorientationTrace) -> Orientation:
    """Replay a trace's steps from its initial orientation."""
    cur = trace.initial
    for step in trace.steps:
        cur = reorient(cur, step.edge, step.new_head)
    return cur


@dataclass(frozen=True)
class VerifyFailure:
    """One violated check: the 1-based step index (``None`` for trace-level
    checks) and what went wrong."""

    step: Optional[int]
    message: str


@dataclass(frozen=True)
class VerifyReport:
    failures: tuple[VerifyFailure, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures

    def render(self) -> str:
        if self.ok:
            return "trace OK"
        lines = []
        for f in self.failures:
            where = f"step {f.step}" if f.step is not None else "trace"
            lines.append(f"FAIL {where}: {f.message}")
        return "\n".join(lines)


def verify_trace(h: Hypergraph, trace: ReorientationTrace) -> VerifyReport:
    """Independent certification of a trace.

    Replays every step, recomputes the connectivity after each, and checks:
    steps are single legal reorientations, the recomputed connectivity
    matches the recorded one and never decreases, the final connectivity
    equals the claim and reaches the target, and the step count respects the
    ``(k_target - lambda_initial) * n^3`` bound.
    """
    failures: list[VerifyFailure] = []
    if trace.initial.hypergraph != h:
        return VerifyReport((VerifyFailure(None, "trace initial orientation is for a different hypergraph"),))
    lam = hyperarc_connectivity(h, trace.initial)
    if lam != trace.lambda_initial:
        failures.append(
            VerifyFailure(None, f"initial connectivity is {lam}, trace claims {trace.lambda_initial}")
        )
    cur = trace.initial
    for i, step in enumerate(trace.steps, start=1):
        if not 0 <= step.edge < h.m:
            failures.append(VerifyFailure(i, f"edge id {step.edge} out of range"))
            break
        if cur.heads[step.edge] != step.old_head:
            failures.append(
                VerifyFailure(
                    i,
                    f"edge {step.edge} has head {cur.heads[step.edge]}, step claims {step.old_head}",
                )
            )
        if step.new_head not in h.edges[step.edge] or step.new_head == cur.heads[step.edge]:
            failures.append(VerifyFailure(i, f"illegal new head {step.new_head} for edge {step.edge}"))
            break
        cur = reorient(cur, step.edge, step.new_head)
        lam_after = _lambda_capped(h, cur, cap=lam + 2)
        if lam_after != step.lambda_after:
            failures.append(
                VerifyFailure(i, f"connectivity after step is {lam_after}, step claims {step.lambda_after}")
            )
        if lam_after < lam:
            failures.append(VerifyFailure(i, f"connectivity decreased from {lam} to {lam_after}"))
        lam = lam_after
    else:
        if lam != trace.lambda_final:
            failures.append(
                VerifyFailure(None, f"final connectivity is {lam}, trace claims {trace.lambda_final}")
            )
        if trace.lambda_final < trace.k_target:
            failures.append(
                VerifyFailure(
                    None,
                    f"trace ends at connectivity {trace.lambda_final}, below target {trace.k_target}",
                )
            )
        bound = max(0, trace.k_target - trace.lambda_initial) * h.n**3
        if len(trace.steps) > bound:
            failures.append(VerifyFailure(None, f"{len(trace.steps)} steps exceed the bound {bound}"))
    return VerifyReport(tuple(failures))
