"""Peel-and-replay defective colouring of graphs with no K_{t+1} minor.

The peel phase repeatedly removes either a vertex of degree < t or an edge
whose two ends both have degree < s. The replay phase walks the removals
backwards: a restored vertex joins the lowest-index part holding none of its
neighbours, and a restored edge changes nothing. Every part then induces
maximum degree at most s - 1.

If peeling gets stuck on a non-null graph and the density parameters are
valid for the input's class, the surviving subgraph contains a K_{t+1} minor.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .graph import Graph

__all__ = [
    "DEFAULT_C",
    "ParameterError",
    "ReplayError",
    "Params",
    "VertexDeletion",
    "EdgeDeletion",
    "ReductionTrace",
    "Stuck",
    "Partition",
    "Coloring",
    "Violation",
    "VerificationReport",
    "compute_r",
    "compute_s",
    "make_params",
    "find_reduction",
    "reduce",
    "replay",
    "defective_coloring",
    "verify_partition",
]

DEFAULT_C = 4.0

# Relative distance to the next integer below which r(2r-t+2) is treated as
# possibly reaching it; s is then bumped, the safe direction.
_BOUNDARY_RTOL = 1e-12


class ParameterError(ValueError):
    pass


class ReplayError(RuntimeError):
    """A trace could not be replayed; only happens for corrupted traces."""


@dataclass(frozen=True)
class Params:
    t: int
    C: float
    density_override: Optional[float]
    r: float
    s: int

    def as_dict(self) -> dict:
        return {
            "t": self.t,
            "C": self.C,
            "density_override": self.density_override,
            "r": self.r,
            "s": self.s,
        }


def compute_r(t: int, C: float = DEFAULT_C, density_override: Optional[float] = None) -> float:
    """Edge-density parameter: ``max(base, (t+1)/2)``.

    ``base`` is ``density_override`` when given (the caller asserts every
    minor of the input has at most that many edges per vertex), otherwise
    ``C (t+1) sqrt(ln(t+1))``. The ``(t+1)/2`` floor enforces r > t/2.
    """
    if t < 0:
        raise ParameterError(f"t must be non-negative, got {t}")
    if not C > 0:
        raise ParameterError(f"C must be positive, got {C}")
    if density_override is not None:
        if not density_override > 0:
            raise ParameterError(f"density override must be positive, got {density_override}")
        base = float(density_override)
    else:
        base = C * (t + 1) * math.sqrt(math.log(t + 1))
    return max(base, (t + 1) / 2)


def compute_s(r: float, t: int) -> int:
    """Least integer strictly greater than ``r(2r - t + 2)``.

    The product is evaluated exactly on the binary value of ``r``, so an
    integral product yields that integer plus one. When the product falls
    just short of an integer (within float noise on r itself) the larger
    value is returned, since any s above the bound is valid.
    """
    if not r > t / 2:
        raise ParameterError(f"need r > t/2, got r={r}, t={t}")
    exact = Fraction(r) * (2 * Fraction(r) - t + 2)
    s = math.floor(exact) + 1
    gap = s - exact
    if gap < _BOUNDARY_RTOL * max(1, float(exact)):
        s += 1
    assert exact < s <= exact + 2
    return s


def make_params(
    t: int,
    C: float = DEFAULT_C,
    density_override: Optional[float] = None,
    s_override: Optional[int] = None,
) -> Params:
    r = compute_r(t, C, density_override)
    if s_override is not None:
        if s_override < 1:
            raise ParameterError(f"s override must be positive, got {s_override}")
        s = s_override
    else:
        s = compute_s(r, t)
    return Params(t=t, C=C, density_override=density_override, r=r, s=s)


# --- peel phase ------------------------------------------------------------


@dataclass(frozen=True)
class VertexDeletion:
    v: int
    neighbors: frozenset[int]

    def as_dict(self) -> dict:
        return {"op": "vertex", "v": self.v, "neighbors": sorted(self.neighbors)}


@dataclass(frozen=True)
class EdgeDeletion:
    u: int
    v: int

    def as_dict(self) -> dict:
        return {"op": "edge", "u": self.u, "v": self.v}


ReductionStep = Union[VertexDeletion, EdgeDeletion]


@dataclass
class ReductionTrace:
    graph: Graph
    steps: list[ReductionStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)


@dataclass
class Stuck:
    """No reduction applies to ``remaining``, a non-null induced subgraph."""

    remaining: Graph
    trace: ReductionTrace
    params: Optional[Params] = None

    def as_dict(self) -> dict:
        t = self.params.t if self.params is not None else None
        hint = (
            f"K_{{{t + 1}}} minor present if parameters valid"
            if t is not None
            else "K_{t+1} minor present if parameters valid"
        )
        return {
            "stuck": True,
            "remaining_vertices": self.remaining.vertices(),
            "hint": hint,
        }


def _least_low_edge(g: Graph, s: int) -> Optional[tuple[int, int]]:
    for u in g.vertices():
        if g.degree(u) >= s:
            continue
        for v in sorted(g.neighbors(u)):
            if v > u and g.degree(v) < s:
                return u, v
    return None


def find_reduction(g: Graph, t: int, s: int) -> Optional[ReductionStep]:
    """Next peel step: the lowest-id vertex of degree < t, else the
    lexicographically least edge with both end degrees < s, else None."""
    for v in g.vertices():
        if g.degree(v) < t:
            return VertexDeletion(v, g.neighbors(v))
    edge = _least_low_edge(g, s)
    return EdgeDeletion(*edge) if edge is not None else None


def reduce(g: Graph, t: int, s: int) -> Union[ReductionTrace, Stuck]:
    """Peel a private copy of ``g`` to nothing, choosing steps exactly as
    find_reduction would. Returns the trace, or Stuck with the survivors."""
    work = g.copy()
    trace = ReductionTrace(graph=g.copy())
    # Degrees never increase while peeling, so a vertex that drops below t
    # stays there until deleted; a lazy min-heap yields the lowest such id.
    low = [v for v in work.vertices() if work.degree(v) < t]
    heapq.heapify(low)
    while True:
        while low and not work.is_live(low[0]):
            heapq.heappop(low)
        if low:
            v = heapq.heappop(low)
            nbrs = work.neighbors(v)
            work.delete_vertex(v)
            trace.steps.append(VertexDeletion(v, nbrs))
            for u in nbrs:
                if work.degree(u) == t - 1:
                    heapq.heappush(low, u)
            continue
        edge = _least_low_edge(work, s)
        if edge is None:
            break
        u, v = edge
        work.delete_edge(u, v)
        trace.steps.append(EdgeDeletion(u, v))
        for x in edge:
            if work.degree(x) == t - 1:
                heapq.heappush(low, x)
    if work.num_vertices:
        return Stuck(remaining=work, trace=trace)
    return trace


# --- replay phase ----------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    parts: tuple[frozenset[int], ...]
    defect_bound: int

    def max_part_degree(self, g: Graph) -> int:
        return max(
            (max(g.induced_degrees(p).values(), default=0) for p in self.parts),
            default=0,
        )

    def as_lists(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]


def _check_replay_state(h: Graph, parts: Sequence[set[int]], s: int, depth: int) -> None:
    for i, part in enumerate(parts):
        for v, d in h.induced_degrees(part).items():
            if d > s - 1:
                raise ReplayError(
                    f"replay invariant broken at trace index {depth}: "
                    f"vertex {v} has degree {d} in part {i}, bound is {s - 1}"
                )


def replay(trace: ReductionTrace, t: int, s: int, check_invariant: bool = False) -> Partition:
    """Turn a complete peel trace into a partition into t parts.

    With ``check_invariant`` the graph H at each trace depth is rebuilt and,
    after every step, every part is re-checked from scratch for
    ``Δ(H | part) <= s - 1``; a violation raises ReplayError.
    """
    parts: list[set[int]] = [set() for _ in range(max(t, 0))]
    where: dict[int, int] = {}
    h = Graph.tombstoned(trace.graph.n)

    for depth in range(len(trace.steps) - 1, -1, -1):
        step = trace.steps[depth]
        if isinstance(step, VertexDeletion):
            if len(step.neighbors) >= t:
                raise ReplayError(f"vertex {step.v} was deleted with {len(step.neighbors)} >= t neighbours")
            taken = set()
            for u in step.neighbors:
                if u not in where:
                    raise ReplayError(f"neighbour {u} of {step.v} is not yet restored")
                taken.add(where[u])
            i = next(i for i in range(t) if i not in taken)
            parts[i].add(step.v)
            where[step.v] = i
            if check_invariant:
                h.restore_vertex(step.v)
                for u in step.neighbors:
                    h.add_edge(step.v, u)
        else:
            if step.u not in where or step.v not in where:
                raise ReplayError(f"edge {step.u} {step.v} restored before its ends")
            if check_invariant:
                h.add_edge(step.u, step.v)
        if check_invariant:
            _check_replay_state(h, parts, s, depth)

    if len(where) != trace.graph.num_vertices:
        raise ReplayError("trace does not delete every vertex of its graph")
    return Partition(parts=tuple(frozenset(p) for p in parts), defect_bound=s)


@dataclass
class Coloring:
    partition: Partition
    params: Params
    trace: ReductionTrace

    def as_dict(self) -> dict:
        return {
            "t": self.params.t,
            "s": self.params.s,
            "r": self.params.r,
            "parts": self.partition.as_lists(),
            "trace_len": len(self.trace),
        }


def defective_coloring(
    g: Graph,
    t: int,
    C: float = DEFAULT_C,
    density_override: Optional[float] = None,
    s_override: Optional[int] = None,
    check_invariant: bool = False,
) -> Union[Coloring, Stuck]:
    """Partition ``g`` into t parts each inducing maximum degree < s.

    Any returned partition is valid whatever ``g`` is; only the guarantee
    of never returning Stuck depends on ``g`` having no K_{t+1} minor and on
    ``C``/``density_override`` being valid for it.
    """
    if t < 0:
        raise ParameterError(f"t must be non-negative, got {t}")
    params = make_params(t, C, density_override, s_override)
    result = reduce(g, t, params.s)
    if isinstance(result, Stuck):
        result.params = params
        return result
    partition = replay(result, t, params.s, check_invariant=check_invariant)
    return Coloring(partition=partition, params=params, trace=result)


# --- verification ----------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str  # "uncovered" | "duplicated" | "unknown" | "over_degree"
    vertex: int
    part: Optional[int] = None
    degree: Optional[int] = None

    def as_dict(self) -> dict:
        d: dict = {"kind": self.kind, "vertex": self.vertex}
        if self.part is not None:
            d["part"] = self.part
        if self.degree is not None:
            d["degree"] = self.degree
        return d


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def as_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.as_dict() for v in self.violations]}


def verify_partition(g: Graph, parts: Union[Partition, Sequence[Sequence[int]]], s: int) -> VerificationReport:
    """Check that ``parts`` partition the live vertices of ``g`` and that each
    part induces maximum degree strictly below ``s``."""
    if isinstance(parts, Partition):
        parts = parts.parts
    violations: list[Violation] = []
    owner: dict[int, int] = {}
    clean: list[set[int]] = []
    for i, part in enumerate(parts):
        members = set()
        for v in part:
            if not g.is_live(v):
                violations.append(Violation("unknown", v, part=i))
            elif v in owner or v in members:
                violations.append(Violation("duplicated", v, part=i))
            else:
                owner[v] = i
                members.add(v)
        clean.append(members)
    for v in g.vertices():
        if v not in owner:
            violations.append(Violation("uncovered", v))
    for i, members in enumerate(clean):
        for v, d in sorted(g.induced_degrees(members).items()):
            if d >= s:
                violations.append(Violation("over_degree", v, part=i, degree=d))
    return VerificationReport(ok=not violations, violations=tuple(violations))
