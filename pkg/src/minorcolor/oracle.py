"""Exhaustive ground truth for small graphs: clique minors and minimum defect.

Both searches are exact and only meant for desk-scale inputs. The minor
search is bounded by a count of search-node expansions so that a timeout is
reproducible; the defect search refuses graphs above a vertex cap.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import Graph, components

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_DEFECT_CAP",
    "MinorModel",
    "MinorSearchResult",
    "OracleGuardError",
    "check_minor_model",
    "has_clique_minor",
    "min_defect",
]

DEFAULT_BUDGET = 2_000_000
DEFAULT_DEFECT_CAP = 14


class OracleGuardError(ValueError):
    """Input too large for exhaustive search."""


@dataclass(frozen=True)
class MinorModel:
    branch_sets: tuple[frozenset[int], ...]

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.branch_sets]


@dataclass(frozen=True)
class MinorSearchResult:
    status: str  # "yes" | "no" | "timeout"
    model: Optional[MinorModel]
    expansions: int

    @property
    def found(self) -> bool:
        return self.status == "yes"

    def as_dict(self) -> dict:
        d: dict = {"result": self.status, "expansions": self.expansions}
        if self.model is not None:
            d["branch_sets"] = self.model.as_lists()
        return d


def check_minor_model(g: Graph, model: MinorModel, k: Optional[int] = None) -> list[str]:
    """Problems that keep ``model`` from witnessing a K_k minor of ``g``; empty if none."""
    problems = []
    sets = model.branch_sets
    if k is not None and len(sets) != k:
        problems.append(f"expected {k} branch sets, got {len(sets)}")
    seen: set[int] = set()
    for i, b in enumerate(sets):
        if not b:
            problems.append(f"branch set {i} is empty")
            continue
        dead = [v for v in b if not g.is_live(v)]
        if dead:
            problems.append(f"branch set {i} uses non-vertices {sorted(dead)}")
            continue
        if seen & b:
            problems.append(f"branch set {i} overlaps an earlier one at {sorted(seen & b)}")
        seen |= b
        if len(list(components(g, b))) != 1:
            problems.append(f"branch set {i} is not connected")
    for i, j in combinations(range(len(sets)), 2):
        if not any(g.has_edge(u, v) for u in sets[i] for v in sets[j]):
            problems.append(f"no edge between branch sets {i} and {j}")
    return problems


class _Timeout(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _shrink(g: Graph, k: int) -> tuple[Graph, dict[int, set[int]]]:
    """Minor-equivalent reduction of ``g`` for K_k detection, k >= 3.

    Vertices of degree <= 1 never help a K_k model (k >= 3) and are deleted.
    For k >= 4 a degree-2 vertex v cannot be a branch set by itself, so it is
    merged into a neighbour a (delete v, join a to v's other neighbour); a
    model of the result lifts to ``g`` by adding v back to a's branch set.
    ``bags[x]`` lists the original vertices merged into x.
    """
    h = g.copy()
    bags = {v: {v} for v in h.vertices()}
    queue = h.vertices()
    while queue:
        v = queue.pop()
        if not h.is_live(v):
            continue
        d = h.degree(v)
        if d <= 1:
            nbrs = h.neighbors(v)
            h.delete_vertex(v)
            del bags[v]
            queue.extend(nbrs)
        elif d == 2 and k >= 4:
            a, b = sorted(h.neighbors(v))
            h.delete_vertex(v)
            if not h.has_edge(a, b):
                h.add_edge(a, b)
            bags[a] |= bags.pop(v)
            queue.extend((a, b))
    return h, bags


def has_clique_minor(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> MinorSearchResult:
    """Decide whether ``g`` has a K_k minor by backtracking over branch sets.

    The graph is first shrunk by minor-preserving deletions and degree-2
    suppressions, then each connected component is searched on its own (a
    clique model always lies inside one component). Within a component,
    vertices are visited in descending degree order and each goes into an
    already opened branch set, a newly opened one, or nowhere. Branch sets
    are opened in visiting order, which removes their k! relabellings. A
    partial assignment is abandoned when some branch set can no longer be
    connected through undecided vertices, when two branch sets can no longer
    become adjacent, or when too few undecided vertices remain to open the
    missing sets.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")

    verts = g.vertices()
    if len(verts) < k or g.m < k * (k - 1) // 2:
        return MinorSearchResult("no", None, 0)
    if k == 1:
        return MinorSearchResult("yes", MinorModel((frozenset({verts[0]}),)), 1)
    if k == 2:
        u, v = g.edges()[0]
        return MinorSearchResult("yes", MinorModel((frozenset({u}), frozenset({v}))), 1)

    h, bags = _shrink(g, k)
    expansions = 0
    for comp in components(h):
        comp_edges = sum(h.degree(v) for v in comp) // 2
        if len(comp) < k or comp_edges < k * (k - 1) // 2:
            continue
        try:
            found, used = _search_component(h, sorted(comp), k, budget - expansions)
        except _Timeout:
            return MinorSearchResult("timeout", None, budget)
        expansions += used
        if found is not None:
            model = MinorModel(
                tuple(frozenset().union(*(bags[x] for x in _bits(mask))) for mask in found)
            )
            assert not check_minor_model(g, model, k), "lifted minor model is invalid"
            return MinorSearchResult("yes", model, expansions)
    return MinorSearchResult("no", None, expansions)


def _search_component(h: Graph, comp: list[int], k: int, budget: int) -> tuple[Optional[list[int]], int]:
    nbr = {v: sum(1 << u for u in h.neighbors(v)) for v in comp}
    order = sorted(comp, key=lambda v: (-h.degree(v), v))
    expansions = 0

    def nbhd(mask: int) -> int:
        out = 0
        for v in _bits(mask):
            out |= nbr[v]
        return out

    def connectable(x: int, allowed: int) -> bool:
        start = x & -x
        reach = start
        frontier = start
        while frontier:
            grow = nbhd(frontier) & allowed & ~reach
            reach |= grow
            frontier = grow
        return x & ~reach == 0

    def viable(sets: list[int], undecided: int) -> tuple[bool, bool]:
        """(can still succeed, already a model)."""
        if k - len(sets) > bin(undecided).count("1"):
            return False, False
        complete = len(sets) == k
        nb = [nbhd(x) for x in sets]
        for x in sets:
            if not connectable(x, x | undecided):
                return False, False
            if complete and not connectable(x, x):
                complete = False
        for i, j in combinations(range(len(sets)), 2):
            if nb[i] & sets[j]:
                continue
            complete = False
            if not (nb[i] & undecided and nb[j] & undecided):
                return False, False
        return True, complete

    def search(i: int, sets: list[int], undecided: int) -> Optional[list[int]]:
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise _Timeout
        ok, complete = viable(sets, undecided)
        if complete:
            return list(sets)
        if not ok or i == len(order):
            return None
        bit = 1 << order[i]
        rest = undecided & ~bit
        for j in range(len(sets)):
            sets[j] |= bit
            found = search(i + 1, sets, rest)
            sets[j] &= ~bit
            if found is not None:
                return found
        if len(sets) < k:
            sets.append(bit)
            found = search(i + 1, sets, rest)
            sets.pop()
            if found is not None:
                return found
        return search(i + 1, sets, rest)

    if sys.getrecursionlimit() < len(order) + 200:
        sys.setrecursionlimit(len(order) + 200)
    found = search(0, [], sum(1 << v for v in comp))
    return found, expansions


def min_defect(g: Graph, parts_count: int, max_vertices: int = DEFAULT_DEFECT_CAP) -> int:
    """Least d such that the vertices split into ``parts_count`` (possibly
    empty) sets each inducing maximum degree at most d.

    Exhaustive branch and bound: parts are opened in vertex order, so the
    first vertex always lands in part 0, and a branch is dropped as soon as
    its partial maximum induced degree reaches the best value found.
    """
    if parts_count < 1:
        raise ValueError(f"parts_count must be positive, got {parts_count}")
    verts = g.vertices()
    n = len(verts)
    if n > max_vertices:
        raise OracleGuardError(f"{n} vertices exceeds the exhaustive-search cap {max_vertices}")
    if n == 0:
        return 0

    order = sorted(verts, key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[pos[u] for u in g.neighbors(v) if pos[u] < i] for i, v in enumerate(order)]
    part = [-1] * n
    indeg = [0] * n
    best = g.max_degree()  # everything in one part

    def search(i: int, used: int, current: int) -> None:
        nonlocal best
        if i == n:
            best = current
            return
        for c in range(min(used + 1, parts_count)):
            same = [j for j in earlier[i] if part[j] == c]
            worst = max(current, len(same), *(indeg[j] + 1 for j in same))
            if worst >= best:
                continue
            part[i] = c
            indeg[i] = len(same)
            for j in same:
                indeg[j] += 1
            search(i + 1, max(used, c + 1), worst)
            for j in same:
                indeg[j] -= 1
            part[i] = -1
            if best == 0:
                return

    if best > 0 and parts_count > 1:
        search(0, 0, 0)
    return best
