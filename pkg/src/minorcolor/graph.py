"""Simple undirected graphs with stable vertex ids, edge-list I/O and generators.

Vertices are the integers ``0..n-1``. Deleting a vertex tombstones it instead
of renumbering, so ids recorded in a reduction trace stay meaningful for the
lifetime of the graph and of every copy made from it.
"""

from __future__ import annotations

import io
import random
from collections.abc import Iterable, Iterator
from typing import IO, Union

__all__ = [
    "Graph",
    "GraphError",
    "ParseError",
    "SizeGuardError",
    "parse_edge_list",
    "format_edge_list",
    "construct_sharp",
    "sharp_vertex_count",
    "gen_forest",
    "gen_ktree",
    "gen_grid",
    "gen_random",
    "components",
]

DEFAULT_MAX_VERTICES = 10**6


class GraphError(ValueError):
    """Raised for operations on absent vertices or edges, or invalid sizes."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class SizeGuardError(GraphError):
    """Raised when a generator would exceed its configured vertex cap."""


class Graph:
    """Mutable simple graph over the id space ``range(n)``.

    ``n`` is the size of the id space and never changes; ``num_vertices``
    counts the live (non-deleted) vertices.
    """

    __slots__ = ("_adj", "_live", "_m", "_num_live")

    def __init__(self, n: int = 0):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._live = [True] * n
        self._m = 0
        self._num_live = n

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def num_vertices(self) -> int:
        return self._num_live

    def __len__(self) -> int:
        return self._num_live

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, live={self._num_live}, m={self._m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._live == other._live and self._adj == other._adj

    __hash__ = None  # type: ignore[assignment]

    def is_live(self, v: int) -> bool:
        return 0 <= v < len(self._adj) and self._live[v]

    def _require(self, v: int) -> None:
        if not (0 <= v < len(self._adj)):
            raise GraphError(f"vertex {v} out of range 0..{len(self._adj) - 1}")
        if not self._live[v]:
            raise GraphError(f"vertex {v} has been deleted")

    def vertices(self) -> list[int]:
        """Live vertex ids in ascending order."""
        return [v for v, alive in enumerate(self._live) if alive]

    def neighbors(self, v: int) -> frozenset[int]:
        self._require(v)
        return frozenset(self._adj[v])

    def degree(self, v: int) -> int:
        self._require(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return self.is_live(u) and v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in self.vertices() for v in sorted(self._adj[u]) if u < v]

    def max_degree(self) -> int:
        return max((len(self._adj[v]) for v in self.vertices()), default=0)

    def add_edge(self, u: int, v: int) -> None:
        self._require(u)
        self._require(v)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in self._adj[u]:
            raise GraphError(f"duplicate edge {u} {v}")
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m += 1

    def delete_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise GraphError(f"edge {u} {v} is absent")
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._m -= 1

    def delete_vertex(self, v: int) -> None:
        self._require(v)
        for u in self._adj[v]:
            self._adj[u].discard(v)
        self._m -= len(self._adj[v])
        self._adj[v] = set()
        self._live[v] = False
        self._num_live -= 1

    def restore_vertex(self, v: int) -> None:
        """Bring a deleted vertex back, isolated."""
        if not (0 <= v < len(self._adj)) or self._live[v]:
            raise GraphError(f"vertex {v} is not a deleted vertex")
        self._live[v] = True
        self._num_live += 1

    @classmethod
    def tombstoned(cls, n: int) -> Graph:
        """Id space of size n with every vertex deleted."""
        g = cls(n)
        g._live = [False] * n
        g._num_live = 0
        return g

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g._adj = [set(a) for a in self._adj]
        g._live = list(self._live)
        g._m = self._m
        g._num_live = self._num_live
        return g

    def induced_subgraph(self, keep: Iterable[int]) -> Graph:
        """Subgraph induced on ``keep``; every other vertex is tombstoned, ids unchanged."""
        keep = set(keep)
        for v in keep:
            self._require(v)
        g = self.copy()
        for v in self.vertices():
            if v not in keep:
                g.delete_vertex(v)
        return g

    def induced_degrees(self, part: Iterable[int]) -> dict[int, int]:
        """Degree of each vertex of ``part`` inside ``G|part``."""
        part = set(part)
        return {v: len(self._adj[v] & part) for v in part}

    def check_invariants(self) -> None:
        """Full scan of symmetry, loop-freeness, tombstones and the edge count."""
        total = 0
        for v, nbrs in enumerate(self._adj):
            if not self._live[v] and nbrs:
                raise AssertionError(f"deleted vertex {v} still has neighbours")
            if v in nbrs:
                raise AssertionError(f"self-loop at {v}")
            for u in nbrs:
                if not self.is_live(u) or v not in self._adj[u]:
                    raise AssertionError(f"asymmetric adjacency {v}->{u}")
            total += len(nbrs)
        if total != 2 * self._m:
            raise AssertionError(f"cached m={self._m} but degree sum is {total}")
        if self._num_live != sum(self._live):
            raise AssertionError("live-vertex count out of sync")


# --- edge-list text format -------------------------------------------------

Source = Union[str, bytes, IO[str], IO[bytes]]


def _read_text(source: Source) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _int_pair(tokens: list[str], lineno: int) -> tuple[int, int]:
    if len(tokens) != 2:
        raise ParseError(lineno, f"expected two integers, got {len(tokens)} tokens")
    try:
        a, b = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ParseError(lineno, f"non-integer token in {' '.join(tokens)!r}") from None
    if a < 0 or b < 0:
        raise ParseError(lineno, "negative id")
    return a, b


def parse_edge_list(source: Source) -> Graph:
    """Parse the edge-list format: optional ``n m`` header, then one ``u v`` per line.

    Blank lines and lines starting with ``#`` are ignored. The first data line
    is read as a header when it holds two integers and exactly ``m`` edge lines
    follow it; otherwise it is an ordinary edge. Without a header the vertex
    count is one more than the largest id seen.

    Raises ParseError (with the 1-based line number) on self-loops, repeated
    edges, non-integer tokens and ids outside the header's range.
    """
    lines: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(io.StringIO(_read_text(source)), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped.split()))

    n: int | None = None
    if lines:
        lineno, tokens = lines[0]
        first = _int_pair(tokens, lineno)
        if first[1] == len(lines) - 1:
            n = first[0]
            lines = lines[1:]

    pairs = [(_int_pair(tokens, lineno), lineno) for lineno, tokens in lines]
    if n is None:
        n = 1 + max((max(p) for p, _ in pairs), default=-1)

    g = Graph(n)
    for (u, v), lineno in pairs:
        if u >= n or v >= n:
            raise ParseError(lineno, f"id {max(u, v)} not below vertex count {n}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if g.has_edge(u, v):
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        g.add_edge(u, v)
    return g


def format_edge_list(g: Graph) -> str:
    """Header ``n m`` then the edges in lexicographic order, newline-terminated."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


# --- generators ------------------------------------------------------------


def sharp_vertex_count(s: int, t: int) -> int:
    """Number of vertices of G(s, t): ``((s+1)**t - 1) // s``, or ``t`` when s = 0."""
    if s == 0:
        return t
    return ((s + 1) ** t - 1) // s


def construct_sharp(s: int, t: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Build the graph G(s, t) that has no K_{t+1} minor yet admits no partition
    into t-1 parts of induced maximum degree at most s.

    G(s, 1) is a single vertex. G(s, t) is s+1 disjoint copies of G(s, t-1),
    laid out consecutively from id 0, plus an apex (the last id) joined to
    every other vertex.
    """
    if s < 0:
        raise GraphError(f"s must be non-negative, got {s}")
    if t < 1:
        raise GraphError(f"t must be at least 1, got {t}")
    n = sharp_vertex_count(s, t)
    if n > max_vertices:
        raise SizeGuardError(f"G({s},{t}) has {n} vertices, above the cap {max_vertices}")

    edges: list[tuple[int, int]] = []
    size = 1
    for _ in range(2, t + 1):
        block = list(edges)
        edges = [(u + i * size, v + i * size) for i in range(s + 1) for u, v in block]
        apex = (s + 1) * size
        edges.extend((u, apex) for u in range(apex))
        size = apex + 1
    assert size == n
    return Graph.from_edges(n, edges)


def gen_forest(n: int, seed: int, attach_prob: float = 0.9) -> Graph:
    """Random forest: vertex i > 0 joins a uniformly random earlier vertex
    with probability ``attach_prob`` and otherwise starts a new tree."""
    if n < 0:
        raise GraphError(f"n must be non-negative, got {n}")
    rng = random.Random(seed)
    g = Graph(n)
    for v in range(1, n):
        if rng.random() < attach_prob:
            g.add_edge(rng.randrange(v), v)
    return g


def gen_ktree(n: int, k: int, seed: int) -> Graph:
    """Random k-tree on n vertices: K_{k+1} on ids 0..k, then each new vertex
    is joined to a uniformly chosen existing k-clique."""
    if k < 0:
        raise GraphError(f"k must be non-negative, got {k}")
    if n < k + 1:
        raise GraphError(f"a {k}-tree needs at least {k + 1} vertices, got n={n}")
    rng = random.Random(seed)
    g = Graph(n)
    for u in range(k + 1):
        for v in range(u + 1, k + 1):
            g.add_edge(u, v)
    base = tuple(range(k + 1))
    cliques = [base[:i] + base[i + 1 :] for i in range(k + 1)]
    for v in range(k + 1, n):
        clique = cliques[rng.randrange(len(cliques))]
        for u in clique:
            g.add_edge(u, v)
        cliques.extend(clique[:i] + clique[i + 1 :] + (v,) for i in range(k))
    return g


def gen_grid(w: int, h: int) -> Graph:
    """The w x h grid; vertex (x, y) has id ``y * w + x``."""
    if w < 0 or h < 0:
        raise GraphError(f"grid sides must be non-negative, got {w}x{h}")
    g = Graph(w * h)
    for y in range(h):
        for x in range(w):
            v = y * w + x
            if x + 1 < w:
                g.add_edge(v, v + 1)
            if y + 1 < h:
                g.add_edge(v, v + w)
    return g


def gen_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), pairs visited in lexicographic order."""
    if n < 0:
        raise GraphError(f"n must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def components(g: Graph, within: Iterable[int] | None = None) -> Iterator[set[int]]:
    """Connected components of ``g`` (or of the subgraph induced on ``within``)."""
    allowed = set(g.vertices()) if within is None else set(within)
    seen: set[int] = set()
    for root in sorted(allowed):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g._adj[x]:
                if y in allowed and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        yield comp
