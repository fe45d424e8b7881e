"""Executable forms of the edge-density inequalities behind the colouring.

Both checkers return the two sides as well as the verdict, so a failing
property test says by how much it failed. The left sides are exact integers
and are compared to the real right sides without any tolerance.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .graph import Graph

__all__ = [
    "InequalityCheck",
    "StableSetWitness",
    "WitnessError",
    "density_bound",
    "density_bound_holds",
    "smallind_holds",
    "random_stable_witness",
]


class WitnessError(ValueError):
    def __init__(self, vertex: int, message: str):
        super().__init__(f"vertex {vertex}: {message}")
        self.vertex = vertex


@dataclass(frozen=True)
class InequalityCheck:
    holds: bool
    lhs: int
    rhs: float

    def as_dict(self) -> dict:
        return {"holds": self.holds, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class StableSetWitness:
    """A stable set ``A`` whose members all have degree at least ``t``."""

    A: frozenset[int]
    t: int

    def validate(self, g: Graph) -> None:
        for v in sorted(self.A):
            if not g.is_live(v):
                raise WitnessError(v, "not a vertex of the graph")
            if g.degree(v) < self.t:
                raise WitnessError(v, f"degree {g.degree(v)} < t={self.t}")
            clash = g.neighbors(v) & self.A
            if clash:
                raise WitnessError(v, f"adjacent to {min(clash)} inside the set; not stable")


def density_bound(t: int, C: float) -> float:
    """Edges-per-vertex bound C (t+1) sqrt(ln(t+1)) for K_{t+1}-minor-free graphs."""
    return C * (t + 1) * math.sqrt(math.log(t + 1))


def density_bound_holds(g: Graph, t: int, C: float) -> InequalityCheck:
    if t < 0 or not C > 0:
        raise ValueError(f"need t >= 0 and C > 0, got t={t}, C={C}")
    lhs = g.m
    rhs = density_bound(t, C) * g.num_vertices
    return InequalityCheck(lhs <= rhs, lhs, rhs)


def smallind_holds(g: Graph, witness: StableSetWitness, r: float) -> InequalityCheck:
    """``|E(G - A)| + |A| <= r |V(G - A)|`` for a validated stable witness A."""
    witness.validate(g)
    a = witness.A
    touching = sum(g.degree(v) for v in a)  # A is stable: no edge counted twice
    lhs = (g.m - touching) + len(a)
    rhs = r * (g.num_vertices - len(a))
    return InequalityCheck(lhs <= rhs, lhs, rhs)


def random_stable_witness(g: Graph, t: int, seed: int) -> Optional[StableSetWitness]:
    """Maximal stable set among the vertices of degree >= t, grown greedily
    in a seeded random order. None when no vertex has degree >= t."""
    pool = [v for v in g.vertices() if g.degree(v) >= t]
    if not pool:
        return None
    random.Random(seed).shuffle(pool)
    chosen: set[int] = set()
    blocked: set[int] = set()
    for v in pool:
        if v not in blocked:
            chosen.add(v)
            blocked |= g.neighbors(v)
    return StableSetWitness(frozenset(chosen), t)
