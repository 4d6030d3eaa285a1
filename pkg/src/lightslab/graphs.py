"""Undirected graphs with optional self-loops, and their GF(2) adjacency.

A vertex with a self-loop toggles its own lamp when clicked (the "green"
lamps); one without only toggles its neighbors ("red"). Self-loops are kept
in a separate set rather than as edges, so the edge list always describes a
simple graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .gf2 import BitVec, Gf2Matrix

__all__ = ["Graph", "adjacency_matrix", "self_loop_vector", "validate"]

Label = Any  # display string or coordinate tuple; never affects the math


@dataclass(frozen=True)
class Graph:
    """Immutable puzzle topology.

    Edge pairs are normalized to (small, large) and sorted; duplicates and
    out-of-range indices are representable so that ``validate`` can report
    them instead of the constructor exploding on untrusted input.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...] = ()
    self_loops: frozenset[int] = frozenset()
    labels: tuple[Label, ...] | None = None

    def __post_init__(self) -> None:
        pairs = tuple(sorted((min(i, j), max(i, j)) for i, j in self.edges))
        object.__setattr__(self, "edges", pairs)
        object.__setattr__(self, "self_loops", frozenset(self.self_loops))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    def neighbors(self, v: int) -> frozenset[int]:
        out = set()
        for i, j in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return frozenset(out)


def adjacency_matrix(g: Graph) -> Gf2Matrix:
    """Symmetric N×N matrix: a[i][j]=1 iff {i,j} is an edge, a[k][k]=1 iff
    k has a self-loop. The diagonal is exactly the self-loop indicator."""
    rows = [0] * g.n_vertices
    for i, j in g.edges:
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    for k in g.self_loops:
        rows[k] |= 1 << k
    return Gf2Matrix._raw(g.n_vertices, g.n_vertices, tuple(rows))


def self_loop_vector(g: Graph) -> BitVec:
    """Indicator of the self-looped vertices; the guaranteed-reachable
    target state of the corollary."""
    return BitVec.from_indices(g.n_vertices, g.self_loops)


def validate(g: Graph) -> list[str]:
    """Check the Graph invariants; empty list means well-formed."""
    problems: list[str] = []
    if g.n_vertices < 0:
        problems.append(f"n_vertices is negative: {g.n_vertices}")
    seen: set[tuple[int, int]] = set()
    for i, j in g.edges:
        if i == j:
            problems.append(f"edge connects vertex to itself: ({i}, {j}); use self_loops")
            continue
        if not (0 <= i < g.n_vertices and 0 <= j < g.n_vertices):
            problems.append(f"edge endpoint out of range: ({i}, {j})")
            continue
        if (i, j) in seen:
            problems.append(f"duplicate edge: ({i}, {j})")
        seen.add((i, j))
    for v in sorted(g.self_loops):
        if not 0 <= v < g.n_vertices:
            problems.append(f"self-loop index out of range: {v}")
    if g.labels is not None and len(g.labels) != g.n_vertices:
        problems.append(
            f"labels length {len(g.labels)} != n_vertices {g.n_vertices}"
        )
    return problems
