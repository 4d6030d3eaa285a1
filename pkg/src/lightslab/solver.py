"""Lights Out engine: click evolution, solvability, minimal click sets.

A puzzle is a graph plus a lamp state (1 = on). Clicking vertex v XORs
column v of the adjacency matrix into the state, so a whole click set c
moves the state by A·c and solving "state -> target" means solving
A·x = state ⊕ target over F₂.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitVec, DimensionError, rank, solution_set, solve
from .graphs import Graph, adjacency_matrix, self_loop_vector

__all__ = [
    "Puzzle",
    "ClickSet",
    "AnalysisReport",
    "SolutionCount",
    "apply_clicks",
    "solve_to_target",
    "solve_lights_out",
    "solve_corollary_target",
    "minimal_clicks",
    "analyze",
    "count_solutions",
]

NULLITY_BUDGET_DEFAULT = 20


@dataclass(frozen=True)
class Puzzle:
    graph: Graph
    state: BitVec

    def __post_init__(self) -> None:
        if len(self.state) != self.graph.n_vertices:
            raise DimensionError(
                f"state length {len(self.state)} != "
                f"{self.graph.n_vertices} vertices"
            )

    @classmethod
    def all_off(cls, graph: Graph) -> "Puzzle":
        return cls(graph=graph, state=BitVec.zeros(graph.n_vertices))


@dataclass(frozen=True)
class ClickSet:
    """Vertices to click; clicking twice cancels, so a set suffices."""

    clicks: BitVec

    @property
    def weight(self) -> int:
        return self.clicks.weight

    def vertices(self) -> list[int]:
        return list(self.clicks.support())

    def to01(self) -> str:
        return self.clicks.to01()


def apply_clicks(p: Puzzle, c: ClickSet) -> Puzzle:
    """New puzzle with state ⊕ A·clicks; an involution for fixed clicks."""
    a = adjacency_matrix(p.graph)
    return Puzzle(graph=p.graph, state=p.state ^ a.matvec(c.clicks))


def solve_to_target(p: Puzzle, target: BitVec) -> ClickSet | None:
    """Canonical click set taking p.state to target, or None if out of range.

    Solvability depends only on state ⊕ target, so any common offset to
    both leaves the answer unchanged.
    """
    x = solve(adjacency_matrix(p.graph), p.state ^ target)
    return None if x is None else ClickSet(clicks=x)


def solve_lights_out(p: Puzzle) -> ClickSet | None:
    """Click set reaching all-off, or None when the state is unreachable."""
    return solve_to_target(p, BitVec.zeros(p.graph.n_vertices))


def solve_corollary_target(g: Graph) -> ClickSet:
    """Click set taking all-off to the self-loop pattern.

    The adjacency matrix is symmetric and the self-loop vector is its
    diagonal, which always lies in the range of a symmetric matrix over
    F₂, so this never fails on a valid graph; a miss is a solver bug.
    """
    x = solve(adjacency_matrix(g), self_loop_vector(g))
    if x is None:
        raise RuntimeError(
            "diagonal of a symmetric adjacency matrix fell outside its "
            "range; this indicates an elimination bug"
        )
    return ClickSet(clicks=x)


def minimal_clicks(
    p: Puzzle, target: BitVec, nullity_budget: int = NULLITY_BUDGET_DEFAULT
) -> tuple[ClickSet, bool] | None:
    """Minimum-weight click set for state -> target, or None if unsolvable.

    With nullity k ≤ nullity_budget all 2^k coset members are enumerated
    and the flag is True; ties break toward the lexicographically
    smallest bit pattern (vertex 0 first). Beyond the budget the
    canonical solution is returned with the flag False.
    """
    sols = solution_set(adjacency_matrix(p.graph), p.state ^ target)
    if sols is None:
        return None
    if sols.nullity > nullity_budget:
        return ClickSet(clicks=sols.particular), False
    best: BitVec | None = None
    best_weight = -1
    best_key = ""
    for member in sols.members():
        w = member.weight
        if best is None or w < best_weight:
            best, best_weight, best_key = member, w, member.to01()
        elif w == best_weight:
            key = member.to01()
            if key < best_key:
                best, best_key = member, key
    assert best is not None
    return ClickSet(clicks=best), True


@dataclass(frozen=True)
class AnalysisReport:
    """Reachability summary: 2^rank of 2^n_vertices states are solvable."""

    rank: int
    nullity: int
    n_vertices: int

    @property
    def solvable_fraction(self) -> tuple[int, int]:
        """(rank, n_vertices) as exponents of the fraction 2^rank / 2^n."""
        return (self.rank, self.n_vertices)


def analyze(g: Graph) -> AnalysisReport:
    r = rank(adjacency_matrix(g))
    return AnalysisReport(
        rank=r, nullity=g.n_vertices - r, n_vertices=g.n_vertices
    )


@dataclass(frozen=True)
class SolutionCount:
    """Number of click sets reaching a target, as 2^log2 (0 if unsolvable)."""

    solvable: bool
    log2: int

    @property
    def value(self) -> int:
        return (1 << self.log2) if self.solvable else 0


def count_solutions(p: Puzzle, target: BitVec) -> SolutionCount:
    sols = solution_set(adjacency_matrix(p.graph), p.state ^ target)
    if sols is None:
        return SolutionCount(solvable=False, log2=0)
    return SolutionCount(solvable=True, log2=sols.nullity)
