"""Constructors for the puzzle family catalog.

Families: k-ary n-dimensional grids with optional per-axis torus wrap and
Moore-neighborhood (diagonal) adjacency, masked sub-shapes, triangular and
hexagonal lattices (cells are the clickable units), and green/red lamp
colorings that choose which vertices affect themselves.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .graphs import Graph

__all__ = [
    "GridSpec",
    "LampColoring",
    "grid",
    "triangular_lattice",
    "hexagonal_lattice",
    "mask_subgraph",
    "apply_coloring",
    "from_template",
    "FAMILIES",
]

SELF_AFFECT_POLICIES = ("all", "none")


def _normalize_wrap(wrap, ndim: int) -> tuple[bool, ...]:
    if isinstance(wrap, bool):
        return (wrap,) * ndim
    if isinstance(wrap, str):
        key = wrap.strip().lower()
        if key in ("none", ""):
            return (False,) * ndim
        if key in ("all", "both"):
            return (True,) * ndim
        parts = [p.strip() for p in key.split(",")]
        if len(parts) == ndim and all(p in ("0", "1") for p in parts):
            return tuple(p == "1" for p in parts)
        raise ValueError(f"bad wrap spec {wrap!r}")
    wrap = tuple(bool(w) for w in wrap)
    if len(wrap) != ndim:
        raise ValueError(f"wrap has {len(wrap)} entries for {ndim} axes")
    return wrap


@dataclass(frozen=True)
class GridSpec:
    """Parameters of a grid-family puzzle.

    dims: positive extent per axis (the axis count is the dimension).
    wrap: per-axis torus wrap; a bare bool applies to every axis.
    diagonal: use the Moore neighborhood (all cells within Chebyshev
        distance 1) instead of axis-aligned neighbors only.
    self_affect: "all" puts a self-loop on every vertex, "none" on none.
    """

    dims: tuple[int, ...]
    wrap: tuple[bool, ...] = False  # type: ignore[assignment]  # normalized below
    diagonal: bool = False
    self_affect: str = "all"

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        if not dims:
            raise ValueError("grid dims must be non-empty")
        if any(d < 1 for d in dims):
            raise ValueError(f"grid extents must be >= 1, got {dims}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "wrap", _normalize_wrap(self.wrap, len(dims)))
        if self.self_affect not in SELF_AFFECT_POLICIES:
            raise ValueError(f"self_affect must be one of {SELF_AFFECT_POLICIES}")

    @property
    def n_cells(self) -> int:
        return math.prod(self.dims)


@dataclass(frozen=True)
class LampColoring:
    """Green vertices affect themselves; the rest (red) do not."""

    green: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "green", frozenset(self.green))


def _self_loops_for(policy: str, n: int) -> frozenset[int]:
    if policy == "all":
        return frozenset(range(n))
    return frozenset()


def grid(spec: GridSpec) -> Graph:
    """Grid/torus graph over the cells of ``spec.dims``, row-major order.

    Non-diagonal mode connects cells differing by exactly 1 on exactly one
    axis; diagonal mode uses the full Moore neighborhood. Wrapping an axis
    of extent 2 collapses the wrap neighbor onto the direct one (the edge
    set deduplicates), and extent 1 never makes a cell its own neighbor.
    """
    dims = spec.dims
    coords = list(itertools.product(*(range(e) for e in dims)))
    index = {c: i for i, c in enumerate(coords)}

    if spec.diagonal:
        offsets = [
            off
            for off in itertools.product((-1, 0, 1), repeat=len(dims))
            if any(off)
        ]
    else:
        offsets = []
        for axis in range(len(dims)):
            for delta in (-1, 1):
                off = [0] * len(dims)
                off[axis] = delta
                offsets.append(tuple(off))

    edges: set[tuple[int, int]] = set()
    for i, cell in enumerate(coords):
        for off in offsets:
            neighbor = []
            ok = True
            for axis, (x, d) in enumerate(zip(cell, off)):
                y = x + d
                if spec.wrap[axis]:
                    y %= dims[axis]
                elif not 0 <= y < dims[axis]:
                    ok = False
                    break
                neighbor.append(y)
            if not ok:
                continue
            j = index[tuple(neighbor)]
            if j != i:
                edges.add((min(i, j), max(i, j)))

    n = len(coords)
    return Graph(
        n_vertices=n,
        edges=tuple(edges),
        self_loops=_self_loops_for(spec.self_affect, n),
        labels=tuple(coords),
    )


def triangular_lattice(rows: int, self_affect: str = "all") -> Graph:
    """Triangle cells of a triangular arrangement; adjacency = shared edge.

    Row r (0-based) holds 2r+1 cells numbered left to right, upward cells
    at even positions. Each cell touches at most 3 others: its in-row
    neighbors, plus (for an upward cell) the downward cell directly below.
    Labels are centroid (x, y) coordinates, y growing downward.
    """
    if rows < 1:
        raise ValueError(f"rows must be >= 1, got {rows}")
    if self_affect not in SELF_AFFECT_POLICIES:
        raise ValueError(f"self_affect must be one of {SELF_AFFECT_POLICIES}")

    def idx(r: int, p: int) -> int:
        return r * r + p

    height = math.sqrt(3) / 2
    edges: list[tuple[int, int]] = []
    labels: list[tuple[float, float]] = []
    for r in range(rows):
        for p in range(2 * r + 1):
            upward = p % 2 == 0
            x = (p - r) / 2 + 0.5
            y = r * height + (2 * height / 3 if upward else height / 3)
            labels.append((round(x, 6), round(y, 6)))
            if p > 0:
                edges.append((idx(r, p - 1), idx(r, p)))
            if upward and r + 1 < rows:
                edges.append((idx(r, p), idx(r + 1, p + 1)))

    n = rows * rows
    return Graph(
        n_vertices=n,
        edges=tuple(edges),
        self_loops=_self_loops_for(self_affect, n),
        labels=tuple(labels),
    )


_HEX_DIRS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))


def hexagonal_lattice(radius: int, self_affect: str = "all") -> Graph:
    """Hex cells within ``radius`` of a center cell, numbered in a spiral.

    Cells use axial coordinates; neighbors are the six axial directions.
    The spiral starts at the center, and each ring k starts at axial
    (-k, k) walking the directions in order. Labels are pixel (x, y).
    """
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    if self_affect not in SELF_AFFECT_POLICIES:
        raise ValueError(f"self_affect must be one of {SELF_AFFECT_POLICIES}")

    cells: list[tuple[int, int]] = [(0, 0)]
    for k in range(1, radius + 1):
        q, r = -k, k
        for dq, dr in _HEX_DIRS:
            for _ in range(k):
                cells.append((q, r))
                q, r = q + dq, r + dr

    index = {c: i for i, c in enumerate(cells)}
    edges: set[tuple[int, int]] = set()
    for i, (q, r) in enumerate(cells):
        for dq, dr in _HEX_DIRS:
            j = index.get((q + dq, r + dr))
            if j is not None and j != i:
                edges.add((min(i, j), max(i, j)))

    labels = tuple(
        (round(q + r / 2, 6), round(r * math.sqrt(3) / 2, 6)) for q, r in cells
    )
    n = len(cells)
    return Graph(
        n_vertices=n,
        edges=tuple(edges),
        self_loops=_self_loops_for(self_affect, n),
        labels=labels,
    )


def mask_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on ``keep``, renumbered 0.. preserving vertex order."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.n_vertices:
            raise ValueError(f"mask index out of range: {v}")
    remap = {old: new for new, old in enumerate(kept)}
    edges = tuple(
        (remap[i], remap[j]) for i, j in g.edges if i in remap and j in remap
    )
    loops = frozenset(remap[v] for v in g.self_loops if v in remap)
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[v] for v in kept)
    return Graph(n_vertices=len(kept), edges=edges, self_loops=loops, labels=labels)


def apply_coloring(g: Graph, coloring: LampColoring) -> Graph:
    """Replace the self-loop set with the coloring's green set."""
    for v in coloring.green:
        if not 0 <= v < g.n_vertices:
            raise ValueError(f"coloring index out of range: {v}")
    return replace(g, self_loops=coloring.green)


FAMILIES = ("grid", "torus", "triangular", "hexagonal")


def from_template(
    family: str,
    *,
    dims: Sequence[int] | None = None,
    wrap: object = False,
    diagonal: bool = False,
    self_affect: str = "all",
    rows: int | None = None,
    radius: int | None = None,
    mask: Iterable[int] | None = None,
    green: Iterable[int] | None = None,
) -> Graph:
    """Build any catalog family from flat parameters (CLI and service entry).

    "torus" is "grid" with every axis wrapped. ``mask`` keeps an induced
    subgraph; ``green`` recolors the self-loop set. Both apply after the
    base family is built, in that order.
    """
    if family == "grid" or family == "torus":
        if dims is None:
            raise ValueError(f"family {family!r} requires dims")
        if family == "torus":
            wrap = True
        g = grid(GridSpec(dims=tuple(dims), wrap=wrap, diagonal=diagonal,
                          self_affect=self_affect))
    elif family == "triangular":
        if rows is None:
            raise ValueError("family 'triangular' requires rows")
        g = triangular_lattice(rows, self_affect)
    elif family == "hexagonal":
        if radius is None:
            raise ValueError("family 'hexagonal' requires radius")
        g = hexagonal_lattice(radius, self_affect)
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")

    if mask is not None:
        g = mask_subgraph(g, mask)
    if green is not None:
        g = apply_coloring(g, LampColoring(green=frozenset(green)))
    return g
