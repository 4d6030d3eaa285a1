"""Family generators: counts, wrap and diagonal semantics, masks, colorings."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lightslab.generators import (
    GridSpec,
    LampColoring,
    apply_coloring,
    from_template,
    grid,
    hexagonal_lattice,
    mask_subgraph,
    triangular_lattice,
)
from lightslab.graphs import adjacency_matrix, self_loop_vector, validate

from _naive import classic_grid_rows


# -- grids --------------------------------------------------------------------


def test_grid_3x3_counts():
    g = grid(GridSpec(dims=(3, 3)))
    assert g.n_vertices == 9
    assert len(g.edges) == 12
    assert g.self_loops == frozenset(range(9))


def test_grid_matches_coordinate_oracle():
    # closed-neighborhood matrix derived purely from coordinate arithmetic
    for h, w in ((1, 1), (2, 3), (3, 3), (4, 2)):
        g = grid(GridSpec(dims=(h, w)))
        a = adjacency_matrix(g)
        expected = classic_grid_rows(h, w)
        got = [
            [a.get(i, j) for j in range(h * w)] for i in range(h * w)
        ]
        assert got == expected


def test_grid_row_major_labels():
    g = grid(GridSpec(dims=(2, 3)))
    assert g.labels == ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2))


def test_grid_self_none():
    g = grid(GridSpec(dims=(2, 2), self_affect="none"))
    assert g.self_loops == frozenset()
    assert len(g.edges) == 4


def test_torus_edge_counts():
    # wrap adds one edge per axis line; extent-2 wrap collapses onto the
    # direct neighbor and extent-1 wrap adds nothing
    assert len(grid(GridSpec(dims=(3, 3), wrap=True)).edges) == 18
    assert len(grid(GridSpec(dims=(2, 2), wrap=True)).edges) == 4
    assert len(grid(GridSpec(dims=(5, 5), wrap=True)).edges) == 50
    assert len(grid(GridSpec(dims=(1, 4), wrap=True)).edges) == 4


def test_per_axis_wrap():
    g = grid(GridSpec(dims=(3, 3), wrap=(True, False)))
    # vertical cylinder: 9 rows-axis edges (wrapped) + 6 unwrapped
    assert len(g.edges) == 15


def test_diagonal_grid_is_moore():
    g = grid(GridSpec(dims=(3, 3), diagonal=True))
    assert len(g.edges) == 20
    center = g.neighbors(4)
    assert center == frozenset({0, 1, 2, 3, 5, 6, 7, 8})


def test_one_dimensional_grid():
    g = grid(GridSpec(dims=(5,)))
    assert g.n_vertices == 5 and len(g.edges) == 4


def test_three_dimensional_grid():
    g = grid(GridSpec(dims=(2, 2, 2)))
    assert g.n_vertices == 8 and len(g.edges) == 12


def test_grid_rejects_bad_extents():
    with pytest.raises(ValueError):
        GridSpec(dims=(0, 3))
    with pytest.raises(ValueError):
        GridSpec(dims=())
    with pytest.raises(ValueError):
        GridSpec(dims=(2, 2), self_affect="some")
    with pytest.raises(ValueError):
        GridSpec(dims=(2, 2), wrap=(True,))


# -- triangular ---------------------------------------------------------------


def test_triangular_counts():
    g2 = triangular_lattice(2)
    assert g2.n_vertices == 4 and len(g2.edges) == 3
    g3 = triangular_lattice(3)
    assert g3.n_vertices == 9 and len(g3.edges) == 9
    g4 = triangular_lattice(4)
    assert g4.n_vertices == 16 and len(g4.edges) == 18


def test_triangular_adjacency_shape():
    g = triangular_lattice(3)
    # cell (1,1) points down: neighbors are (1,0), (1,2) in-row and (0,0) above
    assert g.neighbors(2) == frozenset({1, 3, 0})
    assert validate(g) == []
    assert adjacency_matrix(g).is_symmetric()


def test_triangular_rejects_bad_rows():
    with pytest.raises(ValueError):
        triangular_lattice(0)


# -- hexagonal ----------------------------------------------------------------


def test_hexagonal_counts():
    g0 = hexagonal_lattice(0)
    assert g0.n_vertices == 1 and len(g0.edges) == 0
    g1 = hexagonal_lattice(1)
    assert g1.n_vertices == 7 and len(g1.edges) == 12
    g2 = hexagonal_lattice(2)
    assert g2.n_vertices == 19 and len(g2.edges) == 42


def test_hexagonal_center_touches_whole_first_ring():
    g = hexagonal_lattice(1)
    assert g.neighbors(0) == frozenset(range(1, 7))
    assert validate(g) == []


def test_hexagonal_rejects_negative():
    with pytest.raises(ValueError):
        hexagonal_lattice(-1)


# -- masks and colorings --------------------------------------------------------


def test_plus_mask_of_3x3():
    g = grid(GridSpec(dims=(3, 3)))
    plus = mask_subgraph(g, [1, 3, 4, 5, 7])
    assert plus.n_vertices == 5
    assert len(plus.edges) == 4
    assert plus.self_loops == frozenset(range(5))
    # renumbering preserves vertex order: old 4 (center) becomes 2
    assert plus.neighbors(2) == frozenset({0, 1, 3, 4})


def test_mask_keeps_labels():
    g = grid(GridSpec(dims=(2, 2)))
    sub = mask_subgraph(g, [0, 3])
    assert sub.labels == ((0, 0), (1, 1))
    assert sub.edges == ()


def test_mask_out_of_range():
    g = grid(GridSpec(dims=(2, 2)))
    with pytest.raises(ValueError):
        mask_subgraph(g, [0, 4])


def test_apply_coloring():
    g = grid(GridSpec(dims=(2, 2)))
    colored = apply_coloring(g, LampColoring(green=frozenset({0, 3})))
    assert colored.self_loops == frozenset({0, 3})
    assert colored.edges == g.edges
    with pytest.raises(ValueError):
        apply_coloring(g, LampColoring(green=frozenset({9})))


# -- template entry point --------------------------------------------------------


def test_from_template_families():
    assert from_template("grid", dims=(3, 3)).n_vertices == 9
    assert len(from_template("torus", dims=(5, 5)).edges) == 50
    assert from_template("triangular", rows=2).n_vertices == 4
    assert from_template("hexagonal", radius=1).n_vertices == 7


def test_from_template_mask_and_green():
    g = from_template("grid", dims=(3, 3), mask=(1, 3, 4, 5, 7), green=(2,))
    assert g.n_vertices == 5
    assert g.self_loops == frozenset({2})


def test_from_template_errors():
    with pytest.raises(ValueError):
        from_template("grid")
    with pytest.raises(ValueError):
        from_template("triangular")
    with pytest.raises(ValueError):
        from_template("hexagonal")
    with pytest.raises(ValueError):
        from_template("klein-bottle", dims=(2, 2))


# -- properties over the whole catalog ----------------------------------------


@given(
    st.integers(1, 4),
    st.integers(1, 4),
    st.booleans(),
    st.booleans(),
    st.booleans(),
    st.sampled_from(["all", "none"]),
)
def test_every_grid_is_well_formed(h, w, wrap_r, wrap_c, diagonal, self_affect):
    g = grid(
        GridSpec(
            dims=(h, w),
            wrap=(wrap_r, wrap_c),
            diagonal=diagonal,
            self_affect=self_affect,
        )
    )
    assert validate(g) == []
    a = adjacency_matrix(g)
    assert a.is_symmetric()
    expected_loops = frozenset(range(h * w)) if self_affect == "all" else frozenset()
    assert g.self_loops == expected_loops
    assert a.diagonal() == self_loop_vector(g)


@given(st.integers(1, 5))
def test_triangular_well_formed(rows):
    g = triangular_lattice(rows)
    assert validate(g) == []
    assert g.n_vertices == rows * rows
    assert adjacency_matrix(g).is_symmetric()
    # interior sharing: 3 edges per downward triangle
    downward = sum(
        1 for r in range(rows) for p in range(2 * r + 1) if p % 2 == 1
    )
    assert len(g.edges) == 3 * downward


@given(st.integers(0, 3))
def test_hexagonal_well_formed(radius):
    g = hexagonal_lattice(radius)
    assert validate(g) == []
    assert g.n_vertices == 1 + 3 * radius * (radius + 1)
    assert adjacency_matrix(g).is_symmetric()


def test_lattice_labels_are_distinct_points():
    for g in (triangular_lattice(4), hexagonal_lattice(2)):
        assert g.labels is not None
        assert len(set(g.labels)) == g.n_vertices
        for x, y in g.labels:
            assert math.isfinite(x) and math.isfinite(y)
