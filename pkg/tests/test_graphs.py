"""Graph model: normalization, validation, adjacency construction."""

import pytest

from lightslab.gf2 import DimensionError
from lightslab.graphs import Graph, adjacency_matrix, self_loop_vector, validate


def test_edges_normalize_order():
    g = Graph(n_vertices=3, edges=((2, 0), (1, 0)))
    assert g.edges == ((0, 1), (0, 2))


def test_neighbors():
    g = Graph(n_vertices=4, edges=((0, 1), (1, 2)))
    assert g.neighbors(1) == frozenset({0, 2})
    assert g.neighbors(3) == frozenset()


def test_adjacency_matrix_values():
    g = Graph(n_vertices=3, edges=((0, 1),), self_loops=frozenset({2}))
    a = adjacency_matrix(g)
    assert a.is_symmetric()
    expected = [
        [0, 1, 0],
        [1, 0, 0],
        [0, 0, 1],
    ]
    got = [[a.get(i, j) for j in range(3)] for i in range(3)]
    assert got == expected


def test_diagonal_is_self_loop_vector():
    g = Graph(n_vertices=4, edges=((0, 3),), self_loops=frozenset({0, 2}))
    assert adjacency_matrix(g).diagonal() == self_loop_vector(g)
    assert self_loop_vector(g).to01() == "1010"


def test_empty_graph():
    g = Graph(n_vertices=0)
    assert validate(g) == []
    a = adjacency_matrix(g)
    assert a.n_rows == 0 and a.n_cols == 0
    assert len(self_loop_vector(g)) == 0


def test_validate_clean():
    g = Graph(n_vertices=3, edges=((0, 1), (1, 2)), self_loops=frozenset({0}))
    assert validate(g) == []


def test_validate_reports_all_problems():
    g = Graph(
        n_vertices=2,
        edges=((0, 1), (1, 0), (0, 5), (1, 1)),
        self_loops=frozenset({7}),
        labels=("a",),
    )
    problems = validate(g)
    assert any("duplicate edge" in p for p in problems)
    assert any("out of range" in p and "edge" in p for p in problems)
    assert any("connects vertex to itself" in p for p in problems)
    assert any("self-loop index out of range" in p for p in problems)
    assert any("labels length" in p for p in problems)


def test_validate_negative_vertex_count():
    assert any(
        "negative" in p for p in validate(Graph(n_vertices=-1))
    )


def test_puzzle_state_length_checked():
    from lightslab.gf2 import BitVec
    from lightslab.solver import Puzzle

    g = Graph(n_vertices=3)
    with pytest.raises(DimensionError):
        Puzzle(graph=g, state=BitVec.zeros(2))
