"""Lights Out laboratory.

Exact F₂ linear algebra on bit-packed matrices, Lights Out puzzles on
arbitrary graphs with optional self-loops, generators for grid, torus,
triangular, and hexagonal boards, and a harness verifying that every
symmetric matrix over F₂ contains its diagonal in its column space
(which is why the self-loop pattern is always reachable from all-off).
"""

from .gf2 import (
    BitVec,
    DimensionError,
    Gf2Matrix,
    SolutionSet,
    nullspace_basis,
    rank,
    rref,
    solution_set,
    solve,
)
from .graphs import Graph, adjacency_matrix, self_loop_vector, validate
from .generators import (
    GridSpec,
    LampColoring,
    apply_coloring,
    from_template,
    grid,
    hexagonal_lattice,
    mask_subgraph,
    triangular_lattice,
)
from .solver import (
    AnalysisReport,
    ClickSet,
    Puzzle,
    SolutionCount,
    analyze,
    apply_clicks,
    count_solutions,
    minimal_clicks,
    solve_corollary_target,
    solve_lights_out,
    solve_to_target,
)
from .theorem import (
    RngSpec,
    TheoremCertificate,
    brute_force_member,
    random_symmetric,
    sweep,
    verify_column_sum_identity,
    verify_diagonal_in_range,
    verify_nullspace_orthogonality,
)
from .documents import (
    DocumentError,
    dump_puzzle,
    from_document,
    parse_puzzle,
    parse_target,
    to_document,
)

__version__ = "0.1.0"

__all__ = [
    "BitVec",
    "DimensionError",
    "Gf2Matrix",
    "SolutionSet",
    "nullspace_basis",
    "rank",
    "rref",
    "solution_set",
    "solve",
    "Graph",
    "adjacency_matrix",
    "self_loop_vector",
    "validate",
    "GridSpec",
    "LampColoring",
    "apply_coloring",
    "from_template",
    "grid",
    "hexagonal_lattice",
    "mask_subgraph",
    "triangular_lattice",
    "AnalysisReport",
    "ClickSet",
    "Puzzle",
    "SolutionCount",
    "analyze",
    "apply_clicks",
    "count_solutions",
    "minimal_clicks",
    "solve_corollary_target",
    "solve_lights_out",
    "solve_to_target",
    "RngSpec",
    "TheoremCertificate",
    "brute_force_member",
    "random_symmetric",
    "sweep",
    "verify_column_sum_identity",
    "verify_diagonal_in_range",
    "verify_nullspace_orthogonality",
    "DocumentError",
    "dump_puzzle",
    "from_document",
    "parse_puzzle",
    "parse_target",
    "to_document",
    "__version__",
]
