"""Puzzle file format: JSON with stable key order, states as 0/1 strings.

Layout:
    {
      "version": 1,
      "graph": {
        "n_vertices": 9,
        "edges": [[0, 1], ...],
        "self_loops": [0, 1, ...],
        "labels": [[0, 0], ...]          # optional, null when absent
      },
      "state": "010000000"
    }

Bit i of the state string is vertex i. Parsing validates structure and
graph well-formedness; a well-formed dump always re-parses to an equal
puzzle.
"""

from __future__ import annotations

import json
from typing import Any

from .gf2 import BitVec
from .graphs import Graph, self_loop_vector, validate
from .solver import Puzzle

__all__ = [
    "DOCUMENT_VERSION",
    "DocumentError",
    "to_document",
    "from_document",
    "dump_puzzle",
    "parse_puzzle",
    "parse_target",
]

DOCUMENT_VERSION = 1


class DocumentError(ValueError):
    """Structurally invalid puzzle document."""


def to_document(p: Puzzle) -> dict[str, Any]:
    """Plain-data form of a puzzle, keys in the documented order."""
    g = p.graph
    labels: Any = None
    if g.labels is not None:
        labels = [list(v) if isinstance(v, tuple) else v for v in g.labels]
    return {
        "version": DOCUMENT_VERSION,
        "graph": {
            "n_vertices": g.n_vertices,
            "edges": [list(e) for e in g.edges],
            "self_loops": sorted(g.self_loops),
            "labels": labels,
        },
        "state": p.state.to01(),
    }


def dump_puzzle(p: Puzzle) -> str:
    return json.dumps(to_document(p), indent=2) + "\n"


def _need(obj: dict, key: str, where: str) -> Any:
    if key not in obj:
        raise DocumentError(f"missing key {key!r} in {where}")
    return obj[key]


def _int_list_pairs(value: Any, where: str) -> list[tuple[int, int]]:
    if not isinstance(value, list):
        raise DocumentError(f"{where} must be a list")
    out = []
    for item in value:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise DocumentError(f"{where} entries must be [i, j] integer pairs")
        out.append((item[0], item[1]))
    return out


def from_document(doc: Any) -> Puzzle:
    """Build a puzzle from plain data, rejecting malformed documents."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be an object")
    version = _need(doc, "version", "document")
    if version != DOCUMENT_VERSION:
        raise DocumentError(f"unsupported version {version!r}")
    graph_obj = _need(doc, "graph", "document")
    if not isinstance(graph_obj, dict):
        raise DocumentError("graph must be an object")

    n = _need(graph_obj, "n_vertices", "graph")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DocumentError(f"n_vertices must be a non-negative integer, got {n!r}")
    edges = _int_list_pairs(_need(graph_obj, "edges", "graph"), "edges")

    loops_obj = _need(graph_obj, "self_loops", "graph")
    if not isinstance(loops_obj, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in loops_obj
    ):
        raise DocumentError("self_loops must be a list of integers")

    labels_obj = graph_obj.get("labels")
    labels = None
    if labels_obj is not None:
        if not isinstance(labels_obj, list):
            raise DocumentError("labels must be a list or null")
        if len(labels_obj) != n:
            raise DocumentError(
                f"labels length {len(labels_obj)} != n_vertices {n}"
            )
        labels = tuple(
            tuple(v) if isinstance(v, list) else v for v in labels_obj
        )

    state_obj = _need(doc, "state", "document")
    if not isinstance(state_obj, str):
        raise DocumentError("state must be a 0/1 string")
    if len(state_obj) != n:
        raise DocumentError(f"state length {len(state_obj)} != n_vertices {n}")
    if any(ch not in "01" for ch in state_obj):
        raise DocumentError("state may contain only 0 and 1")

    graph = Graph(
        n_vertices=n,
        edges=tuple(edges),
        self_loops=frozenset(loops_obj),
        labels=labels,
    )
    violations = validate(graph)
    if violations:
        raise DocumentError("; ".join(violations))
    return Puzzle(graph=graph, state=BitVec.from01(state_obj))


def parse_puzzle(text: str) -> Puzzle:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    return from_document(doc)


def parse_target(graph: Graph, raw: str) -> BitVec:
    """Target vocabulary shared by the CLI and the service.

    Accepts "all-off", "all-on", "corollary" (exactly the self-looped
    vertices on), or an explicit 0/1 string of the right length.
    """
    n = graph.n_vertices
    if raw == "all-off":
        return BitVec.zeros(n)
    if raw == "all-on":
        return BitVec.ones(n)
    if raw == "corollary":
        return self_loop_vector(graph)
    if len(raw) == n and all(ch in "01" for ch in raw):
        return BitVec.from01(raw)
    raise DocumentError(
        f"target must be all-off, all-on, corollary, or a 0/1 string of "
        f"length {n}, got {raw!r}"
    )
