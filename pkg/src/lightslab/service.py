"""HTTP session service for interactive play.

Sessions live in memory keyed by random 128-bit hex tokens. Mutations
to one session are serialized by a per-session lock; distinct sessions
never contend. Solver work runs on snapshots outside any lock. When a
state directory is configured, every mutation rewrites that session's
puzzle document on disk.

Endpoints:
    POST /puzzles                    create from document or template
    GET  /puzzles/{id}               full session view
    POST /puzzles/{id}/click         body {"vertex": i}
    POST /puzzles/{id}/undo          re-click the last history entry
    POST /puzzles/{id}/reset         restore the initial state
    GET  /puzzles/{id}/hint          ?target=all-off|all-on|corollary|<bits>
    GET  /puzzles/{id}/consistency   replay history and compare states
    GET  /health
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict

from .documents import DocumentError, dump_puzzle, from_document, parse_target
from .gf2 import BitVec, rank
from .graphs import adjacency_matrix
from .generators import from_template
from .solver import ClickSet, Puzzle, apply_clicks, minimal_clicks

__all__ = ["create_app"]


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class Session:
    id: str
    puzzle: Puzzle
    initial: BitVec
    history: list[int] = field(default_factory=list)
    created_at: str = field(default_factory=_now)
    updated_at: str = field(default_factory=_now)
    lock: threading.Lock = field(default_factory=threading.Lock)


class CreateRequest(BaseModel):
    """Either an inline puzzle document or generator template parameters."""

    model_config = ConfigDict(extra="forbid")

    version: int | None = None
    graph: dict[str, Any] | None = None
    state: str | None = None

    family: str | None = None
    dims: list[int] | None = None
    wrap: bool | list[bool] = False
    diagonal: bool = False
    self_affect: str = "all"
    rows: int | None = None
    radius: int | None = None
    mask: list[int] | None = None
    green: list[int] | None = None


class ClickRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    vertex: int


class SessionView(BaseModel):
    id: str
    n_vertices: int
    edges: list[list[int]]
    self_loops: list[int]
    labels: list[Any] | None
    state: str
    click_history: list[int]
    created_at: str
    updated_at: str


class HintResponse(BaseModel):
    solvable: bool
    clicks: list[int] | None = None
    weight: int | None = None
    nullity: int
    minimal: bool | None = None
    target: str
    updated_at: str


class ConsistencyResponse(BaseModel):
    consistent: bool
    state: str
    replayed: str
    updated_at: str


class HealthResponse(BaseModel):
    status: str
    sessions: int


class SessionStore:
    def __init__(self, state_dir: Path | None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._state_dir = state_dir
        if state_dir is not None:
            state_dir.mkdir(parents=True, exist_ok=True)

    def create(self, puzzle: Puzzle) -> Session:
        session = Session(
            id=secrets.token_hex(16), puzzle=puzzle, initial=puzzle.state
        )
        with self._lock:
            self._sessions[session.id] = session
        self.snapshot(session)
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(404, f"no session {session_id!r}")
        return session

    def count(self) -> int:
        with self._lock:
            return len(self._sessions)

    def snapshot(self, session: Session) -> None:
        if self._state_dir is None:
            return
        path = self._state_dir / f"{session.id}.json"
        path.write_text(dump_puzzle(session.puzzle))


def _labels_json(puzzle: Puzzle) -> list[Any] | None:
    labels = puzzle.graph.labels
    if labels is None:
        return None
    return [list(v) if isinstance(v, tuple) else v for v in labels]


def _view(session: Session) -> SessionView:
    p = session.puzzle
    return SessionView(
        id=session.id,
        n_vertices=p.graph.n_vertices,
        edges=[list(e) for e in p.graph.edges],
        self_loops=sorted(p.graph.self_loops),
        labels=_labels_json(p),
        state=p.state.to01(),
        click_history=list(session.history),
        created_at=session.created_at,
        updated_at=session.updated_at,
    )


def _build_puzzle(body: CreateRequest) -> Puzzle:
    if body.family is not None:
        if body.graph is not None:
            raise ValueError("give either a family or a graph, not both")
        graph = from_template(
            body.family,
            dims=body.dims,
            wrap=body.wrap,
            diagonal=body.diagonal,
            self_affect=body.self_affect,
            rows=body.rows,
            radius=body.radius,
            mask=body.mask,
            green=body.green,
        )
        state = BitVec.zeros(graph.n_vertices)
        if body.state is not None:
            if len(body.state) != graph.n_vertices or any(
                ch not in "01" for ch in body.state
            ):
                raise ValueError(
                    f"state must be a 0/1 string of length {graph.n_vertices}"
                )
            state = BitVec.from01(body.state)
        return Puzzle(graph=graph, state=state)
    if body.graph is not None:
        return from_document(
            {
                "version": body.version if body.version is not None else 1,
                "graph": body.graph,
                "state": body.state
                if body.state is not None
                else "0" * int(body.graph.get("n_vertices", 0)),
            }
        )
    raise ValueError("body must carry either 'family' or 'graph'")


def create_app(
    state_dir: str | Path | None = None, ui_dir: str | Path | None = None
) -> FastAPI:
    """Build the application; state_dir enables per-mutation snapshots."""
    app = FastAPI(title="lightslab")
    store = SessionStore(Path(state_dir) if state_dir is not None else None)

    @app.exception_handler(RequestValidationError)
    async def _invalid_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", sessions=store.count())

    @app.post("/puzzles", response_model=SessionView, status_code=201)
    def create_puzzle(body: CreateRequest) -> SessionView:
        try:
            puzzle = _build_puzzle(body)
        except (ValueError, DocumentError) as exc:
            raise HTTPException(400, str(exc)) from None
        session = store.create(puzzle)
        with session.lock:
            return _view(session)

    @app.get("/puzzles/{session_id}", response_model=SessionView)
    def get_puzzle(session_id: str) -> SessionView:
        session = store.get(session_id)
        with session.lock:
            return _view(session)

    @app.post("/puzzles/{session_id}/click", response_model=SessionView)
    def click(session_id: str, body: ClickRequest) -> SessionView:
        session = store.get(session_id)
        with session.lock:
            n = session.puzzle.graph.n_vertices
            if not 0 <= body.vertex < n:
                raise HTTPException(
                    400, f"vertex must be in [0, {n}), got {body.vertex}"
                )
            clicks = ClickSet(clicks=BitVec.unit(n, body.vertex))
            session.puzzle = apply_clicks(session.puzzle, clicks)
            session.history.append(body.vertex)
            session.updated_at = _now()
            store.snapshot(session)
            return _view(session)

    @app.post("/puzzles/{session_id}/undo", response_model=SessionView)
    def undo(session_id: str) -> SessionView:
        session = store.get(session_id)
        with session.lock:
            if not session.history:
                raise HTTPException(409, "history is empty")
            vertex = session.history.pop()
            n = session.puzzle.graph.n_vertices
            clicks = ClickSet(clicks=BitVec.unit(n, vertex))
            session.puzzle = apply_clicks(session.puzzle, clicks)
            session.updated_at = _now()
            store.snapshot(session)
            return _view(session)

    @app.post("/puzzles/{session_id}/reset", response_model=SessionView)
    def reset(session_id: str) -> SessionView:
        session = store.get(session_id)
        with session.lock:
            session.puzzle = Puzzle(
                graph=session.puzzle.graph, state=session.initial
            )
            session.history.clear()
            session.updated_at = _now()
            store.snapshot(session)
            return _view(session)

    @app.get("/puzzles/{session_id}/hint", response_model=HintResponse)
    def hint(session_id: str, target: str = "all-off") -> HintResponse:
        session = store.get(session_id)
        with session.lock:
            puzzle = session.puzzle
            updated_at = session.updated_at
        try:
            goal = parse_target(puzzle.graph, target)
        except DocumentError as exc:
            raise HTTPException(400, str(exc)) from None
        result = minimal_clicks(puzzle, goal)
        n = puzzle.graph.n_vertices
        nullity = n - rank(adjacency_matrix(puzzle.graph))
        if result is None:
            return HintResponse(
                solvable=False,
                nullity=nullity,
                target=target,
                updated_at=updated_at,
            )
        clicks, minimal = result
        return HintResponse(
            solvable=True,
            clicks=clicks.vertices(),
            weight=clicks.weight,
            nullity=nullity,
            minimal=minimal,
            target=target,
            updated_at=updated_at,
        )

    @app.get(
        "/puzzles/{session_id}/consistency", response_model=ConsistencyResponse
    )
    def consistency(session_id: str) -> ConsistencyResponse:
        session = store.get(session_id)
        with session.lock:
            puzzle = session.puzzle
            initial = session.initial
            history = list(session.history)
            updated_at = session.updated_at
        n = puzzle.graph.n_vertices
        folded = BitVec.zeros(n)
        for vertex in history:
            folded ^= BitVec.unit(n, vertex)
        replayed = apply_clicks(
            Puzzle(graph=puzzle.graph, state=initial), ClickSet(clicks=folded)
        )
        return ConsistencyResponse(
            consistent=replayed.state == puzzle.state,
            state=puzzle.state.to01(),
            replayed=replayed.state.to01(),
            updated_at=updated_at,
        )

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
