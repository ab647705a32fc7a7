"""HTTP service wrapping the solver: one-shot solves, bench runs, and live
incremental sessions keyed by id."""

from __future__ import annotations

import threading
import uuid
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .bench import FamilySpec, render_table, run_family
from .parser import IncrementalParser
from .errors import ParseError
from .runner import CommandResult, RunOptions, Session, run_text


class SolveOptions(BaseModel):
    operator: Literal["collins", "mccallum", "ec-reduced"] = "ec-reduced"
    order: Optional[list[str]] = None
    mode: Literal["auto", "sat", "decide"] = "auto"
    product_ec: bool = False
    cell_cap: int = Field(default=10 ** 6, ge=1)
    time_cap_s: Optional[float] = Field(default=None, gt=0)
    model_digits: int = Field(default=6, ge=1, le=50)
    stats: bool = False

    def to_run_options(self) -> RunOptions:
        return RunOptions(
            operator=self.operator,
            order=self.order,
            mode=self.mode,
            product_ec=self.product_ec,
            cell_cap=self.cell_cap,
            time_cap_s=self.time_cap_s,
            model_digits=self.model_digits,
            stats=self.stats,
        )


class SolveRequest(BaseModel):
    script: str
    options: SolveOptions = SolveOptions()


class CommandResultModel(BaseModel):
    index: int
    command: str
    kind: str
    text: str
    data: dict

    @classmethod
    def from_result(cls, r: CommandResult) -> "CommandResultModel":
        return cls(index=r.index, command=r.command, kind=r.kind, text=r.text, data=r.data)


class SolveResponse(BaseModel):
    results: list[CommandResultModel]
    exit_code: int


class BenchRequest(BaseModel):
    vars: int = Field(default=2, ge=1, le=4)
    degree: int = Field(default=2, ge=1, le=4)
    constraints: list[int] = Field(default_factory=lambda: [3, 4, 5])
    ecs: int = Field(default=1, ge=0)
    seeds: int = Field(default=5, ge=0)
    operators: list[Literal["collins", "mccallum", "ec-reduced"]] = Field(
        default_factory=lambda: ["mccallum", "ec-reduced"]
    )
    cells: bool = True
    times: bool = False


class BenchResponse(BaseModel):
    rows: list[dict]
    table: str


class SessionCreate(BaseModel):
    options: SolveOptions = SolveOptions()


class SessionInfo(BaseModel):
    session_id: str


class SessionCommand(BaseModel):
    command: str


class _LiveSession:
    def __init__(self, options: SolveOptions):
        self.session = Session(options.to_run_options())
        self.parser = IncrementalParser()
        self.lock = threading.Lock()
        self.counter = 0


def create_app() -> FastAPI:
    app = FastAPI(
        title="realcad",
        version=__version__,
        description="Exact cylindrical-decomposition solver for nonlinear real "
                    "arithmetic with equation-aware reduced projection and "
                    "incremental solving.",
    )
    sessions: dict = {}

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/solve", response_model=SolveResponse)
    def solve(request: SolveRequest) -> SolveResponse:
        results, exit_code = run_text(request.script, request.options.to_run_options())
        return SolveResponse(
            results=[CommandResultModel.from_result(r) for r in results],
            exit_code=exit_code,
        )

    @app.post("/bench", response_model=BenchResponse)
    def bench(request: BenchRequest) -> BenchResponse:
        specs = [
            FamilySpec(request.vars, request.degree, n, request.ecs, seed)
            for n in request.constraints
            for seed in range(request.seeds)
        ]
        rows = run_family(specs, list(request.operators), with_cells=request.cells)
        return BenchResponse(rows=rows, table=render_table(rows, with_time=request.times))

    @app.post("/sessions", response_model=SessionInfo)
    def create_session(request: SessionCreate = SessionCreate()) -> SessionInfo:
        sid = uuid.uuid4().hex
        sessions[sid] = _LiveSession(request.options)
        return SessionInfo(session_id=sid)

    def _live(sid: str) -> _LiveSession:
        live = sessions.get(sid)
        if live is None:
            raise HTTPException(status_code=404, detail=f"unknown session {sid}")
        return live

    @app.post("/sessions/{sid}/command", response_model=SolveResponse)
    def session_command(sid: str, request: SessionCommand) -> SolveResponse:
        live = _live(sid)
        with live.lock:
            try:
                commands = live.parser.feed(request.command)
            except ParseError as e:
                result = CommandResult(live.counter, "parse", "error",
                                       f'(error "{e}")', {"error": str(e)})
                live.session.any_error = True
                return SolveResponse(
                    results=[CommandResultModel.from_result(result)],
                    exit_code=live.session.exit_code(),
                )
            results = []
            for cmd in commands:
                results.append(live.session.execute(cmd, live.counter))
                live.counter += 1
            return SolveResponse(
                results=[CommandResultModel.from_result(r) for r in results],
                exit_code=live.session.exit_code(),
            )

    @app.get("/sessions/{sid}/stats")
    def session_stats(sid: str) -> dict:
        live = _live(sid)
        with live.lock:
            state = live.session.state
            if state is None:
                return {"built": False}
            return {"built": True, "stats": state.stats.snapshot(state)}

    @app.delete("/sessions/{sid}")
    def delete_session(sid: str) -> dict:
        if sid not in sessions:
            raise HTTPException(status_code=404, detail=f"unknown session {sid}")
        del sessions[sid]
        return {"deleted": sid}

    return app


app = create_app()
