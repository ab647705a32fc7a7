"""Script execution: a live solver session behind the command surface.

Assertions map onto the incremental engine (push/pop become constraint
addition and removal on the live state), verdict lines are exactly
sat/unsat/true/false, and get-model prints each coordinate as an exact
certificate (defining polynomial plus isolating interval) together with a
decimal enclosure of configurable width.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Optional

from .engine import BuildOptions, SolverState, build
from .errors import BudgetExceededError, ParseError, RealCADError, SolverUsageError
from .formula import And, Atom, EXISTS, FORALL, FREE, Formula, atoms as formula_atoms, map_atoms
from .parser import (
    AssertCommand,
    CheckSat,
    Command,
    Decide,
    DeclareVar,
    Exit,
    GetCells,
    GetModel,
    IncrementalParser,
    Pop,
    Push,
    Script,
    SetOption,
    parse,
)
from .poly import format_poly, rename_variables
from .realalg import AlgebraicNumber, decimal_enclosure

VERDICT_EXIT = {"sat": 0, "true": 0, "unsat": 1, "false": 1}


@dataclass
class RunOptions:
    operator: str = "ec-reduced"
    order: Optional[list] = None
    mode: str = "auto"  # auto | sat | decide
    product_ec: bool = False
    cell_cap: int = 10 ** 6
    time_cap_s: Optional[float] = None
    model_digits: int = 6
    stats: bool = False


@dataclass
class CommandResult:
    index: int
    command: str
    kind: str  # verdict | model | cells | ok | error
    text: str
    data: dict = field(default_factory=dict)


@dataclass
class _AssertRecord:
    node: object
    cids: Optional[list] = None


class Session:
    """One live solver session over a sequence of commands."""

    def __init__(self, options: Optional[RunOptions] = None):
        self.options = options or RunOptions()
        self.free_names: list = []
        self.binders: list = []  # (quantifier, name)
        self.frames: list = [[]]
        self.state: Optional[SolverState] = None
        self.last_witness = None
        self.any_error = False
        self.any_budget = False
        self.last_verdict: Optional[str] = None
        self._stopped = False

    # -- naming / ordering ----------------------------------------------------

    def _ordered_free(self) -> list:
        if self.options.order is None:
            return list(self.free_names)
        wanted = list(self.options.order)
        if sorted(wanted) != sorted(self.free_names):
            raise SolverUsageError(
                f"--order must list exactly the declared variables {self.free_names}"
            )
        return wanted

    def var_names(self) -> list:
        return self._ordered_free() + [n for _, n in self.binders]

    def _index_mapping(self) -> dict:
        declared = self.free_names + [n for _, n in self.binders]
        target = self.var_names()
        return {i: target.index(name) for i, name in enumerate(declared)}

    # -- state construction ------------------------------------------------------

    def _records(self) -> list:
        return [r for frame in self.frames for r in frame]

    def _ensure_state(self) -> SolverState:
        if self.state is not None:
            return self.state
        names = self.var_names()
        if not names:
            raise SolverUsageError("no variables declared")
        prefix = (FREE,) * len(self._ordered_free()) + tuple(
            FORALL if q == "forall" else EXISTS for q, _ in self.binders
        )
        mapping = self._index_mapping()
        identity = all(k == v for k, v in mapping.items())
        records = self._records()
        nodes = []
        for record in records:
            node = record.node
            if not identity:
                node = map_atoms(node, lambda a: Atom(rename_variables(a.poly, mapping), a.rel))
            nodes.append(node)
        matrix = None
        if nodes:
            matrix = nodes[0] if len(nodes) == 1 else And(nodes)
        formula = Formula(prefix, matrix)
        self.state = build(
            formula,
            BuildOptions(
                policy=self.options.operator,
                product_ec=self.options.product_ec,
                cell_cap=self.options.cell_cap,
                time_cap_s=self.options.time_cap_s,
            ),
        )
        cid = 0
        for record in records:
            count = sum(1 for _ in formula_atoms(record.node))
            record.cids = list(range(cid, cid + count))
            cid += count
        return self.state

    # -- command execution -----------------------------------------------------------

    def run(self, commands: list) -> list:
        results = []
        for i, cmd in enumerate(commands):
            if self._stopped:
                break
            results.append(self.execute(cmd, i))
        return results

    def execute(self, cmd: Command, index: int = 0) -> CommandResult:
        name = type(cmd).__name__
        try:
            return self._dispatch(cmd, index)
        except BudgetExceededError as e:
            self.any_budget = True
            return self._error(index, name, str(e), budget=True)
        except (RealCADError, ValueError) as e:
            return self._error(index, name, str(e))

    def _error(self, index: int, command: str, message: str, budget: bool = False) -> CommandResult:
        self.any_error = True
        data = {"command": command, "error": message}
        if budget:
            data["budget"] = True
        return CommandResult(index, command, "error", f'(error "{message}")', data)

    def _dispatch(self, cmd: Command, index: int) -> CommandResult:
        if isinstance(cmd, DeclareVar):
            if self.state is not None:
                raise SolverUsageError("declarations must precede the first check")
            if cmd.name in self.free_names or any(n == cmd.name for _, n in self.binders):
                raise SolverUsageError(f"variable {cmd.name!r} already declared")
            self.free_names.append(cmd.name)
            return self._ok(index, "declare")
        if isinstance(cmd, AssertCommand):
            return self._do_assert(cmd, index)
        if isinstance(cmd, Push):
            for _ in range(cmd.count):
                self.frames.append([])
            return self._ok(index, "push")
        if isinstance(cmd, Pop):
            return self._do_pop(cmd, index)
        if isinstance(cmd, (CheckSat, Decide)):
            return self._do_check(cmd, index)
        if isinstance(cmd, GetModel):
            return self._do_model(index)
        if isinstance(cmd, GetCells):
            return self._do_cells(index)
        if isinstance(cmd, SetOption):
            return self._do_option(cmd, index)
        if isinstance(cmd, Exit):
            self._stopped = True
            return self._ok(index, "exit")
        raise SolverUsageError(f"unsupported command {type(cmd).__name__}")

    def _ok(self, index: int, command: str) -> CommandResult:
        return CommandResult(index, command, "ok", "", {"command": command, "ok": True})

    def _do_assert(self, cmd: AssertCommand, index: int) -> CommandResult:
        if cmd.binders:
            if self._records() or self.state is not None:
                raise SolverUsageError(
                    "a quantified assertion must be the only assertion"
                )
            self.binders = list(cmd.binders)
            self.frames[-1].append(_AssertRecord(cmd.node))
            return self._ok(index, "assert")
        if self.binders:
            raise SolverUsageError("cannot mix quantified and free assertions")
        record = _AssertRecord(cmd.node)
        self.frames[-1].append(record)
        if self.state is not None:
            mapping = self._index_mapping()
            node = cmd.node
            if not all(k == v for k, v in mapping.items()):
                node = map_atoms(node, lambda a: Atom(rename_variables(a.poly, mapping), a.rel))
            record.cids = self.state.add_node(node)
        return self._ok(index, "assert")

    def _do_pop(self, cmd: Pop, index: int) -> CommandResult:
        for _ in range(cmd.count):
            if len(self.frames) <= 1:
                raise SolverUsageError("pop without matching push")
            records = self.frames.pop()
            if self.state is not None:
                cids = [c for r in records for c in (r.cids or [])]
                if cids:
                    self.state.remove_many(cids)
        return self._ok(index, "pop")

    def _do_check(self, cmd: Command, index: int) -> CommandResult:
        state = self._ensure_state()
        quantified = bool(self.binders)
        mode = self.options.mode
        if isinstance(cmd, Decide) or (mode == "decide"):
            if not quantified:
                raise SolverUsageError("decide needs a fully quantified formula")
            verdict = state.decide()
        elif quantified:
            if mode == "sat":
                raise SolverUsageError("check-sat in sat mode needs a quantifier-free formula")
            verdict = state.decide()
        else:
            verdict = state.check_sat()
        self.last_verdict = verdict.kind
        self.last_witness = verdict.witness
        data = {"command": "decide" if isinstance(cmd, Decide) else "check-sat",
                "result": verdict.kind}
        text = verdict.kind
        if self.options.stats:
            data["stats"] = verdict.stats
            text = f"{verdict.kind}\n{json.dumps(verdict.stats, sort_keys=True)}"
        return CommandResult(index, data["command"], "verdict", text, data)

    def _format_coordinate(self, name: str, value: AlgebraicNumber):
        digits = self.options.model_digits
        if value.is_exact:
            text = f"({name} = {value.exact})"
            return text, {"var": name, "value": str(value.exact)}
        lo_dec, hi_dec = decimal_enclosure(value, digits)
        defining = format_poly(value.defining_as(0), [name])
        text = (
            f"({name} = root of {defining} in ({value.lo}, {value.hi})"
            f" ~ [{lo_dec}, {hi_dec}])"
        )
        doc = {
            "var": name,
            "defining": defining,
            "interval": [str(value.lo), str(value.hi)],
            "enclosure": [lo_dec, hi_dec],
        }
        return text, doc

    def _do_model(self, index: int) -> CommandResult:
        if self.last_verdict != "sat" or self.last_witness is None:
            raise SolverUsageError("no model available (last check was not sat)")
        names = self.var_names()
        lines = ["(model"]
        assignments = []
        for i, coord in enumerate(self.last_witness.coords):
            text, doc = self._format_coordinate(names[i], coord)
            lines.append(f"  {text}")
            assignments.append(doc)
        lines.append(")")
        return CommandResult(
            index, "get-model", "model", "\n".join(lines),
            {"command": "get-model", "model": assignments},
        )

    def _do_cells(self, index: int) -> CommandResult:
        state = self._ensure_state()
        if self.binders:
            raise SolverUsageError("get-cells needs a quantifier-free formula")
        names = self.var_names()
        cells = state.true_cells()
        lines = ["(cells"]
        docs = []
        for cell_index, sample in cells:
            parts = []
            doc_coords = []
            for i, coord in enumerate(sample.coords):
                text, doc = self._format_coordinate(names[i], coord)
                parts.append(text)
                doc_coords.append(doc)
            index_s = "(" + " ".join(str(i) for i in cell_index) + ")"
            lines.append(f"  ({index_s} " + " ".join(parts) + ")")
            docs.append({"index": list(cell_index), "sample": doc_coords})
        lines.append(")")
        return CommandResult(
            index, "get-cells", "cells", "\n".join(lines),
            {"command": "get-cells", "cells": docs},
        )

    def _do_option(self, cmd: SetOption, index: int) -> CommandResult:
        key, value = cmd.key, cmd.value
        locked = {"operator", "product-ec"}
        if self.state is not None and key in locked:
            raise SolverUsageError(f"option :{key} is locked after the first check")
        if key == "operator":
            if value not in ("collins", "mccallum", "ec-reduced", "reduced"):
                raise SolverUsageError(f"unknown operator {value!r}")
            self.options.operator = str(value)
        elif key == "mode":
            if value not in ("auto", "sat", "decide"):
                raise SolverUsageError(f"unknown mode {value!r}")
            self.options.mode = str(value)
        elif key == "product-ec":
            self.options.product_ec = bool(value)
        elif key == "cell-cap":
            self.options.cell_cap = int(value)
            if self.state is not None:
                self.state.options.cell_cap = int(value)
        elif key == "time-cap":
            self.options.time_cap_s = float(value)
            if self.state is not None:
                self.state.options.time_cap_s = float(value)
        elif key == "model-digits":
            self.options.model_digits = int(value)
        elif key == "stats":
            self.options.stats = bool(value)
        return self._ok(index, "set-option")

    def exit_code(self) -> int:
        if self.any_budget:
            return 3
        if self.any_error:
            return 2
        if self.last_verdict is None:
            return 0
        return VERDICT_EXIT[self.last_verdict]


def run_script(script: Script, options: Optional[RunOptions] = None):
    """Execute a parsed script; returns (results, exit_code)."""
    session = Session(options)
    results = session.run(script.commands)
    return results, session.exit_code()


run = run_script


def run_text(text: str, options: Optional[RunOptions] = None):
    """Parse and execute script text; parse failures yield exit code 2."""
    try:
        script = parse(text)
    except ParseError as e:
        result = CommandResult(0, "parse", "error", f'(error "{e}")', {"error": str(e)})
        return [result], 2
    return run_script(script, options)
