"""Operator comparison bench: seeded instance families and count tables."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Optional

from .engine import BuildOptions, SolverState, build
from .formula import And, Atom, FREE, Formula
from .poly import Polynomial

INEQUALITIES = ("<", "<=", ">", ">=")


@dataclass(frozen=True)
class FamilySpec:
    """One bench instance: monic constraints of fixed degree in the main
    variable, with a prescribed number of equations designated first."""

    n_vars: int = 2
    degree: int = 2
    n_constraints: int = 3
    n_ecs: int = 1
    seed: int = 0


def _random_member(rng: random.Random, n_vars: int, degree: int) -> Polynomial:
    main = n_vars - 1
    p = Polynomial.variable(main) ** degree  # monic: primitive, degree exact
    lower_vars = list(range(n_vars))
    terms = rng.randint(2, 4)
    for _ in range(terms):
        total = rng.randint(0, degree)
        exps = {}
        for _ in range(total):
            v = rng.choice(lower_vars)
            exps[v] = exps.get(v, 0) + 1
        if exps.get(main, 0) >= degree:
            continue
        mono = Polynomial.constant(rng.choice([c for c in range(-9, 10) if c]))
        for v, e in exps.items():
            mono = mono * Polynomial.variable(v) ** e
        p = p + mono
    if p.degree(main) != degree or not p.leading_coeff_in(main).is_constant():
        return Polynomial.variable(main) ** degree + Polynomial.constant(
            rng.choice([c for c in range(-9, 10) if c])
        )
    return p


def generate_formula(spec: FamilySpec) -> Formula:
    from .poly import normalized_factors

    mixed = ((spec.seed * 1000003 + spec.n_vars) * 10007 + spec.degree) * 101 + spec.n_constraints
    rng = random.Random(mixed)
    main = spec.n_vars - 1
    atoms = []
    seen = set()
    while len(atoms) < spec.n_constraints:
        p = _random_member(rng, spec.n_vars, spec.degree)
        factor = normalized_factors(p)[0]
        # keep the family generic: full degree survives normalization, no
        # two constraints share a projection factor
        if factor.degree(main) != spec.degree or factor in seen:
            continue
        seen.add(factor)
        rel = "=" if len(atoms) < spec.n_ecs else rng.choice(INEQUALITIES)
        atoms.append(Atom(p, rel))
    matrix = atoms[0] if len(atoms) == 1 else And(atoms)
    return Formula((FREE,) * spec.n_vars, matrix)


def projection_counts(spec: FamilySpec, operator: str) -> SolverState:
    """Plan and project only (no lifting); enough for count comparisons."""
    state = SolverState(generate_formula(spec), BuildOptions(policy=operator))
    state._plan()
    state._project_all()
    return state


def run_instance(spec: FamilySpec, operator: str, with_cells: bool = True) -> dict:
    t0 = time.monotonic()
    if with_cells:
        state = build(generate_formula(spec), BuildOptions(policy=operator))
        cells = state.tree_size()
    else:
        state = projection_counts(spec, operator)
        cells = None
    elapsed_ms = (time.monotonic() - t0) * 1000
    raw_dr = {}
    raw_all = {}
    for lvl, raw in state.stats.per_level_raw.items():
        raw_dr[lvl] = raw.disc_res
        raw_all[lvl] = raw.emissions
    normalized = {lvl: len(state.levels[lvl]) for lvl in state.levels}
    return {
        "vars": spec.n_vars,
        "degree": spec.degree,
        "constraints": spec.n_constraints,
        "ecs": spec.n_ecs,
        "seed": spec.seed,
        "operator": operator,
        "raw_disc_res": {str(k): v for k, v in sorted(raw_dr.items())},
        "raw_emissions": {str(k): v for k, v in sorted(raw_all.items())},
        "normalized": {str(k): v for k, v in sorted(normalized.items())},
        "cells": cells,
        "time_ms": round(elapsed_ms, 3),
    }


def run_family(specs: list, operators: list, with_cells: bool = True) -> list:
    rows = []
    for spec in specs:
        for operator in operators:
            rows.append(run_instance(spec, operator, with_cells))
    return rows


def render_table(rows: list, with_time: bool = False) -> str:
    """Aligned text table; deterministic for a given seed unless times are on."""
    headers = ["vars", "deg", "n", "ec", "seed", "operator", "raw-dr", "raw-all",
               "normalized", "cells"]
    if with_time:
        headers.append("time-ms")

    def fmt_levels(d: dict) -> str:
        if not d:
            return "-"
        return ",".join(f"L{k}:{v}" for k, v in sorted(d.items(), key=lambda kv: int(kv[0])))

    table = [headers]
    for r in rows:
        row = [
            str(r["vars"]), str(r["degree"]), str(r["constraints"]), str(r["ecs"]),
            str(r["seed"]), r["operator"],
            fmt_levels(r["raw_disc_res"]), fmt_levels(r["raw_emissions"]),
            fmt_levels(r["normalized"]),
            "-" if r["cells"] is None else str(r["cells"]),
        ]
        if with_time:
            row.append(f"{r['time_ms']:.3f}")
        table.append(row)
    widths = [max(len(row[i]) for row in table) for i in range(len(headers))]
    lines = []
    for row in table:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"
