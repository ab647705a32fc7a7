"""Solver orchestration.

Builds the full decomposition for a prenex formula under a chosen operator
policy, evaluates satisfiability or quantified truth over the cell tree,
escalates operators when a well-orientedness failure surfaces during lifting,
and supports adding/removing constraints by editing the existing tree (stacks
are re-lifted only where the root pattern over their base actually changed).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    BudgetExceededError,
    ComputationError,
    PrimitivityError,
    SolverUsageError,
    UnknownConstraintError,
)
from .formula import And, Atom, EXISTS, FORALL, FREE, Formula, Node, conjuncts, disjuncts, evaluate, map_atoms
from .lifting import Cell, MODE_FULL, MODE_REDUCED, NullificationReport, lift_cell, stack_roots
from .poly import Polynomial, normalized_factors
from .projection import (
    ECDesignation,
    NoEC,
    OP_COLLINS,
    OP_MCCALLUM,
    OP_REDUCED,
    ProjectionLevel,
    RULE_INPUT,
    TaggedPoly,
    choose_ec,
    equation_conjuncts,
    is_primitive_in,
    project_collins,
    project_mccallum,
    project_reduced,
    propagate_ec,
)
from .rational import qsign
from .realalg import SamplePoint, compare, sign_at

POLICIES = (OP_COLLINS, OP_MCCALLUM, OP_REDUCED)


def _normalize_policy(policy: str) -> str:
    if policy == "ec-reduced":
        return OP_REDUCED
    if policy not in POLICIES:
        raise SolverUsageError(f"unknown operator policy {policy!r}")
    return policy


@dataclass
class BuildOptions:
    policy: str = OP_REDUCED
    product_ec: bool = False
    cell_cap: int = 10 ** 6
    time_cap_s: Optional[float] = None

    def __post_init__(self):
        self.policy = _normalize_policy(self.policy)


@dataclass
class Verdict:
    kind: str  # sat | unsat | true | false
    witness: Optional[SamplePoint] = None
    stats: dict = field(default_factory=dict)


@dataclass
class RunStats:
    cells_created: int = 0
    lifts: int = 0
    repairs: int = 0
    nullifications: list = field(default_factory=list)
    per_level_raw: dict = field(default_factory=dict)
    ec_designations: dict = field(default_factory=dict)
    operator_changes: list = field(default_factory=list)
    stacks_relifted: int = 0
    cells_preserved: int = 0
    unsat_by_resultant: bool = False
    assumptions: list = field(default_factory=list)
    wall_ms: float = 0.0

    def snapshot(self, state: "SolverState") -> dict:
        per_level = {}
        for lvl in sorted(state.levels):
            raw = self.per_level_raw.get(lvl)
            per_level[str(lvl)] = {
                "normalized": len(state.levels[lvl]),
                "raw_emissions": raw.emissions if raw else 0,
                "raw_disc_res": raw.disc_res if raw else 0,
                "by_rule": dict(raw.by_rule) if raw else {},
                "operator": state.ops.get(lvl, ""),
            }
        return {
            "cells": state.tree_size(),
            "cells_created": self.cells_created,
            "lifts": self.lifts,
            "repairs": self.repairs,
            "nullifications": list(self.nullifications),
            "levels": per_level,
            "ec_designations": dict(self.ec_designations),
            "operator_changes": list(self.operator_changes),
            "stacks_relifted": self.stacks_relifted,
            "cells_preserved": self.cells_preserved,
            "unsat_by_resultant": self.unsat_by_resultant,
            "wall_ms": round(self.wall_ms, 3),
        }


class SolverState:
    """One live decomposition; single-writer, read queries between mutations."""

    def __init__(self, formula: Formula, options: Optional[BuildOptions] = None):
        self.options = options or BuildOptions()
        self.prefix = tuple(formula.prefix)
        self.n = len(self.prefix)
        if self.n == 0:
            raise SolverUsageError("at least one variable is required")
        k = sum(1 for q in self.prefix if q == FREE)
        if 0 < k < self.n:
            raise SolverUsageError(
                "mixed free and quantified variables are not supported; "
                "quantify everything or nothing"
            )
        self._atoms: dict = {}
        self._next_cid = 0
        self.matrix = self._assign_ids(formula.matrix)
        self.levels: dict = {}
        self.ops: dict = {}
        self.ec_chain: dict = {}
        self._virtual_inputs: list = []
        self.root: Optional[Cell] = None
        self.stats = RunStats()
        self._epoch = 0
        self._deadline = None

    # -- formula bookkeeping -------------------------------------------------

    def _assign_ids(self, matrix: Optional[Node]) -> Optional[Node]:
        if matrix is None:
            return None

        def stamp(atom: Atom) -> Atom:
            cid = self._next_cid
            self._next_cid += 1
            fresh = Atom(atom.poly, atom.rel, cid)
            self._atoms[cid] = fresh
            return fresh

        return map_atoms(matrix, stamp)

    def live_ids(self) -> list:
        return sorted(self._atoms)

    # -- planning --------------------------------------------------------------

    def _ec_candidates(self, level: int) -> list:
        v = level - 1
        out = []
        if self.matrix is None:
            return out
        for atom in equation_conjuncts(self.matrix):
            p = atom.poly
            if p.is_constant() or p.var != v:
                continue
            if p.degree(v) < 1 or not is_primitive_in(p, v):
                continue
            out.append(
                ECDesignation(level, normalized_factors(p)[0], frozenset({atom.cid}), "input")
            )
        return out

    def _product_candidate(self) -> Optional[ECDesignation]:
        if self.matrix is None:
            return None
        parts = disjuncts(self.matrix)
        if len(parts) < 2:
            return None
        v = self.n - 1
        chosen = []
        for part in parts:
            eqs = [a for a in equation_conjuncts(part) if not a.poly.is_constant()]
            if not eqs:
                return None
            eqs.sort(key=lambda a: (a.poly.degree(v) if a.poly.var == v else 0,
                                    a.poly.total_degree()))
            chosen.append(eqs[0])
        product = Polynomial.constant(1)
        origins = set()
        for a in chosen:
            product = product * a.poly
            origins.add(a.cid)
        if product.is_constant() or product.var != v:
            return None
        if product.degree(v) < 1 or not is_primitive_in(product, v):
            return None
        return ECDesignation(self.n, normalized_factors(product)[0],
                             frozenset(origins), "input")

    def _plan(self) -> None:
        self.ops = {}
        self.ec_chain = {}
        self._virtual_inputs = []
        self.stats.ec_designations = {}
        policy = self.options.policy
        if policy in (OP_COLLINS, OP_MCCALLUM):
            for lvl in range(1, self.n + 1):
                self.ops[lvl] = policy
            return
        pending: dict = {}
        for lvl in range(self.n, 0, -1):
            cands = self._ec_candidates(lvl) + pending.get(lvl, [])
            if not cands and lvl == self.n and self.options.product_ec:
                prod = self._product_candidate()
                if prod is not None:
                    cands = [prod]
                    self._virtual_inputs.append(
                        TaggedPoly(prod.poly, {prod.origins}, "input", RULE_INPUT)
                    )
            if not cands:
                self.ops[lvl] = OP_MCCALLUM
                continue
            v = lvl - 1
            ranked = sorted(
                range(len(cands)),
                key=lambda i: (cands[i].poly.degree(v), cands[i].poly.total_degree(), i),
            )
            best = cands[ranked[0]]
            self.ops[lvl] = OP_REDUCED
            self.ec_chain[lvl] = best
            self.stats.ec_designations[str(lvl)] = {
                "poly": best.poly.format(),
                "provenance": best.provenance,
            }
            for i in ranked[1:]:
                other = cands[i]
                out = propagate_ec(best, other)
                if isinstance(out, NoEC):
                    if out.proves_unsat:
                        self.stats.unsat_by_resultant = True
                    continue
                pending.setdefault(out.level, []).append(out)

    # -- projection ---------------------------------------------------------------

    def _insert_input(self, cid: int, poly: Polynomial) -> None:
        if poly.is_constant():
            return
        for factor in normalized_factors(poly):
            self.levels[factor.var + 1].entries.add(
                TaggedPoly(factor, {frozenset({cid})}, "input", RULE_INPUT)
            )

    def _project_all(self) -> None:
        self.levels = {lvl: ProjectionLevel(lvl) for lvl in range(1, self.n + 1)}
        self.stats.per_level_raw = {}
        self.stats.assumptions = []
        for cid, atom in sorted(self._atoms.items()):
            self._insert_input(cid, atom.poly)
        for tagged in self._virtual_inputs:
            self.levels[tagged.level].entries.add(
                TaggedPoly(tagged.poly, set(tagged.justifications), tagged.op_tag, tagged.rule_tag)
            )
        for lvl in range(self.n, 1, -1):
            op = self.ops[lvl]
            level = self.levels[lvl]
            if op == OP_REDUCED:
                try:
                    result = project_reduced(self.ec_chain[lvl], level)
                except PrimitivityError:
                    self._record_op_change(lvl, OP_REDUCED, OP_MCCALLUM, "primitivity")
                    self.ops[lvl] = OP_MCCALLUM
                    self.ec_chain.pop(lvl, None)
                    result = project_mccallum(level)
            elif op == OP_MCCALLUM:
                result = project_mccallum(level)
            else:
                result = project_collins(level)
            self.stats.per_level_raw[lvl] = result.raw
            self.stats.assumptions.extend(result.assumptions)
            for tagged in result.outputs:
                self.levels[tagged.level].entries.add(tagged)

    def _record_op_change(self, lvl: int, old: str, new: str, cause: str) -> None:
        self.stats.operator_changes.append(
            {"level": lvl, "from": old, "to": new, "cause": cause}
        )

    # -- lifting with repair ----------------------------------------------------------

    def _lift_mode(self, lvl: int):
        if self.ops.get(lvl) == OP_REDUCED and lvl in self.ec_chain:
            return MODE_REDUCED, self.ec_chain[lvl].poly
        return MODE_FULL, None

    def _stack_key(self, lvl: int):
        mode, ec = self._lift_mode(lvl)
        return (mode, ec, frozenset(self.levels[lvl].polys()))

    def _check_budget(self) -> None:
        if self.stats.cells_created > self.options.cell_cap:
            raise BudgetExceededError("cell", self.options.cell_cap)
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise BudgetExceededError("time", self.options.time_cap_s)

    def _lift_all(self) -> None:
        while True:
            if self.root is None:
                self.root = Cell(level=0, index=(), sample=SamplePoint())
                self.stats.cells_created += 1
            report = self._sync(self.root)
            if report is None:
                return
            self._repair(report)

    def _repair(self, report: NullificationReport) -> None:
        lvl = report.level
        old = self.ops[lvl]
        new = OP_MCCALLUM if old == OP_REDUCED else OP_COLLINS
        self.stats.repairs += 1
        self.stats.nullifications.append(
            {"level": lvl, "cell_dimension": report.cell_dimension,
             "polynomial": report.polynomial.format()}
        )
        self._record_op_change(lvl, old, new, "nullification")
        self.ops[lvl] = new
        self.ec_chain.pop(lvl, None)
        self._project_all()

    def _sync(self, cell: Cell) -> Optional[NullificationReport]:
        self._check_budget()
        if cell.level == self.n:
            return None
        lvl = cell.level + 1
        key = self._stack_key(lvl)
        if cell.stack_key != key or cell.children is None:
            if not self._can_keep_stack(cell, key):
                report = self._build_stack(cell, lvl, key)
                if report is not None:
                    return report
            else:
                cell.stack_key = key
                self.stats.cells_preserved += len(cell.children)
        elif self.stats.repairs or self._epoch:
            # resync after a repair or an edit: this stack was untouched
            self.stats.cells_preserved += len(cell.children)
        mode, ec = self._lift_mode(lvl)
        for child in cell.children:
            if mode == MODE_REDUCED and child.index[-1] % 2 == 1:
                if self._sign(child, ec) != 0:
                    # off the designated equation's zero set: the matrix is false
                    child.pruned = True
                    child.truth = False
                    child.children = None
                    continue
            child.pruned = False
            report = self._sync(child)
            if report is not None:
                return report
        return None

    def _can_keep_stack(self, cell: Cell, key) -> bool:
        """True when only added polynomials distinguish the stacks and none of
        them contributes a new section root over this base."""
        if cell.children is None or cell.stack_key is None:
            return False
        old_mode, old_ec, old_polys = cell.stack_key
        mode, ec, polys = key
        if mode != old_mode or ec != old_ec or not old_polys <= polys:
            return False
        added = polys - old_polys
        if not added:
            return True
        sections = cell.section_values()
        for p in added:
            level_stub = ProjectionLevel(cell.level + 1)
            level_stub.entries.add(TaggedPoly(p, {frozenset()}, "input", RULE_INPUT))
            rooted = stack_roots(cell, level_stub, MODE_FULL, None,
                                 self.ops.get(cell.level + 1, OP_MCCALLUM))
            if isinstance(rooted[0], NullificationReport):
                return False
            if mode == MODE_REDUCED:
                continue  # only the designated equation's roots split the stack
            for r, _ in rooted[0]:
                if not any(compare(r, s) == 0 for s in sections):
                    return False
        return True

    def _build_stack(self, cell: Cell, lvl: int, key) -> Optional[NullificationReport]:
        mode, ec = self._lift_mode(lvl)
        result = lift_cell(cell, self.levels[lvl], mode, ec, self.ops.get(lvl, OP_MCCALLUM))
        if isinstance(result, NullificationReport):
            return result
        self.stats.lifts += 1
        old_children = cell.children or []
        adopted = self._adopt_cells(cell, old_children, result)
        cell.children = result
        cell.stack_key = key
        self.stats.cells_created += sum(1 for c in result if not adopted.get(id(c)))
        self.stats.stacks_relifted += 1
        self._check_budget()
        return None

    def _adopt_cells(self, parent: Cell, old: list, new: list) -> dict:
        """Carry matching old cells (and their subtrees) into the new stack.

        A section matches by root value; a sector matches when both of its
        bounding section values (or unbounded ends) are unchanged."""
        adopted: dict = {}
        if not old:
            return adopted

        def bound(stack, i):
            if i < 0 or i >= len(stack):
                return None
            return stack[i].sample.coords[-1]

        def same_bound(a, b):
            if a is None or b is None:
                return a is None and b is None
            return compare(a, b) == 0

        used = set()
        for i, cell in enumerate(new):
            is_section = cell.index[-1] % 2 == 0
            hit = None
            for j, cand in enumerate(old):
                if id(cand) in used or (cand.index[-1] % 2 == 0) != is_section:
                    continue
                if is_section:
                    if compare(cand.sample.coords[-1], cell.sample.coords[-1]) == 0:
                        hit = cand
                elif same_bound(bound(old, j - 1), bound(new, i - 1)) and same_bound(
                    bound(old, j + 1), bound(new, i + 1)
                ):
                    hit = cand
                if hit is not None:
                    break
            if hit is not None:
                used.add(id(hit))
                self._reindex(hit, parent.index, cell.index[-1])
                new[i] = hit
                adopted[id(hit)] = True
                self.stats.cells_preserved += 1
        return adopted

    def _reindex(self, cell: Cell, prefix: tuple, position: int) -> None:
        cell.index = prefix + (position,)
        for child in cell.children or []:
            self._reindex(child, cell.index, child.index[-1])

    # -- signs and truth ----------------------------------------------------------------

    def _factors_of(self, poly: Polynomial) -> list:
        memo = getattr(self, "_factor_memo", None)
        if memo is None:
            memo = self._factor_memo = {}
        factors = memo.get(poly)
        if factors is None:
            factors = memo[poly] = normalized_factors(poly)
        return factors

    def _sign(self, cell: Cell, poly: Polynomial) -> int:
        if poly.is_constant():
            return qsign(poly.const)
        cached = cell.sign_cache.get(poly)
        if cached is None:
            # a vanishing stored factor forces the value to zero; sections
            # carry exactly that information from lifting, which keeps the
            # common on-variety evaluations away from the exact zero test
            if any(cell.sign_cache.get(f) == 0 for f in self._factors_of(poly)):
                cached = 0
            else:
                cached = sign_at(poly, cell.sample)
            cell.sign_cache[poly] = cached
        return cached

    def _leaf_truth(self, cell: Cell) -> bool:
        if cell.truth_epoch == self._epoch and cell.truth is not None:
            return cell.truth
        if self.matrix is None:
            value = True
        else:
            value = evaluate(self.matrix, lambda p: self._sign(cell, p))
        cell.truth = value
        cell.truth_epoch = self._epoch
        return value

    # -- queries ------------------------------------------------------------------------

    def tree_size(self) -> int:
        def walk(c: Cell) -> int:
            return 1 + sum(walk(ch) for ch in c.children or [])

        return walk(self.root) if self.root is not None else 0

    def leaves(self):
        def walk(c: Cell):
            if c.pruned:
                return
            if c.level == self.n:
                yield c
                return
            for ch in c.children or []:
                yield from walk(ch)

        if self.root is not None:
            yield from walk(self.root)

    def check_sat(self) -> Verdict:
        if not all(q == FREE for q in self.prefix):
            raise SolverUsageError("check_sat needs a quantifier-free formula")
        t0 = time.monotonic()
        witness_cell = None
        for leaf in self.leaves():
            if self._leaf_truth(leaf):
                witness_cell = leaf
                break
        self.stats.wall_ms += (time.monotonic() - t0) * 1000
        if witness_cell is None:
            return Verdict("unsat", stats=self.stats.snapshot(self))
        self._validate_witness(witness_cell.sample)
        return Verdict("sat", witness=witness_cell.sample, stats=self.stats.snapshot(self))

    def _validate_witness(self, sample: SamplePoint) -> None:
        if self.matrix is None:
            return
        ok = evaluate(self.matrix, lambda p: sign_at(p, sample) if not p.is_constant()
                      else qsign(p.const))
        if not ok:
            raise ComputationError("internal error: witness failed validation")

    def decide(self) -> Verdict:
        if any(q == FREE for q in self.prefix):
            raise SolverUsageError("decide needs a fully quantified formula")
        t0 = time.monotonic()

        def value(cell: Cell) -> bool:
            if cell.pruned:
                return False
            if cell.level == self.n:
                return self._leaf_truth(cell)
            q = self.prefix[cell.level]
            if q == FORALL:
                return all(value(c) for c in cell.children or [])
            return any(value(c) for c in cell.children or [])

        result = value(self.root)
        self.stats.wall_ms += (time.monotonic() - t0) * 1000
        return Verdict("true" if result else "false", stats=self.stats.snapshot(self))

    def true_cells(self) -> list:
        if not all(q == FREE for q in self.prefix):
            raise SolverUsageError("true_cells needs a quantifier-free formula")
        out = []
        for leaf in self.leaves():
            if self._leaf_truth(leaf):
                out.append((leaf.index, leaf.sample))
        return out

    # -- incremental edits -----------------------------------------------------------------

    def add(self, poly: Polynomial, rel: str) -> int:
        return self.add_node(Atom(poly, rel))[0]

    def add_node(self, node: Node) -> list:
        """Conjoin an arbitrary formula node; returns the new constraint ids."""
        before = self._next_cid
        stamped = self._assign_ids(node)
        cids = list(range(before, self._next_cid))
        if self.matrix is None:
            self.matrix = stamped
        else:
            self.matrix = And(conjuncts(self.matrix) + [stamped])
        self._after_edit("add")
        return cids

    def remove(self, cid: int) -> None:
        self.remove_many([cid])

    def remove_many(self, cids: list) -> None:
        targets = set(cids)
        for cid in targets:
            if cid not in self._atoms:
                raise UnknownConstraintError(f"constraint {cid} is not live")
        for cid in targets:
            del self._atoms[cid]
        if self.matrix is not None:
            self.matrix = map_atoms(
                self.matrix, lambda a: None if a.cid in targets else a
            )
        self._after_edit("remove")

    def _after_edit(self, cause: str) -> None:
        self._epoch += 1
        old_ops = dict(self.ops)
        self._start_clock()
        self._plan()
        for lvl, old in old_ops.items():
            new = self.ops.get(lvl)
            if old == OP_REDUCED and new in (OP_MCCALLUM, OP_COLLINS):
                self._record_op_change(lvl, old, new, f"ec-{cause}d" if cause == "remove" else cause)
            elif old != new and new is not None:
                self._record_op_change(lvl, old, new, cause)
        self._project_all()
        self._lift_all()

    def _start_clock(self) -> None:
        if self.options.time_cap_s is not None:
            self._deadline = time.monotonic() + self.options.time_cap_s


def build(formula: Formula, options: Optional[BuildOptions] = None) -> SolverState:
    """Construct the complete decomposition tree for a prenex formula."""
    state = SolverState(formula, options)
    t0 = time.monotonic()
    state._start_clock()
    state._plan()
    state._project_all()
    state._lift_all()
    state.stats.wall_ms += (time.monotonic() - t0) * 1000
    return state


def check_sat(state: SolverState) -> Verdict:
    return state.check_sat()


def decide(state: SolverState) -> Verdict:
    return state.decide()


def true_cells(state: SolverState) -> list:
    return state.true_cells()


def repair(state: SolverState, report: NullificationReport) -> SolverState:
    """Escalate the operator at the reported level and edit the tree in place."""
    state._repair(report)
    state._lift_all()
    return state


def add_constraint(state: SolverState, poly: Polynomial, rel: str) -> SolverState:
    state.add(poly, rel)
    return state


def remove_constraint(state: SolverState, cid: int) -> SolverState:
    state.remove(cid)
    return state


def normalized_level_sets(state: SolverState) -> dict:
    """Per-level frozen sets of normalized projection polynomials."""
    return {lvl: frozenset(state.levels[lvl].polys()) for lvl in state.levels}
