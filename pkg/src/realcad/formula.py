"""Quantifier-prefixed Boolean combinations of polynomial sign conditions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Union

from .errors import SolverUsageError
from .poly import Polynomial

RELATIONS = ("=", "!=", "<", "<=", ">", ">=")

_NEGATION = {"=": "!=", "!=": "=", "<": ">=", "<=": ">", ">": "<=", ">=": "<"}

FREE = "free"
EXISTS = "exists"
FORALL = "forall"


@dataclass(frozen=True)
class Atom:
    poly: Polynomial
    rel: str
    cid: int = -1

    def holds(self, sign: int) -> bool:
        r = self.rel
        if r == "=":
            return sign == 0
        if r == "!=":
            return sign != 0
        if r == "<":
            return sign < 0
        if r == "<=":
            return sign <= 0
        if r == ">":
            return sign > 0
        return sign >= 0

    def negate(self) -> "Atom":
        return Atom(self.poly, _NEGATION[self.rel], self.cid)


@dataclass(frozen=True)
class And:
    items: tuple

    def __init__(self, items):
        object.__setattr__(self, "items", tuple(items))


@dataclass(frozen=True)
class Or:
    items: tuple

    def __init__(self, items):
        object.__setattr__(self, "items", tuple(items))


@dataclass(frozen=True)
class Not:
    item: "Node"


Node = Union[Atom, And, Or, Not]


def conjuncts(node: Node) -> list:
    """Flattened top-level conjuncts (the node itself if it is not a conjunction)."""
    if isinstance(node, And):
        out = []
        for item in node.items:
            out.extend(conjuncts(item))
        return out
    return [node]


def disjuncts(node: Node) -> list:
    if isinstance(node, Or):
        out = []
        for item in node.items:
            out.extend(disjuncts(item))
        return out
    return [node]


def atoms(node: Node) -> Iterator[Atom]:
    if isinstance(node, Atom):
        yield node
    elif isinstance(node, (And, Or)):
        for item in node.items:
            yield from atoms(item)
    else:
        yield from atoms(node.item)


def evaluate(node: Node, sign_of: Callable[[Polynomial], int]) -> bool:
    if isinstance(node, Atom):
        return node.holds(sign_of(node.poly))
    if isinstance(node, And):
        return all(evaluate(item, sign_of) for item in node.items)
    if isinstance(node, Or):
        return any(evaluate(item, sign_of) for item in node.items)
    return not evaluate(node.item, sign_of)


def map_atoms(node: Node, fn: Callable[[Atom], Optional[Node]]) -> Optional[Node]:
    """Rebuild the tree applying fn to atoms; fn may return None to drop one."""
    if isinstance(node, Atom):
        return fn(node)
    if isinstance(node, (And, Or)):
        kept = [m for m in (map_atoms(i, fn) for i in node.items) if m is not None]
        if not kept:
            return None
        if len(kept) == 1:
            return kept[0]
        return And(kept) if isinstance(node, And) else Or(kept)
    inner = map_atoms(node.item, fn)
    return None if inner is None else Not(inner)


@dataclass
class Formula:
    """Prenex formula: per-variable quantifier state plus a matrix of atoms.

    Free variables must come first in the order and quantified variables last
    (the quantifier block is innermost-contiguous).
    """

    prefix: tuple
    matrix: Node

    def __post_init__(self):
        self.prefix = tuple(self.prefix)
        seen_quantifier = False
        for q in self.prefix:
            if q not in (FREE, EXISTS, FORALL):
                raise SolverUsageError(f"unknown quantifier state {q!r}")
            if q == FREE and seen_quantifier:
                raise SolverUsageError("free variables must precede quantified ones")
            if q != FREE:
                seen_quantifier = True

    @property
    def n_vars(self) -> int:
        return len(self.prefix)

    @property
    def free_count(self) -> int:
        return sum(1 for q in self.prefix if q == FREE)

    def is_quantifier_free(self) -> bool:
        return all(q == FREE for q in self.prefix)

    def is_fully_quantified(self) -> bool:
        return all(q != FREE for q in self.prefix)

    def all_atoms(self) -> list:
        return list(atoms(self.matrix))
