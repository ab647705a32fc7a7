"""Stack construction over cells.

Lifting a base cell substitutes its sample point into every polynomial of the
next level, isolates the real roots, and emits the alternating sector/section
stack.  Under a designated equation only that polynomial's roots split the
stack; the other members' signs are recorded at the resulting samples.  A
polynomial that vanishes identically over a positive-dimensional base cell is
a well-orientedness failure for the small operators and is returned as a
first-class report, not raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .poly import Polynomial
from .projection import OP_COLLINS, ProjectionLevel
from .rational import QQ
from .realalg import (
    AlgebraicNumber,
    SamplePoint,
    compare,
    rational_above,
    rational_below,
    rational_between,
    separate_pair,
    sign_at,
    substitute_partial,
)

MODE_FULL = "full"
MODE_REDUCED = "reduced"


@dataclass(eq=False)
class Cell:
    """One node of the decomposition tree.

    index entries are 1-based stack positions: odd means sector, even means
    section; the dimension of a cell is the number of odd entries."""

    level: int
    index: tuple
    sample: SamplePoint
    pruned: bool = False
    truth: Optional[bool] = None
    truth_epoch: int = -1
    children: Optional[list] = None
    stack_key: Optional[tuple] = None
    sign_cache: dict = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return cell_dimension(self)

    def section_values(self) -> list:
        """Sample coordinates of this cell's section children, in order."""
        if not self.children:
            return []
        return [c.sample.coords[-1] for c in self.children if c.index[-1] % 2 == 0]

    def __repr__(self):
        return f"Cell(level={self.level}, index={self.index})"


def cell_dimension(cell: Cell) -> int:
    return sum(1 for i in cell.index if i % 2 == 1)


@dataclass
class NullificationReport:
    """A polynomial vanished identically over a positive-dimensional cell."""

    polynomial: Polynomial
    cell: Cell
    cell_dimension: int
    level: int


def stack_roots(base: Cell, level: ProjectionLevel, mode: str = MODE_FULL,
                ec: Optional[Polynomial] = None, operator: str = "mccallum"):
    """Roots that split the stack over base, or a NullificationReport.

    Returns (roots, substituted) where roots is a sorted, pairwise-separated
    list of (AlgebraicNumber, set-of-source-polynomials) and substituted maps
    each member to its substituted form.
    """
    substituted = {}
    for m in level.members():
        sub = substitute_partial(m.poly, base.sample)
        if sub.nullified and operator != OP_COLLINS and base.dimension > 0:
            return NullificationReport(m.poly, base, base.dimension, level.level), None
        substituted[m.poly] = sub
    roots: list = []  # [(AlgebraicNumber, {source polys})]
    for p, sub in substituted.items():
        if sub.nullified:
            continue
        if mode == MODE_REDUCED and p != ec:
            continue
        for r in sub.real_roots():
            _merge_root(roots, r, p)
    for (a, _), (b, _) in zip(roots, roots[1:]):
        separate_pair(a, b)
    return roots, substituted


def _merge_root(roots: list, r: AlgebraicNumber, source: Polynomial) -> None:
    for i, (existing, sources) in enumerate(roots):
        c = compare(r, existing)
        if c == 0:
            if existing.exact is None and r.exact is not None:
                roots[i] = (r, sources | {source})
            else:
                sources.add(source)
            return
        if c < 0:
            roots.insert(i, (r, {source}))
            return
    roots.append((r, {source}))


def lift_cell(base: Cell, level: ProjectionLevel, mode: str = MODE_FULL,
              ec: Optional[Polynomial] = None, operator: str = "mccallum"):
    """Build the stack of cells over base, or return a NullificationReport."""
    rooted = stack_roots(base, level, mode, ec, operator)
    if isinstance(rooted[0], NullificationReport):
        return rooted[0]
    roots, substituted = rooted
    cells = build_stack(base, roots)
    if mode == MODE_REDUCED:
        others = [p for p in substituted if p != ec]
        for cell in cells:
            for g in others:
                cell.sign_cache[g] = sign_at(g, cell.sample)
    return cells


def build_stack(base: Cell, roots: list) -> list:
    """Alternating sector/section cells over base from separated sorted roots."""
    cells = []

    def add(position: int, coord: AlgebraicNumber, sources=()):
        cell = Cell(
            level=base.level + 1,
            index=base.index + (position,),
            sample=base.sample.extend(coord),
        )
        for p in sources:
            cell.sign_cache[p] = 0
        cells.append(cell)

    if not roots:
        add(1, AlgebraicNumber.from_rational(QQ(0)))
        return cells
    add(1, AlgebraicNumber.from_rational(rational_below(roots[0][0])))
    for i, (root, sources) in enumerate(roots):
        add(2 * i + 2, root, sources)
        if i + 1 < len(roots):
            mid = rational_between(root, roots[i + 1][0])
            add(2 * i + 3, AlgebraicNumber.from_rational(mid))
    add(2 * len(roots) + 1, AlgebraicNumber.from_rational(rational_above(roots[-1][0])))
    return cells
