"""Projection operators and equational-constraint machinery.

Three operators map a level's polynomial set one variable down: the wide
Collins-style operator (complete, no orientation caveat), the McCallum-style
operator (much smaller, valid only for well-oriented inputs), and the reduced
operator available when an equation is designated at the level, which keeps
only the designated polynomial's own projection plus its resultants against
the other members.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import PrimitivityError
from .formula import Atom, Node, conjuncts
from .poly import (
    Polynomial,
    content_primitive,
    discriminant,
    normalized_factors,
    resultant,
    subresultant_psc,
    truncation_chain,
)

OP_COLLINS = "collins"
OP_MCCALLUM = "mccallum"
OP_REDUCED = "reduced"

RULE_INPUT = "input"
RULE_COEFF = "coefficient"
RULE_DISC = "discriminant"
RULE_RES = "resultant"
RULE_PSC = "psc"
RULE_CONTENT = "content"


@dataclass
class TaggedPoly:
    """A normalized projection polynomial with its provenance.

    justifications holds one constraint-id set per independent derivation;
    the entry stays live while at least one justification is fully live.
    """

    poly: Polynomial
    justifications: set
    op_tag: str
    rule_tag: str

    @property
    def origins(self) -> frozenset:
        out = frozenset()
        for j in self.justifications:
            out |= j
        return out

    @property
    def level(self) -> int:
        return self.poly.var + 1


class PolySet:
    """Deduplicated polynomial collection with stable insertion order."""

    def __init__(self):
        self._entries: dict = {}

    def add(self, tagged: TaggedPoly) -> TaggedPoly:
        existing = self._entries.get(tagged.poly)
        if existing is None:
            self._entries[tagged.poly] = tagged
            return tagged
        existing.justifications |= tagged.justifications
        return existing

    def remove(self, poly: Polynomial) -> None:
        del self._entries[poly]

    def __contains__(self, poly: Polynomial) -> bool:
        return poly in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries.values())

    def get(self, poly: Polynomial) -> Optional[TaggedPoly]:
        return self._entries.get(poly)

    def polys(self) -> list:
        return list(self._entries.keys())


@dataclass
class ProjectionLevel:
    """The polynomial set at one level (members' top variable is level-1)."""

    level: int
    entries: PolySet = field(default_factory=PolySet)

    def members(self) -> list:
        return list(self.entries)

    def polys(self) -> list:
        return self.entries.polys()

    def __len__(self):
        return len(self.entries)


@dataclass
class RawCounts:
    """Pre-normalization emission counters for one operator application."""

    emissions: int = 0
    disc_res: int = 0
    by_rule: dict = field(default_factory=dict)

    def bump(self, rule: str, disc_res: bool = False) -> None:
        self.emissions += 1
        if disc_res:
            self.disc_res += 1
        self.by_rule[rule] = self.by_rule.get(rule, 0) + 1


@dataclass
class ProjectionResult:
    """Operator output: normalized factors (possibly at several lower levels),
    validity assumptions, and raw emission counts."""

    outputs: PolySet
    assumptions: list
    raw: RawCounts

    def polys_at(self, level: int) -> list:
        return [t.poly for t in self.outputs if t.level == level]

    def as_level(self, level: int) -> ProjectionLevel:
        out = ProjectionLevel(level)
        for t in self.outputs:
            if t.level == level:
                out.entries.add(t)
        return out


def _emit(acc: PolySet, raw_poly: Polynomial, rule: str, op: str, origins: frozenset,
          raw: RawCounts, disc_res: bool = False) -> None:
    raw.bump(rule, disc_res)
    if raw_poly.is_zero() or raw_poly.is_constant():
        return
    first = True
    for factor in normalized_factors(raw_poly):
        tag = rule if first else RULE_CONTENT
        acc.add(TaggedPoly(factor, {frozenset(origins)}, op, tag))
        first = False


def project_mccallum(level: ProjectionLevel):
    """Small operator: all nonzero coefficients, discriminants of degree >= 2
    members, pairwise resultants.  Valid only for well-oriented inputs."""
    v = level.level - 1
    acc = PolySet()
    raw = RawCounts()
    members = level.members()
    for m in members:
        for _, c in sorted(m.poly.coeffs_in(v).items(), reverse=True):
            _emit(acc, c, RULE_COEFF, OP_MCCALLUM, m.origins, raw)
        if m.poly.degree(v) >= 2:
            _emit(acc, discriminant(m.poly, v), RULE_DISC, OP_MCCALLUM, m.origins, raw,
                  disc_res=True)
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            a, b = members[i], members[j]
            _emit(acc, resultant(a.poly, b.poly, v), RULE_RES, OP_MCCALLUM,
                  a.origins | b.origins, raw, disc_res=True)
    assumptions = [
        f"level {level.level}: no member may vanish identically over a "
        f"positive-dimensional cell of the base"
    ]
    return ProjectionResult(acc, assumptions, raw)


def _psc_emit(acc, a: Polynomial, b: Polynomial, v: int, op: str, origins, raw) -> None:
    if a.degree(v) < b.degree(v):
        a, b = b, a
    for entry in subresultant_psc(a, b, v):
        _emit(acc, entry, RULE_PSC, op, origins, raw)


def project_collins(level: ProjectionLevel):
    """Wide operator: reducta leading coefficients, psc chains of each
    reductum with its derivative, and pairwise psc chains of reducta."""
    v = level.level - 1
    acc = PolySet()
    raw = RawCounts()
    members = level.members()
    chains = [(m, truncation_chain(m.poly, v)) for m in members]
    for m, chain in chains:
        for g in chain:
            d = g.degree(v)
            if d >= 1:
                _emit(acc, g.leading_coeff_in(v), RULE_COEFF, OP_COLLINS, m.origins, raw)
                if d >= 2:
                    _psc_emit(acc, g, g.derivative(v), v, OP_COLLINS, m.origins, raw)
            else:
                # trailing reductum reached: everything above it can vanish
                _emit(acc, g, RULE_COEFF, OP_COLLINS, m.origins, raw)
    for i in range(len(chains)):
        for j in range(i + 1, len(chains)):
            mi, ci = chains[i]
            mj, cj = chains[j]
            origins = mi.origins | mj.origins
            for gi in ci:
                if gi.degree(v) < 1:
                    continue
                for gj in cj:
                    if gj.degree(v) < 1:
                        continue
                    _psc_emit(acc, gi, gj, v, OP_COLLINS, origins, raw)
    return ProjectionResult(acc, [], raw)


@dataclass(frozen=True)
class ECDesignation:
    """An equation designated for the reduced operator at one level."""

    level: int
    poly: Polynomial  # normalized: square-free primitive, canonical scaling
    origins: frozenset
    provenance: str  # "input" | "propagated"


@dataclass(frozen=True)
class NoEC:
    """Marker for a failed propagation; carries an unsatisfiability proof when
    the resultant was a nonzero constant."""

    reason: str
    proves_unsat: bool = False


def is_primitive_in(p: Polynomial, v: int) -> bool:
    content, _ = content_primitive(p, v)
    return content.is_constant()


def project_reduced(ec: ECDesignation, level: ProjectionLevel):
    """Reduced operator at a designated equation F: the small operator applied
    to {F} alone, plus the resultant of F with every other member."""
    v = level.level - 1
    f = ec.poly
    if f.degree(v) in (0, None) or f.degree(v) < 1:
        raise PrimitivityError("designated equation has no positive degree at its level")
    if not is_primitive_in(f, v):
        raise PrimitivityError("designated equation is not primitive at its level")
    if f not in level.entries:
        raise ValueError("designated equation is not a member of the level")
    acc = PolySet()
    raw = RawCounts()
    for _, c in sorted(f.coeffs_in(v).items(), reverse=True):
        _emit(acc, c, RULE_COEFF, OP_REDUCED, ec.origins, raw)
    if f.degree(v) >= 2:
        _emit(acc, discriminant(f, v), RULE_DISC, OP_REDUCED, ec.origins, raw, disc_res=True)
    for m in level.members():
        if m.poly == f:
            continue
        _emit(acc, resultant(f, m.poly, v), RULE_RES, OP_REDUCED,
              ec.origins | m.origins, raw, disc_res=True)
    assumptions = [
        f"level {level.level}: validity additionally requires the designated "
        f"equation's projection to stay order-invariant (well-orientedness)"
    ]
    return ProjectionResult(acc, assumptions, raw)


def propagate_ec(f1: ECDesignation, f2: ECDesignation):
    """Resultant of two same-level equations, implied one level (or more) down."""
    if f1.level != f2.level:
        raise ValueError("propagation needs two equations at the same level")
    v = f1.level - 1
    r = resultant(f1.poly, f2.poly, v)
    if r.is_zero():
        return NoEC("zero resultant (shared component)")
    if r.is_constant():
        return NoEC("constant resultant", proves_unsat=True)
    if not is_primitive_in(r, r.var):
        return NoEC("propagated resultant is not primitive")
    factors = normalized_factors(r)
    return ECDesignation(
        level=r.var + 1,
        poly=factors[0],
        origins=f1.origins | f2.origins,
        provenance="propagated",
    )


def equation_conjuncts(matrix: Node) -> list:
    """Top-level conjunct atoms of shape f = 0 (syntactic detection only)."""
    return [c for c in conjuncts(matrix) if isinstance(c, Atom) and c.rel == "="]


def choose_ec(matrix: Node, level: int) -> Optional[ECDesignation]:
    """Designate an equation for the level, if one passes the gates.

    Candidates are equality atoms appearing as top-level conjuncts whose
    polynomial tops out exactly at the level's variable; ties break toward
    minimal degree in the level variable, then minimal total degree, then
    input order.
    """
    v = level - 1
    candidates = []
    for idx, atom in enumerate(equation_conjuncts(matrix)):
        p = atom.poly
        if p.is_constant() or p.var != v:
            continue
        d = p.degree(v)
        if d is None or d < 1:
            continue
        if not is_primitive_in(p, v):
            continue
        candidates.append((d, p.total_degree(), idx, atom))
    if not candidates:
        return None
    candidates.sort(key=lambda t: t[:3])
    _, _, _, best = candidates[0]
    poly = normalized_factors(best.poly)[0]
    return ECDesignation(level=level, poly=poly, origins=frozenset({best.cid}),
                         provenance="input")
