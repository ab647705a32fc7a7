"""Exact multivariate polynomial arithmetic over the rationals.

Polynomials are immutable recursive structures: a polynomial is either a
rational constant or a polynomial in its top variable whose coefficients are
polynomials over strictly lower variables.  Variables are dense 0-based
indices into a global order; higher index means projected earlier (the top
variable of a level).

The module also houses the algebraic subroutines the projection operators
need: contents and primitive parts, gcds, square-free parts, subresultant
polynomial remainder sequences, resultants, discriminants and principal
subresultant coefficient chains, plus the canonical normalization used to
deduplicate projection sets.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Optional

from .errors import ComputationError, DegenerateDegreeError
from .rational import ONE, QQ, ZERO, qabs, qq_gcd, qsign

# Variables are plain indices into the solver's global order.
Variable = int

#: Degree of the zero polynomial.
MINUS_INFINITY = float("-inf")


class Polynomial:
    """Immutable exact polynomial; either a constant or recursive in its top variable."""

    __slots__ = ("var", "coeffs", "const", "_hash")

    def __init__(self, var: int, coeffs: tuple, const):
        # Use the factory classmethods; this constructor trusts its arguments.
        self.var = var
        self.coeffs = coeffs
        self.const = const
        self._hash = None

    # -- construction ------------------------------------------------------

    @classmethod
    def constant(cls, value) -> "Polynomial":
        q = QQ(value) if not isinstance(value, type(ZERO)) else value
        return cls(-1, (), q)

    @classmethod
    def variable(cls, index: int) -> "Polynomial":
        return cls(index, ((1, _ONE_POLY),), None)

    @classmethod
    def _make(cls, var: int, pairs: dict) -> "Polynomial":
        items = [(e, c) for e, c in pairs.items() if not c.is_zero()]
        if not items:
            return ZERO_POLY
        items.sort(key=lambda item: item[0])
        if len(items) == 1 and items[0][0] == 0:
            return items[0][1]
        return cls(var, tuple(items), None)

    @classmethod
    def from_terms(cls, terms: dict) -> "Polynomial":
        """Build from {((var, exp), ...): coefficient} monomial mapping."""
        acc = ZERO_POLY
        for monomial, coeff in terms.items():
            term = cls.constant(coeff)
            for var, exp in monomial:
                term = term * cls.variable(var) ** exp
            acc = acc + term
        return acc

    # -- basic predicates ---------------------------------------------------

    def is_constant(self) -> bool:
        return self.var < 0

    def is_zero(self) -> bool:
        return self.var < 0 and self.const == 0

    def is_one(self) -> bool:
        return self.var < 0 and self.const == 1

    # -- hashing / equality -------------------------------------------------

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.var < 0:
                h = hash(self.const)
            else:
                h = hash((self.var, self.coeffs))
            self._hash = h
        return h

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.var != other.var:
            return False
        if self.var < 0:
            return self.const == other.const
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self) -> "Polynomial":
        if self.var < 0:
            return Polynomial.constant(-self.const)
        return Polynomial(self.var, tuple((e, -c) for e, c in self.coeffs), None)

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        a, b = self, other
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        if a.var < 0 and b.var < 0:
            return Polynomial.constant(a.const + b.const)
        if a.var == b.var:
            acc = dict(a.coeffs)
            for e, c in b.coeffs:
                cur = acc.get(e)
                acc[e] = c if cur is None else cur + c
            return Polynomial._make(a.var, acc)
        if a.var < b.var:
            a, b = b, a
        # b lives strictly below a's top variable: fold into the constant slot
        acc = dict(a.coeffs)
        cur = acc.get(0)
        acc[0] = b if cur is None else cur + b
        return Polynomial._make(a.var, acc)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.constant(other) + (-self)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        a, b = self, other
        if a.is_zero() or b.is_zero():
            return ZERO_POLY
        if a.var < 0 and b.var < 0:
            return Polynomial.constant(a.const * b.const)
        if a.var < b.var:
            a, b = b, a
        if a.var > b.var or b.var < 0:
            if b.is_one():
                return a
            return Polynomial._make(a.var, {e: c * b for e, c in a.coeffs})
        acc: dict = {}
        for ea, ca in a.coeffs:
            for eb, cb in b.coeffs:
                e = ea + eb
                prod = ca * cb
                cur = acc.get(e)
                acc[e] = prod if cur is None else cur + prod
        return Polynomial._make(a.var, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = _ONE_POLY
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- views ---------------------------------------------------------------

    def degree(self, v: int):
        """Degree in variable v; MINUS_INFINITY for the zero polynomial."""
        if self.is_zero():
            return MINUS_INFINITY
        if self.var < 0 or self.var < v:
            return 0
        if self.var == v:
            return self.coeffs[-1][0]
        return max(c.degree(v) if not c.is_zero() else 0 for _, c in self.coeffs)

    def total_degree(self) -> int:
        if self.var < 0:
            return 0
        return max(e + c.total_degree() for e, c in self.coeffs)

    def coeffs_in(self, v: int) -> dict:
        """Coefficients keyed by exponent of v (each free of v)."""
        if self.var < 0 or self.var < v:
            return {0: self}
        if self.var == v:
            return dict(self.coeffs)
        acc: dict = {}
        for e, c in self.coeffs:
            mono = Polynomial(self.var, ((e, _ONE_POLY),), None) if e else _ONE_POLY
            for k, sub in c.coeffs_in(v).items():
                term = sub * mono
                cur = acc.get(k)
                acc[k] = term if cur is None else cur + term
        return {k: s for k, s in acc.items() if not s.is_zero()}

    def dense_in(self, v: int) -> list:
        """Dense coefficient list [c0, ..., cd] in v; empty for the zero polynomial."""
        if self.is_zero():
            return []
        cs = self.coeffs_in(v)
        d = max(cs)
        out = [ZERO_POLY] * (d + 1)
        for e, c in cs.items():
            out[e] = c
        return out

    def leading_coeff_in(self, v: int) -> "Polynomial":
        if self.is_zero():
            return ZERO_POLY
        cs = self.coeffs_in(v)
        return cs[max(cs)]

    def derivative(self, v: int) -> "Polynomial":
        if self.var < 0 or self.var < v:
            return ZERO_POLY
        if self.var == v:
            acc = {e - 1: c * QQ(e) for e, c in self.coeffs if e > 0}
            return Polynomial._make(v, acc)
        acc = {}
        for e, c in self.coeffs:
            acc[e] = c.derivative(v)
        return Polynomial._make(self.var, acc)

    def variables(self) -> set:
        if self.var < 0:
            return set()
        out = {self.var}
        for _, c in self.coeffs:
            out |= c.variables()
        return out

    def substitute(self, assignment: dict) -> "Polynomial":
        """Substitute exact rationals for some variables (partial allowed)."""
        if self.var < 0:
            return self
        value = assignment.get(self.var)
        if value is None:
            acc = {e: c.substitute(assignment) for e, c in self.coeffs}
            return Polynomial._make(self.var, acc)
        result = ZERO_POLY
        prev_e = None
        # Horner over the sparse exponent list, highest first
        for e, c in reversed(self.coeffs):
            if prev_e is not None:
                result = result * Polynomial.constant(value ** (prev_e - e))
            result = result + c.substitute(assignment)
            prev_e = e
        if prev_e:
            result = result * Polynomial.constant(value ** prev_e)
        return result

    def eval_rational(self, assignment: dict):
        """Evaluate fully at rational points; every variable must be assigned."""
        r = self.substitute(assignment)
        if not r.is_constant():
            raise ComputationError("evaluation left free variables")
        return r.const

    def to_terms(self) -> dict:
        """Monomial map {((var, exp), ...): coefficient} with vars ascending."""
        if self.var < 0:
            return {} if self.const == 0 else {(): self.const}
        out: dict = {}
        for e, c in self.coeffs:
            for mono, q in c.to_terms().items():
                key = mono + ((self.var, e),) if e else mono
                out[key] = out.get(key, ZERO) + q
        return {k: v for k, v in out.items() if v != 0}

    # -- printing -------------------------------------------------------------

    def format(self, names: Optional[list] = None) -> str:
        return format_poly(self, names)

    def __repr__(self):
        return f"Polynomial({self.format()})"


ZERO_POLY = Polynomial(-1, (), ZERO)
_ONE_POLY = Polynomial(-1, (), ONE)
ONE_POLY = _ONE_POLY


def const(value) -> Polynomial:
    return Polynomial.constant(value)


def var(index: int) -> Polynomial:
    return Polynomial.variable(index)


def arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    """Ring operation dispatch: op in {'add', 'sub', 'mul'}."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown ring operation {op!r}")


def degree(p: Polynomial, v: int):
    return p.degree(v)


def format_poly(p: Polynomial, names: Optional[list] = None) -> str:
    """Human-readable infix form, monomials in descending lex order."""

    def var_name(i: int) -> str:
        if names is not None and i < len(names):
            return names[i]
        return f"x{i}"

    terms = p.to_terms()
    if not terms:
        return "0"

    def sort_key(mono):
        # highest variable most significant, higher exponents first
        return tuple(sorted(mono, reverse=True))

    parts = []
    for mono in sorted(terms, key=sort_key, reverse=True):
        coeff = terms[mono]
        factors = []
        for v, e in sorted(mono, reverse=True):
            factors.append(var_name(v) if e == 1 else f"{var_name(v)}^{e}")
        body = "*".join(factors)
        mag = qabs(coeff)
        if not body:
            piece = str(mag)
        elif mag == 1:
            piece = body
        else:
            piece = f"{mag}*{body}"
        if not parts:
            parts.append(piece if coeff > 0 else f"-{piece}")
        else:
            parts.append(f"+ {piece}" if coeff > 0 else f"- {piece}")
    return " ".join(parts)


# -- scalar normalization -----------------------------------------------------


def rational_content(p: Polynomial):
    """Positive rational gcd of all base coefficients (0 for the zero polynomial)."""
    if p.var < 0:
        return qabs(p.const)
    acc = None
    for _, c in p.coeffs:
        rc = rational_content(c)
        acc = rc if acc is None else qq_gcd(acc, rc)
    return acc


def lead_sign(p: Polynomial) -> int:
    """Sign of the coefficient of the lexicographically greatest monomial."""
    if p.var < 0:
        return qsign(p.const)
    return lead_sign(p.coeffs[-1][1])


def scale(p: Polynomial, q) -> Polynomial:
    return p * Polynomial.constant(q)


def canonical_scalar(p: Polynomial) -> Polynomial:
    """Scale to coprime integer coefficients with positive lex-leading sign."""
    if p.is_zero():
        return p
    factor = rational_content(p)
    if lead_sign(p) < 0:
        factor = -factor
    return scale(p, 1 / factor)


def positive_form(p: Polynomial) -> Polynomial:
    """Flip the sign so the lex-leading coefficient is positive (no rescale)."""
    if p.is_zero():
        return p
    return -p if lead_sign(p) < 0 else p


# -- exact division -------------------------------------------------------------


def divexact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact quotient a / b; raises ComputationError if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return ZERO_POLY
    if b.is_constant():
        return scale(a, 1 / b.const)
    if a.is_constant():
        raise ComputationError("inexact polynomial division")
    v = max(a.var, b.var)
    A = a.dense_in(v)
    B = b.dense_in(v)
    da, db = len(A) - 1, len(B) - 1
    if da < db:
        raise ComputationError("inexact polynomial division")
    lb = B[-1]
    quot = [ZERO_POLY] * (da - db + 1)
    R = list(A)
    for k in range(da - db, -1, -1):
        top = R[k + db]
        if top.is_zero():
            continue
        q = divexact(top, lb)
        quot[k] = q
        for i, bc in enumerate(B):
            if not bc.is_zero():
                R[k + i] = R[k + i] - q * bc
    if any(not c.is_zero() for c in R):
        raise ComputationError("inexact polynomial division")
    result = ZERO_POLY
    xv = Polynomial.variable(v)
    for k in range(len(quot) - 1, -1, -1):
        result = result * xv + quot[k]
    return result


def reduce_by_defining(p: Polynomial, v: int, dcoeffs: list) -> Polynomial:
    """Remainder of p under division by a univariate polynomial in v.

    dcoeffs are the rational coefficients (low to high) of the divisor; its
    leading coefficient is a nonzero constant so the division stays exact.
    """
    dd = len(dcoeffs) - 1
    lead = QQ(dcoeffs[-1])
    divisor = _from_dense(v, [Polynomial.constant(QQ(c)) for c in dcoeffs])
    while True:
        cs = p.coeffs_in(v)
        if not cs:
            return p
        dp = max(cs)
        if dp < dd:
            return p
        q = scale(cs[dp], 1 / lead)
        p = p - q * (Polynomial.variable(v) ** (dp - dd)) * divisor


# -- gcd / content machinery ------------------------------------------------------


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Content-aware gcd: integer-style on rational contents, PRS on primitive parts."""
    if a.is_zero():
        return positive_form(b)
    if b.is_zero():
        return positive_form(a)
    ra = rational_content(a)
    rb = rational_content(b)
    rg = qq_gcd(ra, rb)
    pa = scale(a, 1 / ra)
    pb = scale(b, 1 / rb)
    g = _pp_gcd(pa, pb)
    return scale(g, rg)


def _pp_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_constant() or b.is_constant():
        return _ONE_POLY
    v = max(a.var, b.var)
    ca, pa = content_primitive(a, v)
    cb, pb = content_primitive(b, v)
    cg = poly_gcd(ca, cb)
    if pa.degree(v) == 0 or pb.degree(v) == 0:
        return canonical_scalar(positive_form(cg)) if not cg.is_constant() else _ONE_POLY
    A = pa.dense_in(v)
    B = pb.dense_in(v)
    if len(A) < len(B):
        A, B = B, A
    prs = _subresultant_prs(A, B)
    last = prs[-1]
    if len(last) == 1:
        gpp = _ONE_POLY
    else:
        raw = _from_dense(v, last)
        _, gpp = content_primitive(raw, v)
        gpp = canonical_scalar(gpp)
    return canonical_scalar(cg * gpp)


def content_primitive(p: Polynomial, v: int):
    """Split p = content * primitive_part with content the gcd of coefficients in v."""
    if p.is_zero():
        raise ValueError("content of the zero polynomial")
    cs = list(p.coeffs_in(v).values())
    if len(cs) == 1 and max(p.coeffs_in(v)) == 0:
        # v-free: everything is content
        return p, _ONE_POLY
    if len(cs) == 1:
        content = positive_form(cs[0])
    else:
        content = reduce(poly_gcd, cs)
    primitive = divexact(p, content)
    return content, primitive


def squarefree_part(p: Polynomial, v: int) -> Polynomial:
    """Same real roots in v, all simple; the content in v is preserved."""
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    if p.degree(v) == 0:
        return p
    content, primitive = content_primitive(p, v)
    g = poly_gcd(primitive, primitive.derivative(v))
    if g.is_constant():
        return p
    return content * divexact(primitive, g)


def normalized_factors(p: Polynomial) -> list:
    """Canonical square-free primitive factors of p, one per content level.

    Splitting into the primitive part at the top variable plus the recursively
    decomposed content keeps the union of zero sets equal to p's zero set, so
    sign-invariance of every factor gives sign-invariance of p.
    """
    out = []
    while True:
        if p.is_constant():
            return out
        v = p.var
        content, primitive = content_primitive(p, v)
        g = poly_gcd(primitive, primitive.derivative(v))
        sqf = primitive if g.is_constant() else divexact(primitive, g)
        out.append(canonical_scalar(sqf))
        p = content


# -- pseudo-division and subresultants -----------------------------------------------


def _strip(L: list) -> list:
    while L and L[-1].is_zero():
        L.pop()
    return L


def _from_dense(v: int, L: list) -> Polynomial:
    result = ZERO_POLY
    xv = Polynomial.variable(v)
    for c in reversed(L):
        result = result * xv + c
    return result


def _pseudo_rem(A: list, B: list) -> list:
    """prem(A, B) = lc(B)^(dA-dB+1) * A mod B over the coefficient ring."""
    dA, dB = len(A) - 1, len(B) - 1
    lb = B[-1]
    R = list(A)
    e = dA - dB + 1
    while True:
        _strip(R)
        dR = len(R) - 1
        if dR < dB or not R:
            break
        lr = R[-1]
        R = [lb * c for c in R]
        shift = dR - dB
        for i, bc in enumerate(B):
            if not bc.is_zero():
                R[shift + i] = R[shift + i] - lr * bc
        R.pop()  # leading term cancels exactly
        e -= 1
    if e > 0:
        f = lb ** e if e > 1 else lb
        R = [f * c for c in R]
    return _strip(R)


def _subresultant_prs(A: list, B: list) -> list:
    """Subresultant PRS [A, B, R2, ...]; requires deg A >= deg B >= 0, both nonzero."""
    prs = [A, B]
    g = _ONE_POLY
    h = _ONE_POLY
    while True:
        A, B = prs[-2], prs[-1]
        dA, dB = len(A) - 1, len(B) - 1
        if dB <= 0:
            break
        delta = dA - dB
        R = _pseudo_rem(A, B)
        if not R:
            break
        divisor = g * (h ** delta if delta != 1 else h) if delta > 0 else g
        R = [divexact(c, divisor) for c in R]
        prs.append(R)
        g = B[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = divexact(g ** delta, h ** (delta - 1))
    return prs


def _resultant_dense(A: list, B: list) -> Polynomial:
    """Resultant in the Sylvester-determinant orientation, via the subresultant PRS."""
    dA, dB = len(A) - 1, len(B) - 1
    s = 1
    if dA < dB:
        A, B = B, A
        dA, dB = dB, dA
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
    if dA == 0:
        return _ONE_POLY  # two nonzero constants
    if dB == 0:
        return B[0] ** dA
    g = _ONE_POLY
    h = _ONE_POLY
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        R = _pseudo_rem(A, B)
        if not R:
            return ZERO_POLY
        divisor = g * (h ** delta if delta != 1 else h) if delta > 0 else g
        R = [divexact(c, divisor) for c in R]
        A, B = B, R
        g = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = divexact(g ** delta, h ** (delta - 1))
        if len(B) - 1 == 0:
            dA = len(A) - 1
            c = B[0]
            if dA == 1:
                final = c
            else:
                final = divexact(c ** dA, h ** (dA - 1))
            return final if s > 0 else -final


def resultant(p: Polynomial, q: Polynomial, v: int) -> Polynomial:
    """Resultant w.r.t. v under the convention res(p,q) = lc(q)^deg(p) * prod p(roots of q).

    Both arguments must have positive degree in v.
    """
    dp, dq = p.degree(v), q.degree(v)
    if dp is MINUS_INFINITY or dq is MINUS_INFINITY or dp < 1 or dq < 1:
        raise DegenerateDegreeError(
            f"resultant needs positive degrees in x{v} (got {dp}, {dq})"
        )
    r = _resultant_dense(p.dense_in(v), q.dense_in(v))
    if (dp * dq) % 2 == 1:
        r = -r
    return r


def _resultant_any(p: Polynomial, q: Polynomial, v: int) -> Polynomial:
    """Internal resultant tolerating degree-0 arguments (res(p, c) = c^deg p)."""
    dp, dq = p.degree(v), q.degree(v)
    if dp is MINUS_INFINITY or dq is MINUS_INFINITY:
        return ZERO_POLY
    if dq == 0:
        return q ** dp if dp > 0 else _ONE_POLY
    if dp == 0:
        return p ** dq
    return resultant(p, q, v)


def discriminant(p: Polynomial, v: int) -> Polynomial:
    """Discriminant via (-1)^(d(d-1)/2) * res(p, dp/dv) / lc."""
    d = p.degree(v)
    if d is MINUS_INFINITY or d < 2:
        raise DegenerateDegreeError(f"discriminant needs degree >= 2 in x{v} (got {d})")
    dp = p.derivative(v)
    if dp.degree(v) is MINUS_INFINITY or dp.degree(v) < 1:
        # derivative collapsed below degree 1 in v (cannot happen over Q with d >= 2)
        raise DegenerateDegreeError("degenerate derivative")
    r = resultant(p, dp, v)
    lc = p.leading_coeff_in(v)
    result = divexact(r, lc)
    if (d * (d - 1) // 2) % 2 == 1:
        result = -result
    return result


def subresultant_psc(p: Polynomial, q: Polynomial, v: int) -> list:
    """Principal subresultant coefficients psc_0..psc_min(deg p, deg q).

    Requires deg p >= deg q >= 0 and p nonzero.  psc_0 equals resultant(p, q, v)
    whenever both degrees are positive.
    """
    dp, dq = p.degree(v), q.degree(v)
    if dp is MINUS_INFINITY:
        raise DegenerateDegreeError("psc of the zero polynomial")
    if dq is MINUS_INFINITY:
        return []
    if dp < dq:
        raise DegenerateDegreeError("psc chain needs deg p >= deg q")
    if dq == 0:
        return [q ** dp if dp > 0 else _ONE_POLY]
    chain = [ZERO_POLY] * (dq + 1)
    lq = q.leading_coeff_in(v)
    chain[dq] = lq ** (dp - dq) if dp > dq else _ONE_POLY
    prs = _subresultant_prs(p.dense_in(v), q.dense_in(v))
    for i in range(2, len(prs)):
        r = prs[i]
        d_prev = len(prs[i - 1]) - 1
        d_r = len(r) - 1
        if d_prev - 1 <= dq:
            chain[d_prev - 1] = r[d_prev - 1] if d_prev - 1 <= d_r else ZERO_POLY
        if d_r < d_prev - 1 and d_r <= dq:
            chain[d_r] = r[-1] ** (d_prev - d_r)
    chain[0] = resultant(p, q, v)
    return chain


# -- reducta for the widest projection operator ----------------------------------------


def rename_variables(p: Polynomial, mapping: dict) -> Polynomial:
    """Rebuild p with variable indices permuted per mapping."""
    out: dict = {}
    for mono, coeff in p.to_terms().items():
        key = tuple(sorted((mapping[v], e) for v, e in mono))
        out[key] = out.get(key, ZERO) + coeff
    return Polynomial.from_terms(out)


def truncation_chain(p: Polynomial, v: int) -> list:
    """Successive reducta of p in v, stopping once a leading coefficient
    provably never vanishes (a nonzero constant).  The final entry may be
    v-free when every higher coefficient can vanish."""
    out = []
    g = p
    while not g.is_zero():
        d = g.degree(v)
        out.append(g)
        if d == 0 or g.leading_coeff_in(v).is_constant():
            break
        cs = g.coeffs_in(v)
        del cs[d]
        if not cs:
            break
        g = _from_dense(v, [cs.get(i, ZERO_POLY) for i in range(max(cs) + 1)])
    return out
