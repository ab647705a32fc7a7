"""Univariate real root isolation and exact arithmetic at real algebraic points.

Real algebraic numbers are (square-free integer polynomial, isolating
interval) pairs with an optional exact-rational shortcut.  Root isolation is
sign-variation bisection on integer polynomials; comparisons and polynomial
sign evaluation are exact, using interval refinement on the fast path and
gcd/eliminant certificates when the value may actually be zero.
"""

from __future__ import annotations

import math
from typing import Optional

from .errors import ComputationError
from .poly import (
    MINUS_INFINITY,
    Polynomial,
    _resultant_any,
    reduce_by_defining,
)
from .rational import ONE, QQ, ZERO, den, num, qabs, qceil, qfloor, qsign

# ---------------------------------------------------------------------------
# integer univariate helpers (coefficient lists, low to high, lead nonzero)
# ---------------------------------------------------------------------------


def _strip_int(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _int_eval(c: list, q):
    acc = ZERO
    for k in reversed(c):
        acc = acc * q + k
    return acc


def _int_derivative(c: list) -> list:
    return [i * c[i] for i in range(1, len(c))]


def _int_primitive(c: list) -> list:
    g = 0
    for k in c:
        g = math.gcd(g, abs(k))
    if g > 1:
        c = [k // g for k in c]
    if c and c[-1] < 0:
        c = [-k for k in c]
    return c


def _rational_to_int(coeffs: list) -> list:
    """Clear denominators of a rational coefficient list."""
    lcm = 1
    for q in coeffs:
        d = den(q)
        lcm = lcm // math.gcd(lcm, d) * d
    return _int_primitive([num(q) * (lcm // den(q)) for q in coeffs])


def _uni_rem(a: list, b: list) -> list:
    """Remainder of rational coefficient lists."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        f = a[-1] / lb
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] = a[shift + i] - f * b[i]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _uni_gcd_int(a: list, b: list) -> list:
    A = [QQ(k) for k in a]
    B = [QQ(k) for k in b]
    while B:
        A, B = B, _uni_rem(A, B)
    return _int_primitive(_rational_to_int(A))


def _int_squarefree(c: list) -> list:
    d = _int_derivative(c)
    if not _strip_int(list(d)):
        return c
    g = _uni_gcd_int(c, d)
    if len(g) == 1:
        return _int_primitive(list(c))
    q = _uni_div_exact(c, g)
    return _int_primitive(q)


def _uni_div_exact(a: list, b: list) -> list:
    A = [QQ(k) for k in a]
    B = [QQ(k) for k in b]
    db = len(B) - 1
    lb = B[-1]
    quot = [ZERO] * (len(A) - db)
    while len(A) - 1 >= db and A:
        f = A[-1] / lb
        shift = len(A) - 1 - db
        quot[shift] = f
        for i in range(db + 1):
            A[shift + i] = A[shift + i] - f * B[i]
        A.pop()
        while A and A[-1] == 0:
            A.pop()
    if A:
        raise ComputationError("inexact univariate division")
    return _rational_to_int(quot)


# ---------------------------------------------------------------------------
# sign-variation machinery
# ---------------------------------------------------------------------------


def _variations(c: list) -> int:
    count = 0
    prev = 0
    for k in c:
        s = (k > 0) - (k < 0)
        if s and prev and s != prev:
            count += 1
        if s:
            prev = s
    return count


def _taylor_shift(c: list, a: int) -> list:
    c = list(c)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += a * c[j + 1]
    return c


def _transform_unit(c: list, lo, hi) -> list:
    """Integer coefficients of a positive multiple of p(lo + (hi-lo)x)."""
    n = len(c) - 1
    a, b = num(lo), den(lo)
    scaled = [c[k] * b ** (n - k) for k in range(n + 1)]
    shifted = _taylor_shift(scaled, a)
    w = hi - lo
    wn = num(w) * b
    wd = den(w)
    return [shifted[k] * wn ** k * wd ** (n - k) for k in range(n + 1)]


def _bound_roots_unit(c: list) -> int:
    """Upper bound (Descartes) on the number of roots in the open unit interval."""
    rev = list(reversed(c))
    m = _taylor_shift(rev, 1)
    return _variations(m)


def _count_bound(c: list, lo, hi) -> int:
    return _bound_roots_unit(_transform_unit(c, lo, hi))


def _root_bound(c: list):
    lead = abs(c[-1])
    biggest = max(abs(k) for k in c[:-1]) if len(c) > 1 else 0
    b = 1 + (biggest + lead - 1) // lead
    p = 1
    while p < b:
        p <<= 1
    return QQ(p)


# ---------------------------------------------------------------------------
# algebraic numbers
# ---------------------------------------------------------------------------


class AlgebraicNumber:
    """A real algebraic number: square-free integer defining polynomial plus
    an isolating interval, with an exact-rational shortcut when available.

    Refinement mutates the interval in place (same root, narrower bounds);
    at most one thread may refine a value at a time.
    """

    __slots__ = ("defining", "lo", "hi", "exact", "_sign_lo")

    def __init__(self, defining: tuple, lo, hi, exact=None, sign_lo: int = 0):
        self.defining = tuple(defining)
        self.lo = lo
        self.hi = hi
        self.exact = exact
        self._sign_lo = sign_lo

    @classmethod
    def from_rational(cls, q) -> "AlgebraicNumber":
        q = QQ(q)
        return cls((-num(q), den(q)), q, q, exact=q)

    @classmethod
    def from_interval(cls, defining: list, lo, hi) -> "AlgebraicNumber":
        slo = qsign(_int_eval(defining, lo))
        shi = qsign(_int_eval(defining, hi))
        if slo == 0 or shi == 0 or slo == shi:
            raise ComputationError("interval endpoints must straddle the root")
        return cls(tuple(defining), lo, hi, exact=None, sign_lo=slo)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def width(self):
        return self.hi - self.lo

    def halve(self) -> None:
        if self.exact is not None:
            return
        mid = (self.lo + self.hi) / 2
        s = qsign(_int_eval(self.defining, mid))
        if s == 0:
            self.exact = mid
            self.lo = self.hi = mid
            return
        if s == self._sign_lo:
            self.lo = mid
        else:
            self.hi = mid

    def refine_to(self, width) -> "AlgebraicNumber":
        while self.exact is None and self.hi - self.lo > width:
            self.halve()
        return self

    def approx(self) -> float:
        if self.exact is not None:
            return num(self.exact) / den(self.exact)
        mid = (self.lo + self.hi) / 2
        return num(mid) / den(mid)

    def defining_as(self, v: int) -> Polynomial:
        acc = Polynomial.constant(0)
        xv = Polynomial.variable(v)
        for c in reversed(self.defining):
            acc = acc * xv + Polynomial.constant(c)
        return acc

    def __repr__(self):
        if self.exact is not None:
            return f"AlgebraicNumber({self.exact})"
        return f"AlgebraicNumber(~{self.approx():.6g} in ({self.lo}, {self.hi}))"


def refine(a: AlgebraicNumber, width) -> AlgebraicNumber:
    """Shrink the isolating interval to at most the given width (same root)."""
    return a.refine_to(QQ(width))


def _nudge_lo(an: AlgebraicNumber) -> None:
    """Strictly raise the lower endpoint (or hit the root exactly)."""
    while an.exact is None:
        m = an.lo + (an.hi - an.lo) / 4
        s = qsign(_int_eval(an.defining, m))
        if s == 0:
            an.exact = m
            an.lo = an.hi = m
            return
        if s == an._sign_lo:
            an.lo = m
            return
        an.hi = m


def _nudge_hi(an: AlgebraicNumber) -> None:
    """Strictly lower the upper endpoint (or hit the root exactly)."""
    while an.exact is None:
        m = an.hi - (an.hi - an.lo) / 4
        s = qsign(_int_eval(an.defining, m))
        if s == 0:
            an.exact = m
            an.lo = an.hi = m
            return
        if s != an._sign_lo:
            an.hi = m
            return
        an.lo = m


def _tighten(an: AlgebraicNumber) -> None:
    """Strictly shrink both endpoints toward the root."""
    if an.exact is None:
        _nudge_lo(an)
    if an.exact is None:
        _nudge_hi(an)


def separate_pair(a: AlgebraicNumber, b: AlgebraicNumber) -> None:
    """Refine representations of two distinct values a < b until a.hi < b.lo."""
    while not a.hi < b.lo:
        if a.is_exact and b.is_exact:
            if a.exact == b.exact:
                raise ComputationError("cannot separate equal algebraic numbers")
            return
        if not a.is_exact:
            _nudge_hi(a)
        if a.hi < b.lo:
            return
        if not b.is_exact:
            _nudge_lo(b)


# ---------------------------------------------------------------------------
# root isolation
# ---------------------------------------------------------------------------

_DIVISOR_CAP = 1 << 20


def _divisors(n: int) -> Optional[list]:
    n = abs(n)
    if n == 0:
        return None
    if n > _DIVISOR_CAP * _DIVISOR_CAP:
        return None
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
        if i > _DIVISOR_CAP:
            return None
    return out


def _rational_roots(c: list):
    """Split off rational roots: returns (roots, reduced coefficient list)."""
    roots = []
    ps = _divisors(c[0])
    qs = _divisors(c[-1])
    if ps is None or qs is None:
        return [], c
    candidates = set()
    for p in ps:
        for q in qs:
            if math.gcd(p, q) == 1:
                candidates.add(QQ(p, q))
                candidates.add(QQ(-p, q))
    for cand in sorted(candidates):
        if _int_eval(c, cand) == 0:
            roots.append(cand)
            c = _uni_div_exact(c, [-num(cand), den(cand)])
    return roots, c


def _isolate_squarefree(c: list):
    """Isolating data for a square-free integer polynomial: a sorted list of
    (exact rational | (lo, hi) interval) pairs tagged against the input."""
    exact = []
    work = list(c)
    # roots at zero
    shift = 0
    while work and work[0] == 0:
        work.pop(0)
        shift += 1
    if shift:
        exact.append(ZERO)
    if len(work) <= 1:
        return exact, [], work
    rr, work = _rational_roots(work)
    exact.extend(rr)
    intervals = []
    if len(work) > 1:
        bound = _root_bound(work)
        stack = [(-bound, bound)]
        while stack:
            lo, hi = stack.pop()
            k = _count_bound(work, lo, hi)
            if k == 0:
                continue
            if k == 1:
                intervals.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            if _int_eval(work, mid) == 0:
                # possible only when rational extraction was skipped
                exact.append(mid)
                work = _uni_div_exact(work, [-num(mid), den(mid)])
                if len(work) <= 1:
                    break
                stack.append((lo, mid))
                stack.append((mid, hi))
            else:
                stack.append((lo, mid))
                stack.append((mid, hi))
    return exact, intervals, work


def isolate_roots(p: Polynomial) -> list:
    """All distinct real roots of a univariate polynomial, sorted ascending.

    Intervals are pairwise disjoint; rational roots come back exact.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.is_constant():
        return []
    if len(p.variables()) != 1:
        raise ValueError("root isolation needs a univariate polynomial")
    v = p.var
    coeffs = _rational_to_int([c.const for c in p.dense_in(v)])
    sqf = _int_squarefree(coeffs)
    exact, intervals, reduced = _isolate_squarefree(sqf)
    roots = [AlgebraicNumber.from_rational(q) for q in sorted(exact)]
    interval_roots = []
    for lo, hi in intervals:
        an = AlgebraicNumber.from_interval(reduced, lo, hi)
        # keep extracted rational roots outside every isolating interval
        for q in exact:
            while an.exact is None and an.lo < q < an.hi:
                an.halve()
        interval_roots.append(an)
    roots.extend(interval_roots)
    roots.sort(key=lambda a: a.lo + a.hi)
    for a, b in zip(roots, roots[1:]):
        separate_pair(a, b)
    return roots


# ---------------------------------------------------------------------------
# Sturm counting (used by exact comparison/zero certificates)
# ---------------------------------------------------------------------------


def _sturm_chain(c: list) -> list:
    chain = [[QQ(k) for k in c]]
    d = [QQ(k) for k in _int_derivative(c)]
    if d:
        chain.append(d)
    while len(chain[-1]) > 1:
        r = _uni_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-q for q in r])
    return chain


def _variations_at(chain: list, x) -> int:
    signs = []
    for c in chain:
        signs.append(qsign(_int_eval(c, x)))
    count = 0
    prev = 0
    for s in signs:
        if s and prev and s != prev:
            count += 1
        if s:
            prev = s
    return count


def count_roots_closed(c: list, lo, hi) -> int:
    """Number of distinct real roots of an integer polynomial in [lo, hi]."""
    if len(_strip_int(list(c))) <= 1:
        return 0
    chain = _sturm_chain(c)
    n = _variations_at(chain, lo) - _variations_at(chain, hi)
    if _int_eval(c, lo) == 0:
        n += 1
    return n


# ---------------------------------------------------------------------------
# comparison
# ---------------------------------------------------------------------------


def compare(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """Exact total order: -1, 0, or 1."""
    if a is b:
        return 0
    if a.is_exact and b.is_exact:
        return qsign(a.exact - b.exact)
    if a.is_exact:
        return -_compare_exact_interval(b, a.exact)
    if b.is_exact:
        return _compare_exact_interval(a, b.exact)
    for _ in range(8):
        if a.hi < b.lo:
            return -1
        if b.hi < a.lo:
            return 1
        a.halve()
        b.halve()
    g = _uni_gcd_int(list(a.defining), list(b.defining))
    if len(g) > 1:
        lo = a.lo if a.lo > b.lo else b.lo
        hi = a.hi if a.hi < b.hi else b.hi
        if lo <= hi and count_roots_closed(g, lo, hi) >= 1:
            return 0
    while True:  # values now known distinct
        if a.hi < b.lo:
            return -1
        if b.hi < a.lo:
            return 1
        if a.is_exact and b.is_exact:
            return qsign(a.exact - b.exact)
        _tighten(a)
        _tighten(b)


def _compare_exact_interval(a: AlgebraicNumber, q) -> int:
    """Sign of (a - q) for interval-represented a and exact rational q."""
    if a.lo <= q <= a.hi and _int_eval(a.defining, q) == 0:
        return 0
    while a.lo <= q <= a.hi:
        _tighten(a)
        if a.is_exact:
            return qsign(a.exact - q)
    return -1 if a.hi < q else 1


# ---------------------------------------------------------------------------
# sample points and exact sign evaluation
# ---------------------------------------------------------------------------


class SamplePoint:
    """Cell representative: one coordinate per lifted variable."""

    __slots__ = ("coords",)

    def __init__(self, coords=()):  # coords: iterable of AlgebraicNumber
        self.coords = tuple(coords)

    def __len__(self):
        return len(self.coords)

    def extend(self, value: AlgebraicNumber) -> "SamplePoint":
        return SamplePoint(self.coords + (value,))

    def rational_assignment(self) -> dict:
        return {i: c.exact for i, c in enumerate(self.coords) if c.is_exact}

    def algebraic_vars(self) -> list:
        return [i for i, c in enumerate(self.coords) if not c.is_exact]

    def __repr__(self):
        return f"SamplePoint({list(self.coords)})"


def _interval_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _interval_mul(a, b):
    p1 = a[0] * b[0]
    p2 = a[0] * b[1]
    p3 = a[1] * b[0]
    p4 = a[1] * b[1]
    lo = min(p1, p2, p3, p4)
    hi = max(p1, p2, p3, p4)
    return (lo, hi)


def _interval_pow(a, e: int):
    if e == 0:
        return (ONE, ONE)
    out = a
    for _ in range(e - 1):
        out = _interval_mul(out, a)
    return out


def interval_eval(p: Polynomial, boxes: dict):
    """Exact interval enclosure of p over a box (degenerate entries allowed)."""
    if p.is_constant():
        return (p.const, p.const)
    box = boxes[p.var]
    acc = (ZERO, ZERO)
    prev_e = None
    for e, c in reversed(p.coeffs):
        if prev_e is not None:
            acc = _interval_mul(acc, _interval_pow(box, prev_e - e))
        acc = _interval_add(acc, interval_eval(c, boxes))
        prev_e = e
    if prev_e:
        acc = _interval_mul(acc, _interval_pow(box, prev_e))
    return acc


def _boxes_for(sample: SamplePoint, variables) -> dict:
    out = {}
    for i in variables:
        c = sample.coords[i]
        if c.is_exact:
            out[i] = (c.exact, c.exact)
        else:
            out[i] = (c.lo, c.hi)
    return out


_REFINE_STEPS_BEFORE_EXACT = 24


def sign_at(p: Polynomial, sample: SamplePoint) -> int:
    """Exact sign of p at the sample point: -1, 0 or 1."""
    if p.is_constant():
        return qsign(p.const)
    if p.var >= len(sample.coords):
        raise ValueError("sample point does not cover the polynomial's variables")
    assignment = sample.rational_assignment()
    p0 = p.substitute(assignment)
    if p0.is_constant():
        return qsign(p0.const)
    for v in sorted(p0.variables(), reverse=True):
        coord = sample.coords[v]
        p0 = reduce_by_defining(p0, v, [QQ(k) for k in coord.defining])
        if p0.is_constant():
            return qsign(p0.const)
    alg_vars = sorted(p0.variables())
    # fast path: adaptive interval refinement
    for _ in range(_REFINE_STEPS_BEFORE_EXACT):
        lo, hi = interval_eval(p0, _boxes_for(sample, alg_vars))
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        for v in alg_vars:
            sample.coords[v].halve()
    return _sign_exact(p0, sample, alg_vars)


def _sign_exact(p0: Polynomial, sample: SamplePoint, alg_vars: list) -> int:
    if len(alg_vars) == 1:
        v = alg_vars[0]
        coord = sample.coords[v]
        q = _rational_to_int([c.const for c in p0.dense_in(v)])
        g = _uni_gcd_int(q, list(coord.defining))
        if len(g) > 1 and count_roots_closed(g, coord.lo, coord.hi) >= 1:
            return 0
        while True:  # value provably nonzero; refinement must resolve it
            lo, hi = interval_eval(p0, _boxes_for(sample, alg_vars))
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            coord.halve()
    # several interacting algebraic coordinates: eliminate them from t - p0
    t = max(max(p0.variables()), max(alg_vars)) + 1
    h = Polynomial.variable(t) - p0
    for v in sorted(alg_vars, reverse=True):
        d = sample.coords[v].defining_as(v)
        h = _resultant_any(h, d, v)
        if h.is_zero():
            raise ComputationError("degenerate eliminant in exact sign computation")
    coeffs = _rational_to_int([c.const for c in h.dense_in(t)])
    # strip powers of t: value is a root of the eliminant
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k == 0:
        nonzero_root = True  # 0 is not a root, so the value cannot be 0
    else:
        nonzero_root = False
        reduced = coeffs[k:]
        a0 = abs(reduced[0])
        amax = max(abs(c) for c in reduced)
        delta = QQ(a0, a0 + amax)  # every nonzero root has magnitude >= delta
    while True:
        lo, hi = interval_eval(p0, _boxes_for(sample, alg_vars))
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if not nonzero_root and -delta < lo and hi < delta:
            return 0
        for v in alg_vars:
            sample.coords[v].halve()


# ---------------------------------------------------------------------------
# partial substitution (lifting support)
# ---------------------------------------------------------------------------


class SubstitutedPolynomial:
    """A level polynomial with a sample substituted into all but its top
    variable: ready for root isolation over the sample's extension field."""

    __slots__ = ("nullified", "free_var", "source", "sample", "_rational", "_roots")

    def __init__(self, nullified, free_var, source, sample, rational):
        self.nullified = nullified
        self.free_var = free_var
        self.source = source
        self.sample = sample
        self._rational = rational
        self._roots = None

    def real_roots(self) -> list:
        if self._roots is not None:
            return self._roots
        if self.nullified:
            self._roots = []
        elif self._rational is not None:
            if self._rational.is_constant():
                self._roots = []
            else:
                self._roots = isolate_roots(self._rational)
        else:
            self._roots = self._roots_over_extension()
        return self._roots

    def _roots_over_extension(self) -> list:
        sample = self.sample
        p0 = self.source.substitute(sample.rational_assignment())
        for v in sorted(p0.variables() - {self.free_var}, reverse=True):
            p0 = reduce_by_defining(p0, v, [QQ(k) for k in sample.coords[v].defining])
        w = p0
        for v in sorted(w.variables() - {self.free_var}, reverse=True):
            d = sample.coords[v].defining_as(v)
            w = _resultant_any(w, d, v)
        if w.is_zero():
            raise ComputationError(
                "eliminant vanished identically (conjugate sample nullifies the input)"
            )
        if w.is_constant() or w.degree(self.free_var) == 0:
            return []
        candidates = isolate_roots(w)
        roots = []
        for cand in candidates:
            if self._candidate_is_root(cand, sample):
                roots.append(cand)
        return roots

    def _candidate_is_root(self, cand: AlgebraicNumber, sample: SamplePoint) -> bool:
        if cand.is_exact:
            return sign_at(self.source, sample.extend(cand)) == 0
        # The candidate's interval contains exactly one root of the eliminant,
        # so the substituted polynomial either has that root or none there; its
        # values at the rational endpoints are nonzero, making a sign change a
        # complete test except for even-multiplicity roots.
        s_lo = sign_at(self.source.substitute({self.free_var: cand.lo}), sample)
        s_hi = sign_at(self.source.substitute({self.free_var: cand.hi}), sample)
        if s_lo == 0 or s_hi == 0:
            cand.halve()
            return self._candidate_is_root(cand, sample)
        if s_lo != s_hi:
            return True
        return sign_at(self.source, sample.extend(cand)) == 0


def substitute_partial(p: Polynomial, sample: SamplePoint) -> SubstitutedPolynomial:
    """Substitute the sample into every coefficient of p's top variable.

    Nullification (every coefficient exactly zero at the sample) is reported
    on the result, not raised.
    """
    free_var = len(sample.coords)
    if any(v > free_var for v in p.variables()):
        raise ValueError("polynomial has more than one variable above the sample")
    if not sample.algebraic_vars():
        substituted = p.substitute(sample.rational_assignment())
        if substituted.is_zero():
            return SubstitutedPolynomial(True, free_var, p, sample, None)
        return SubstitutedPolynomial(False, free_var, p, sample, substituted)
    any_nonzero = False
    for _, c in sorted(p.coeffs_in(free_var).items()):
        if c.is_constant():
            any_nonzero = c.const != 0
        else:
            any_nonzero = sign_at(c, sample) != 0
        if any_nonzero:
            break
    if not any_nonzero:
        return SubstitutedPolynomial(True, free_var, p, sample, None)
    return SubstitutedPolynomial(False, free_var, p, sample, None)


# ---------------------------------------------------------------------------
# rational sample selection
# ---------------------------------------------------------------------------


def simplest_rational_between(lo, hi):
    """Simplest dyadic rational in the open interval (lo, hi)."""
    if not lo < hi:
        raise ValueError("empty interval")
    k = 0
    while True:
        s = 1 << k
        a = qfloor(lo * s) + 1
        b = qceil(hi * s) - 1
        if a <= b:
            if a <= 0 <= b:
                m = 0
            elif a > 0:
                m = a
            else:
                m = b
            return QQ(m, s)
        k += 1


def rational_below(an: AlgebraicNumber):
    b = an.lo
    f = qfloor(b)
    if an.is_exact and QQ(f) == b:
        return QQ(f - 1)
    return QQ(f)


def rational_above(an: AlgebraicNumber):
    b = an.hi
    c = qceil(b)
    if an.is_exact and QQ(c) == b:
        return QQ(c + 1)
    return QQ(c)


def rational_between(a: AlgebraicNumber, b: AlgebraicNumber):
    """An exact rational strictly between two distinct algebraic numbers (a < b)."""
    separate_pair(a, b)
    return simplest_rational_between(a.hi, b.lo)


# ---------------------------------------------------------------------------
# decimal enclosures for model printing
# ---------------------------------------------------------------------------


def _decimal_str(q, digits: int, round_up: bool) -> str:
    scale = 10 ** digits
    scaled = q * scale
    n = qceil(scaled) if round_up else qfloor(scaled)
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, scale)
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


def decimal_enclosure(an: AlgebraicNumber, digits: int):
    """Decimal strings (lo, hi) bracketing the value to the requested width."""
    an.refine_to(QQ(1, 10 ** (digits + 2)))
    if an.is_exact:
        lo = hi = an.exact
    else:
        lo, hi = an.lo, an.hi
    return _decimal_str(lo, digits, False), _decimal_str(hi, digits, True)
