"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance is exact and every runtime cap is asserted.
"""

import math
import random
import time

from realcad.bench import FamilySpec, projection_counts
from realcad.engine import BuildOptions, build, normalized_level_sets
from realcad.formula import And, Atom, FREE, Formula
from realcad.poly import Polynomial
from realcad.projection import OP_MCCALLUM, OP_REDUCED
from realcad.realalg import isolate_roots, sign_at
from realcad.rational import QQ

x = Polynomial.variable(0)
y = Polynomial.variable(1)
circle = x * x + y * y - 1

_INEQ = ("<", "<=", ">", ">=", "!=")


def report(number: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number}: {status} - {detail}")
    assert ok, detail


# -- 1. projection size reduction ----------------------------------------------------


def test_criterion_1_projection_counts():
    t0 = time.monotonic()
    checked = 0
    for n in (3, 4, 5):
        for seed in range(20):
            spec = FamilySpec(n_vars=2, degree=2, n_constraints=n, n_ecs=1, seed=seed)
            mcc = projection_counts(spec, "mccallum").stats.per_level_raw[2].disc_res
            red = projection_counts(spec, "ec-reduced").stats.per_level_raw[2].disc_res
            assert mcc == n * (n + 1) // 2, (n, seed, mcc)
            assert red == n, (n, seed, red)
            checked += 1
    elapsed = time.monotonic() - t0
    report(1, elapsed < 10.0,
           f"raw disc+resultant counts exactly n(n+1)/2 vs n on {checked} instances "
           f"({elapsed:.2f}s < 10s)")


# -- 2. operator oracle equivalence ---------------------------------------------------


def _random_poly(rng: random.Random, n_vars: int, max_deg: int, max_terms: int) -> Polynomial:
    while True:
        terms: dict = {}
        for _ in range(rng.randint(1, max_terms)):
            total = rng.randint(0, max_deg)
            exps: dict = {}
            for _ in range(total):
                v = rng.randrange(n_vars)
                exps[v] = exps.get(v, 0) + 1
            mono = tuple(sorted(exps.items()))
            terms[mono] = terms.get(mono, 0) + rng.randint(-5, 5)
        p = Polynomial.from_terms({k: QQ(v) for k, v in terms.items() if v})
        if not p.is_constant():
            return p


def _random_instance(seed: int) -> Formula:
    rng = random.Random(seed)
    n_vars = 2 if rng.random() < 0.75 else 3
    n_constraints = rng.randint(2, 4) if n_vars == 2 else 2
    max_deg = 3 if n_vars == 2 else 2
    n_eq = rng.randint(1, 2) if n_vars == 2 else 1
    atoms = []
    for i in range(n_constraints):
        p = _random_poly(rng, n_vars, max_deg, 3)
        rel = "=" if i < n_eq else rng.choice(_INEQ)
        atoms.append(Atom(p, rel))
    matrix = atoms[0] if len(atoms) == 1 else And(atoms)
    return Formula((FREE,) * n_vars, matrix)


def test_criterion_2_operator_oracle_equivalence():
    t0 = time.monotonic()
    total = 100
    for seed in range(total):
        kinds = set()
        for policy in ("collins", "mccallum", "ec-reduced"):
            state = build(_random_instance(seed), BuildOptions(policy=policy))
            kinds.add(state.check_sat().kind)
        assert len(kinds) == 1, f"verdicts diverge at seed {seed}: {kinds}"
    elapsed = time.monotonic() - t0
    report(2, elapsed < 300.0,
           f"{total} random instances agree under all three policies "
           f"({elapsed:.1f}s < 300s)")


# -- 3. incremental coherence ----------------------------------------------------------


def test_criterion_3_incremental_coherence():
    t0 = time.monotonic()
    scripts = 50
    for seed in range(scripts):
        rng = random.Random(10_000 + seed)
        n_vars = 2
        state = build(
            Formula((FREE,) * n_vars, Atom(_random_poly(rng, n_vars, 2, 3), "=")),
        )
        live = dict(state._atoms)
        for _ in range(rng.randint(1, 6)):
            if live and rng.random() < 0.4:
                victim = rng.choice(sorted(live))
                state.remove(victim)
                del live[victim]
            else:
                rel = rng.choice(("=",) + _INEQ)
                cid = state.add(_random_poly(rng, n_vars, 2, 3), rel)
                live = dict(state._atoms)
        fresh = build(
            Formula((FREE,) * n_vars, state.matrix),
            BuildOptions(policy=state.options.policy),
        )
        assert state.check_sat().kind == fresh.check_sat().kind, seed
        assert normalized_level_sets(state) == normalized_level_sets(fresh), seed
    elapsed = time.monotonic() - t0
    report(3, elapsed < 300.0,
           f"{scripts} random add/remove scripts match from-scratch builds exactly "
           f"({elapsed:.1f}s < 300s)")


# -- 4. EC removal escalation ------------------------------------------------------------


def test_criterion_4_ec_removal_escalation():
    t0 = time.monotonic()
    state = build(Formula((FREE, FREE), And([Atom(circle, "="), Atom(x + y, ">")])))
    assert state.ops[2] == OP_REDUCED
    ec_cid = [a.cid for a in state._atoms.values() if a.rel == "="][0]
    state.remove(ec_cid)
    assert state.ops[2] == OP_MCCALLUM
    flagged = [c for c in state.stats.operator_changes
               if c["cause"] == "ec-removed" and c["from"] == "reduced"]
    assert flagged, state.stats.operator_changes
    fresh = build(Formula((FREE, FREE), Atom(x + y, ">")))
    assert state.check_sat().kind == fresh.check_sat().kind
    assert normalized_level_sets(state) == normalized_level_sets(fresh)
    elapsed = time.monotonic() - t0
    report(4, elapsed < 1.0,
           f"EC removal flips reduced->mccallum with stats flag and matching verdict "
           f"({elapsed:.2f}s < 1s)")


# -- 5. well-orientedness repair ------------------------------------------------------------


def test_criterion_5_nullification_repair():
    t0 = time.monotonic()
    xv = Polynomial.variable(1)
    yv = Polynomial.variable(2)
    zv = Polynomial.variable(3)
    formula = Formula((FREE,) * 4, Atom(xv * zv + yv, "="))
    state = build(formula, BuildOptions(policy="mccallum"))
    assert len(state.stats.nullifications) == 1, state.stats.nullifications
    assert state.stats.repairs == 1
    assert state.ops[4] == "collins"
    verdict = state.check_sat()
    collins = build(formula, BuildOptions(policy="collins")).check_sat()
    assert verdict.kind == collins.kind
    elapsed = time.monotonic() - t0
    report(5, elapsed < 10.0,
           f"exactly one nullification, repair escalates, verdict matches the "
           f"wide-operator run ({elapsed:.2f}s < 10s)")


# -- 6. root isolation oracle ------------------------------------------------------------------


def _oracle_sturm_count(coeffs: list) -> int:
    from fractions import Fraction

    def strip(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    def rem(a, b):
        a = list(a)
        while a and len(a) >= len(b):
            f = a[-1] / b[-1]
            off = len(a) - len(b)
            for i, bc in enumerate(b):
                a[off + i] -= f * bc
            a.pop()
            strip(a)
        return a

    p = strip([Fraction(c) for c in coeffs])
    chain = [p, strip([Fraction(i * c) for i, c in enumerate(coeffs)][1:])]
    while len(chain[-1]) > 1:
        r = rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    chain = [c for c in chain if c]

    def variations(signs):
        out, prev = 0, 0
        for s in signs:
            if s and prev and s != prev:
                out += 1
            if s:
                prev = s
        return out

    def sign_inf(c, positive):
        lead = c[-1]
        if not positive and (len(c) - 1) % 2 == 1:
            lead = -lead
        return (lead > 0) - (lead < 0)

    return variations([sign_inf(c, False) for c in chain]) - variations(
        [sign_inf(c, True) for c in chain]
    )


def _is_squarefree(coeffs: list) -> bool:
    from fractions import Fraction

    def strip(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    a = strip([Fraction(c) for c in coeffs])
    b = strip([Fraction(i * c) for i, c in enumerate(coeffs)][1:])
    while b:
        a, b = b, _rem_frac(a, b)
    return len(a) == 1


def test_criterion_6_root_isolation_oracle():
    from fractions import Fraction

    t0 = time.monotonic()
    rng = random.Random(424242)
    done = 0
    while done < 500:
        deg = rng.randint(1, 8)
        coeffs = [rng.randint(-20, 20) for _ in range(deg)] + [rng.randint(1, 20)]
        p = Polynomial.from_terms({((0, i),): QQ(c) for i, c in enumerate(coeffs) if c})
        if p.is_constant() or not _is_squarefree(coeffs):
            continue
        expected = _oracle_sturm_count(coeffs)
        roots = isolate_roots(p)
        assert len(roots) == expected, (coeffs, len(roots), expected)
        for r1, r2 in zip(roots, roots[1:]):
            assert r1.hi < r2.lo or (r1.is_exact and r2.is_exact and r1.exact < r2.exact)
        for r in roots:
            if r.is_exact:
                assert _eval_frac(coeffs, Fraction(int(r.exact.numerator),
                                                   int(r.exact.denominator))) == 0
            else:
                lo = Fraction(int(r.lo.numerator), int(r.lo.denominator))
                hi = Fraction(int(r.hi.numerator), int(r.hi.denominator))
                assert _eval_frac(coeffs, lo) * _eval_frac(coeffs, hi) < 0
        done += 1
    elapsed = time.monotonic() - t0
    report(6, elapsed < 30.0,
           f"500 isolations match the independent Sturm oracle with disjoint "
           f"sign-change intervals ({elapsed:.1f}s < 30s)")


def _rem_frac(a, b):
    a = list(a)
    while a and len(a) >= len(b):
        f = a[-1] / b[-1]
        off = len(a) - len(b)
        for i, bc in enumerate(b):
            a[off + i] -= f * bc
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _eval_frac(coeffs, q):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * q + c
    return acc


# -- 7. named instances -----------------------------------------------------------------------


def test_criterion_7_named_instances():
    from realcad.formula import EXISTS, FORALL

    t0 = time.monotonic()
    unsat = build(Formula((FREE, FREE), And([Atom(circle, "="), Atom(x + y - 2, ">")])))
    assert unsat.check_sat().kind == "unsat"
    t_unsat = time.monotonic() - t0

    t0 = time.monotonic()
    sat = build(Formula((FREE, FREE), And([Atom(circle, "="), Atom(x + y - 1, ">")])))
    verdict = sat.check_sat()
    assert verdict.kind == "sat"
    assert sign_at(circle, verdict.witness) == 0
    assert sign_at(x + y - 1, verdict.witness) == 1
    t_sat = time.monotonic() - t0

    t0 = time.monotonic()
    assert build(Formula((FORALL,), Atom(x * x + 1, ">"))).decide().kind == "true"
    t_true = time.monotonic() - t0

    t0 = time.monotonic()
    assert build(Formula((EXISTS,), Atom(x * x + 1, "="))).decide().kind == "false"
    t_false = time.monotonic() - t0

    ok = max(t_unsat, t_sat, t_true, t_false) < 1.0
    report(7, ok,
           f"named instances all verified (worst "
           f"{max(t_unsat, t_sat, t_true, t_false):.3f}s < 1s each)")


# -- 8. growth trend ---------------------------------------------------------------------------


def _slope(xs, ys) -> float:
    lx = [math.log(v) for v in xs]
    ly = [math.log(v) for v in ys]
    n = len(xs)
    mean_x = sum(lx) / n
    mean_y = sum(ly) / n
    num = sum((a - mean_x) * (b - mean_y) for a, b in zip(lx, ly))
    den = sum((a - mean_x) ** 2 for a in lx)
    return num / den


def test_criterion_8_growth_trend():
    t0 = time.monotonic()
    ns = list(range(3, 11))
    mcc_counts = []
    red_counts = []
    for n in ns:
        spec = FamilySpec(n_vars=2, degree=2, n_constraints=n, n_ecs=1, seed=0)
        mcc_counts.append(projection_counts(spec, "mccallum").stats.per_level_raw[2].disc_res)
        red_counts.append(projection_counts(spec, "ec-reduced").stats.per_level_raw[2].disc_res)
    mcc_slope = _slope(ns, mcc_counts)
    red_slope = _slope(ns, red_counts)
    assert abs(mcc_slope - 2.0) <= 0.3, mcc_slope
    assert abs(red_slope - 1.0) <= 0.3, red_slope
    elapsed = time.monotonic() - t0
    report(8, True,
           f"log-log growth slopes {mcc_slope:.2f}~2 (small operator) vs "
           f"{red_slope:.2f}~1 (reduced) over n=3..10 ({elapsed:.2f}s)")
