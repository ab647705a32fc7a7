"""Projection operators, equation designation and propagation."""

import random

import pytest

from realcad.errors import PrimitivityError
from realcad.formula import And, Atom, Or
from realcad.poly import Polynomial, canonical_scalar
from realcad.projection import (
    ECDesignation,
    NoEC,
    PolySet,
    ProjectionLevel,
    TaggedPoly,
    choose_ec,
    project_collins,
    project_mccallum,
    project_reduced,
    propagate_ec,
)
from realcad.rational import QQ

x = Polynomial.variable(0)
y = Polynomial.variable(1)
z = Polynomial.variable(2)


def make_level(level: int, polys, op="input") -> ProjectionLevel:
    pl = ProjectionLevel(level)
    for i, p in enumerate(polys):
        pl.entries.add(TaggedPoly(canonical_scalar(p), {frozenset({i})}, op, "input"))
    return pl


def out_polys(result) -> set:
    return {t.poly for t in result.outputs}


circle = x * x + y * y - 1


def test_mccallum_circle():
    res = project_mccallum(make_level(2, [circle]))
    assert out_polys(res) == {canonical_scalar(x * x - 1)}


def test_mccallum_pair():
    res = project_mccallum(make_level(2, [y * y - x, y - x]))
    assert out_polys(res) == {x, canonical_scalar(x * x - x)}
    assert res.raw.disc_res == 2  # one discriminant, one resultant


def test_mccallum_empty():
    res = project_mccallum(make_level(2, []))
    assert len(res.outputs) == 0 and res.raw.emissions == 0


def test_mccallum_raw_count_law():
    rng = random.Random(5)
    for n in (3, 4, 5):
        polys = []
        for _ in range(n):
            a, b, c, d, e = (rng.randint(-5, 5) for _ in range(5))
            polys.append(y * y + a * x * y + b * x * x + c * x + d * y + e)
        res = project_mccallum(make_level(2, polys))
        assert res.raw.disc_res == n * (n + 1) // 2


def test_collins_circle():
    res = project_collins(make_level(2, [circle]))
    assert out_polys(res) == {canonical_scalar(x * x - 1)}


def test_collins_monic_linear_projects_to_nothing():
    res = project_collins(make_level(2, [y - x]))
    assert out_polys(res) == set()


def test_collins_empty():
    res = project_collins(make_level(2, []))
    assert len(res.outputs) == 0


def test_collins_contains_mccallum_zero_sets_for_vanishing_lead():
    # leading coefficient y can vanish, so the trailing reductum x must survive
    f = y * z + x
    res = project_collins(make_level(3, [f]))
    assert x in out_polys(res) and y in out_polys(res)


def test_reduced_circle_halfplane():
    level = make_level(2, [circle, y - x])
    ec = ECDesignation(2, canonical_scalar(circle), frozenset({0}), "input")
    res = project_reduced(ec, level)
    assert out_polys(res) == {
        canonical_scalar(x * x - 1),
        canonical_scalar(2 * x * x - 1),
    }
    assert res.raw.disc_res == 2


def test_reduced_raw_count_law():
    rng = random.Random(9)
    for n in (3, 4, 5):
        polys = []
        for _ in range(n):
            a, b, c, d, e = (rng.randint(-5, 5) for _ in range(5))
            polys.append(y * y + a * x * y + b * x * x + c * x + d * y + e)
        level = make_level(2, polys)
        ec = ECDesignation(2, level.polys()[0], frozenset({0}), "input")
        res = project_reduced(ec, level)
        assert res.raw.disc_res == n


def test_reduced_subset_of_mccallum_union():
    rng = random.Random(11)
    for _ in range(15):
        polys = []
        for _ in range(3):
            a, b, c, d = (rng.randint(-4, 4) for _ in range(4))
            p = y * y + a * x * y + b * x + c * y + d
            polys.append(p)
        level = make_level(2, polys)
        ec = ECDesignation(2, level.polys()[0], frozenset({0}), "input")
        reduced = out_polys(project_reduced(ec, level))
        mcc = out_polys(project_mccallum(level))
        single = out_polys(project_mccallum(make_level(2, [level.polys()[0]])))
        assert reduced <= mcc | single


def test_reduced_primitivity_gate():
    f = x * z + x  # content x in z
    level = make_level(3, [f])
    ec = ECDesignation(3, canonical_scalar(f), frozenset({0}), "input")
    with pytest.raises(PrimitivityError):
        project_reduced(ec, level)


def test_outputs_free_of_projected_variable():
    rng = random.Random(13)
    for _ in range(10):
        polys = []
        for _ in range(3):
            a, b, c = (rng.randint(-4, 4) for _ in range(3))
            polys.append(y * y * (a if a else 1) + b * x * y + c * x * x + x + 1)
        level = make_level(2, polys)
        for result in (project_mccallum(level), project_collins(level)):
            for t in result.outputs:
                assert 1 not in t.poly.variables()


def test_determinism():
    polys = [circle, y - x, y * y - x]
    a = project_mccallum(make_level(2, polys))
    b = project_mccallum(make_level(2, polys))
    assert [t.poly for t in a.outputs] == [t.poly for t in b.outputs]


# --- EC designation and propagation ----------------------------------------------


def test_choose_ec_basic():
    matrix = And([Atom(circle, "=", 0), Atom(x + y, ">", 1)])
    ec = choose_ec(matrix, 2)
    assert ec is not None and ec.poly == canonical_scalar(circle)
    assert ec.origins == frozenset({0}) and ec.provenance == "input"


def test_choose_ec_none_without_equation():
    matrix = And([Atom(x, ">", 0), Atom(y, ">", 1)])
    assert choose_ec(matrix, 2) is None


def test_choose_ec_ignores_disjunctive_shape():
    matrix = Or([
        And([Atom(circle, "=", 0), Atom(x, ">", 1)]),
        And([Atom(y - x, "=", 2), Atom(x, "<", 3)]),
    ])
    assert choose_ec(matrix, 2) is None


def test_choose_ec_tiebreak_prefers_low_degree():
    matrix = And([Atom(circle, "=", 0), Atom(y - x, "=", 1)])
    ec = choose_ec(matrix, 2)
    assert ec.poly == canonical_scalar(y - x)


def test_choose_ec_skips_nonprimitive():
    matrix = And([Atom(x * z + x, "=", 0), Atom(z - x, ">", 1)])
    ec = choose_ec(matrix, 3)
    assert ec is None


def test_propagate_circle_line():
    f1 = ECDesignation(2, canonical_scalar(circle), frozenset({0}), "input")
    f2 = ECDesignation(2, canonical_scalar(y - x), frozenset({1}), "input")
    out = propagate_ec(f1, f2)
    assert isinstance(out, ECDesignation)
    assert out.level == 1 and out.provenance == "propagated"
    assert out.poly == canonical_scalar(2 * x * x - 1)
    assert out.origins == frozenset({0, 1})


def test_propagate_self_is_no_ec():
    f = ECDesignation(2, canonical_scalar(circle), frozenset({0}), "input")
    out = propagate_ec(f, f)
    assert isinstance(out, NoEC) and not out.proves_unsat


def test_propagate_contradiction_flags_unsat():
    f1 = ECDesignation(2, canonical_scalar(y - 1), frozenset({0}), "input")
    f2 = ECDesignation(2, canonical_scalar(y + 1), frozenset({1}), "input")
    out = propagate_ec(f1, f2)
    assert isinstance(out, NoEC) and out.proves_unsat


def test_propagated_origin_union_and_no_level_var():
    f1 = ECDesignation(3, canonical_scalar(z * z - x), frozenset({4}), "input")
    f2 = ECDesignation(3, canonical_scalar(z - y), frozenset({7}), "input")
    out = propagate_ec(f1, f2)
    assert isinstance(out, ECDesignation)
    assert 2 not in out.poly.variables()
    assert out.origins == frozenset({4, 7})
