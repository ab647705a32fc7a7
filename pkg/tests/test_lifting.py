"""Stack construction, reduced lifting, nullification detection."""

from realcad.lifting import (
    Cell,
    MODE_FULL,
    MODE_REDUCED,
    NullificationReport,
    build_stack,
    cell_dimension,
    lift_cell,
)
from realcad.poly import Polynomial, canonical_scalar
from realcad.projection import ProjectionLevel, TaggedPoly
from realcad.rational import QQ
from realcad.realalg import AlgebraicNumber, SamplePoint, compare, sign_at

x = Polynomial.variable(0)
y = Polynomial.variable(1)
z = Polynomial.variable(3)  # top variable of a 4-variable order w,x,y,z
w = Polynomial.variable(0)

circle = x * x + y * y - 1


def make_level(level, polys):
    pl = ProjectionLevel(level)
    for i, p in enumerate(polys):
        pl.entries.add(TaggedPoly(canonical_scalar(p), {frozenset({i})}, "input", "input"))
    return pl


def base_cell(level, index, *values):
    coords = [AlgebraicNumber.from_rational(QQ(v)) for v in values]
    return Cell(level=level, index=tuple(index), sample=SamplePoint(coords))


def test_cell_dimension_examples():
    assert cell_dimension(base_cell(2, (1, 1), 0, 0)) == 2
    assert cell_dimension(base_cell(2, (2, 2), 0, 0)) == 0
    assert cell_dimension(base_cell(2, (2, 1), 0, 0)) == 1


def test_full_lift_circle_over_inner_sector():
    base = base_cell(1, (3,), 0)  # x in (-1, 1), sample 0
    cells = lift_cell(base, make_level(2, [circle]), MODE_FULL)
    assert isinstance(cells, list) and len(cells) == 5
    values = [c.sample.coords[1] for c in cells]
    assert values[1].exact == QQ(-1) and values[3].exact == QQ(1)
    assert values[0].exact < QQ(-1) and values[2].exact == QQ(0) and values[4].exact > QQ(1)
    assert [c.index[-1] for c in cells] == [1, 2, 3, 4, 5]


def test_full_lift_no_roots_single_sector():
    base = base_cell(1, (1,), -1)
    cells = lift_cell(base, make_level(2, [circle]), MODE_FULL)
    # x=-1 gives y^2 = 0: wait, that has a root; use x=-2 instead
    base = base_cell(1, (1,), -2)
    cells = lift_cell(base, make_level(2, [circle]), MODE_FULL)
    assert len(cells) == 1 and cells[0].index[-1] == 1


def test_nullification_report_positive_dimension():
    # order w < x < y < z; lift {x*z + y} over the cell w free, x = 0, y = 0
    xz_y = Polynomial.variable(1) * z + Polynomial.variable(2)
    base = base_cell(3, (1, 2, 2), 0, 0, 0)
    out = lift_cell(base, make_level(4, [xz_y]), MODE_FULL, operator="mccallum")
    assert isinstance(out, NullificationReport)
    assert out.cell_dimension == 1 and out.level == 4
    assert out.polynomial == canonical_scalar(xz_y)


def test_nullification_tolerated_dimension_zero():
    xz_y = x * Polynomial.variable(2) + y  # x*z + y in a 3-variable order
    base = base_cell(2, (2, 2), 0, 0)  # point cell x=0, y=0
    cells = lift_cell(base, make_level(3, [xz_y]), MODE_FULL, operator="mccallum")
    assert isinstance(cells, list) and len(cells) == 1  # no sections contributed


def test_nullification_tolerated_under_wide_operator():
    xz_y = Polynomial.variable(1) * z + Polynomial.variable(2)
    base = base_cell(3, (1, 2, 2), 0, 0, 0)
    cells = lift_cell(base, make_level(4, [xz_y]), MODE_FULL, operator="collins")
    assert isinstance(cells, list) and len(cells) == 1


def test_reduced_lift_decomposes_only_at_ec_roots():
    base = base_cell(1, (3,), 0)
    level = make_level(2, [circle, x + y])
    full = lift_cell(base, level, MODE_FULL)
    assert len(full) == 7  # circle roots -1, 1 plus the line root 0
    base2 = base_cell(1, (3,), 0)
    ec = canonical_scalar(circle)
    reduced = lift_cell(base2, level, MODE_REDUCED, ec=ec)
    assert len(reduced) == 5
    line = canonical_scalar(x + y)
    recorded = [c.sign_cache.get(line) for c in reduced]
    assert recorded[1] == -1 and recorded[3] == 1  # signs at the sections y=-1, y=1


def test_reduced_sections_satisfy_ec():
    base = base_cell(1, (3,), 0)
    level = make_level(2, [circle, x + y])
    cells = lift_cell(base, level, MODE_REDUCED, ec=canonical_scalar(circle))
    for c in cells:
        if c.index[-1] % 2 == 0:
            assert sign_at(circle, c.sample) == 0


def test_recorded_signs_stable_under_refinement():
    base = base_cell(1, (3,), QQ(1, 2))
    level = make_level(2, [circle, x + y - 1])
    line = canonical_scalar(x + y - 1)
    cells = lift_cell(base, level, MODE_REDUCED, ec=canonical_scalar(circle))
    for c in cells:
        if c.index[-1] % 2 != 0:
            continue
        recorded = c.sign_cache[line]
        for coord in c.sample.coords:
            coord.halve()
        assert sign_at(x + y - 1, c.sample) == recorded


def test_stack_well_formedness():
    base = base_cell(1, (3,), QQ(1, 2))
    level = make_level(2, [circle, y - x, y * y - x])
    cells = lift_cell(base, level, MODE_FULL)
    sections = [c.sample.coords[1] for c in cells if c.index[-1] % 2 == 0]
    for a, b in zip(sections, sections[1:]):
        assert compare(a, b) == -1
    for i, c in enumerate(cells):
        if c.index[-1] % 2 == 1 and 0 < i < len(cells) - 1:
            below = cells[i - 1].sample.coords[1]
            above = cells[i + 1].sample.coords[1]
            assert compare(below, c.sample.coords[1]) == -1
            assert compare(c.sample.coords[1], above) == -1


def test_sector_sign_invariance_probes():
    base = base_cell(1, (3,), 0)
    level = make_level(2, [circle])
    cells = lift_cell(base, level, MODE_FULL)
    # middle sector (-1, 1): probe two more rationals inside
    mid = cells[2]
    s = sign_at(circle, mid.sample)
    for probe in (QQ(-1, 2), QQ(1, 2)):
        probe_sample = base.sample.extend(AlgebraicNumber.from_rational(probe))
        assert sign_at(circle, probe_sample) == s


def test_merged_roots_tag_all_sources():
    base = base_cell(1, (3,), 0)
    level = make_level(2, [y * y - 1, y - 1])  # share the root y = 1
    cells = lift_cell(base, level, MODE_FULL)
    assert len(cells) == 5
    section_plus = cells[3]
    assert section_plus.sign_cache.get(canonical_scalar(y * y - 1)) == 0
    assert section_plus.sign_cache.get(canonical_scalar(y - 1)) == 0


def test_build_stack_empty_roots():
    base = base_cell(0, (), )
    cells = build_stack(base, [])
    assert len(cells) == 1 and cells[0].sample.coords[0].exact == 0
