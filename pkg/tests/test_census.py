from toricdeg.census import census0_shapes, census1_shapes, compare_census
from toricdeg.polygon import are_equivalent, canonical_form, invariants


def test_census0_d8_exactly_the_table_families():
    cmp = compare_census(0, 8)
    assert len(cmp.classes) == 25
    assert len(cmp.matched) == 25
    assert not cmp.mirror_surplus
    assert not cmp.extra
    assert not cmp.missing


def test_census0_families_pairwise_inequivalent():
    shapes = census0_shapes(8)
    keys = {canonical_form(P).vertices for _, P in shapes}
    assert len(keys) == len(shapes)


def test_census1_fourteen_table_shapes_all_found():
    cmp = compare_census(1, 9)
    assert len(cmp.matched) == 14
    assert not cmp.missing


def test_census1_surplus_structure():
    # under determinant-+1 equivalence four table shapes split into mirror
    # pairs, and two shapes are missing from the pictures entirely
    cmp = compare_census(1, 9)
    assert len(cmp.classes) == 20
    assert len(cmp.mirror_surplus) == 4
    assert sorted(set(cmp.mirror_surplus.values())) == [
        "P1(3,6,3)",
        "P1(4,5,2)",
        "P1(4,6,2)",
        "P1(4,7,3)",
    ]
    extra = sorted(tuple(invariants(C))[:3] for C in cmp.extra)
    # the degree-3 triangle and the cubic Veronese triangle
    assert extra == [(1, 3, 3), (1, 3, 9)]


def test_census1_table_invariants():
    expected = {
        "P1(3,8,4)": (1, 3, 8, 4),
        "P1(6,6,1)": (1, 6, 6, 1),
        "P1(4,8,3)": (1, 4, 8, 3),
        "P1(5,5,1)": (1, 5, 5, 1),
    }
    shapes = dict(census1_shapes())
    for name, (g, l, d, m) in expected.items():
        inv = invariants(shapes[name])
        assert (inv.g, inv.l, inv.d, inv.m) == (g, l, d, m)


def test_census1_quartic_quadrilaterals_inequivalent():
    shapes = dict(census1_shapes())
    assert not are_equivalent(shapes["P1(4,4,1)"], shapes["P1(4,4,1)'"])
