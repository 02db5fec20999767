from math import comb

import pytest

from toricdeg.families import (
    cone_polygon,
    delightful_strip_family,
    fan_triangulation,
    scroll_polygon,
)
from toricdeg.polygon import LatticePolygon, invariants, lattice_points
from toricdeg.regularity import is_regular
from toricdeg.secant import (
    CatalogMissError,
    NotDecidableError,
    SmoothnessError,
    catalog_lookup,
    classify_singularities,
    count_skew_k_sets,
    find_delightful,
    is_k_delightful,
    lower_bound_nu_k,
    nu2_toric_smooth,
)
from toricdeg.triangulation import (
    canonical_key,
    canonical_key_gl,
    enumerate_triangulations,
    equivalent_triangulations,
    mirror_triangulation,
    star,
)

from figures import (
    DELPEZZO8,
    HEXAGON,
    RECT_2x3,
    VERONESE,
    build,
    delpezzo8_delightful_pair,
    fig5_hexagon_delightful,
    hexagon_central,
    rectangle_D,
    rectangle_Dprime,
    veronese_staircase,
)


def test_skew_counts_hexagon_and_staircase():
    assert count_skew_k_sets(hexagon_central(), 2) == 0
    assert count_skew_k_sets(veronese_staircase(), 2) == 12


def test_skew_counts_rectangle():
    assert count_skew_k_sets(rectangle_D(), 2) == 28


def test_skew_k1_returns_triangle_count():
    D = hexagon_central()
    assert count_skew_k_sets(D, 1) == 6


def test_skew_count_agrees_with_naive():
    from oracles import naive_skew_count

    ds = [hexagon_central(), veronese_staircase(), rectangle_D(), rectangle_Dprime()]
    for P in (scroll_polygon(2, 3), LatticePolygon([(0, 0), (2, 0), (1, 2), (0, 1)])):
        ds.extend(enumerate_triangulations(P))
    for D in ds:
        for k in (1, 2, 3):
            assert count_skew_k_sets(D, k) == naive_skew_count(D, k)


def test_nu2_formula_examples():
    assert nu2_toric_smooth(HEXAGON) == 3
    assert nu2_toric_smooth(VERONESE) == 15
    assert nu2_toric_smooth(RECT_2x3) == 35


def test_nu2_formula_rejects_singular():
    with pytest.raises(SmoothnessError):
        nu2_toric_smooth(cone_polygon(4))
    with pytest.raises(SmoothnessError):
        nu2_toric_smooth(LatticePolygon([(0, 0), (4, 0), (0, 2)]))


def test_nu2_formula_matches_catalog_on_scrolls():
    for d1 in range(1, 5):
        for d2 in range(d1, 9 - d1):
            P = scroll_polygon(d1, d2)
            d = d1 + d2
            if d < 4:
                continue
            assert nu2_toric_smooth(P) == comb(d - 2, 2) == catalog_lookup(P, 2).nu


def test_catalog_scrolls():
    e = catalog_lookup(scroll_polygon(2, 2), 2)
    assert e.family_tag == "scroll(2,2)" and e.nu == 1 and e.dim_sec == 5
    e = catalog_lookup(scroll_polygon(2, 5), 3)
    assert e.nu == comb(3, 3) == 1 and e.dim_sec == 8
    e = catalog_lookup(scroll_polygon(1, 6), 3)
    assert e.nu is None  # line directrix: 3-defective
    e = catalog_lookup(scroll_polygon(1, 1), 2)
    assert e.nu is None  # fills the ambient P^3


def test_catalog_g1():
    e = catalog_lookup(VERONESE, 2)
    assert e.family_tag == "Veronese3" and (e.dim_sec, e.nu) == (5, 15)
    e = catalog_lookup(VERONESE, 3)
    assert (e.dim_sec, e.nu) == (8, 4)
    e = catalog_lookup(DELPEZZO8, 3)
    assert e.family_tag == "delPezzo8" and (e.dim_sec, e.nu) == (8, 1)
    quadric = LatticePolygon([(0, 0), (2, 0), (2, 2), (0, 2)])
    e = catalog_lookup(quadric, 3)
    assert e.dim_sec == 7 and e.nu is None
    e = catalog_lookup(quadric, 2)
    assert e.nu == 10
    cone = LatticePolygon([(0, 0), (4, 0), (0, 2)])
    e = catalog_lookup(cone, 2)
    assert e.family_tag == "coneV2" and e.nu == 10
    quartic = LatticePolygon([(0, 0), (2, 0), (1, 2)])
    assert catalog_lookup(quartic, 2).nu is None


def test_catalog_misses_genus_two():
    with pytest.raises(CatalogMissError):
        catalog_lookup(RECT_2x3, 2)


def test_catalog_veronese2_defective():
    e = catalog_lookup(LatticePolygon([(0, 0), (2, 0), (0, 2)]), 2)
    assert e.family_tag == "Veronese2" and e.dim_sec == 4 and e.nu is None


def test_classify_hexagon_center():
    recs = classify_singularities(hexagon_central())
    assert len(recs) == 1
    r = recs[0]
    assert r.point == (1, 1) and r.kind == "elliptic" and r.degree == 6
    assert r.nu2 == 3 and r.nu3 is None and r.d1_exists


def test_classify_table1_row1_fan():
    P = scroll_polygon(1, 3)
    D = fan_triangulation(P, (1, 1))
    recs = classify_singularities(D)
    by_point = {r.point: r for r in recs}
    assert by_point[(1, 1)].kind == "rational"
    assert by_point[(1, 1)].degree == 4
    assert by_point[(1, 1)].nu2 == 1


def test_classify_skips_degree_three():
    D = rectangle_Dprime()
    points = {r.point for r in classify_singularities(D)}
    assert (1, 2) not in points  # three triangles only
    assert (3, 1) not in points  # non-convex star


def test_classify_rectangle_pair():
    left = {r.point: r for r in classify_singularities(rectangle_D())}
    assert left[(1, 0)].kind == "rational" and left[(1, 0)].nu2 == 3
    assert left[(1, 1)].kind == "elliptic" and left[(1, 1)].nu2 == 3
    assert left[(2, 1)].kind == "elliptic" and left[(2, 1)].nu2 == 1
    assert set(left) == {(1, 0), (1, 1), (2, 1)}

    right = {r.point: r for r in classify_singularities(rectangle_Dprime())}
    assert set(right) == {(1, 0), (1, 1), (2, 1)}
    assert right[(1, 0)].nu2 == 3
    assert right[(1, 1)].nu2 == 1 and right[(2, 1)].nu2 == 1


def test_classify_excludes_cone_and_veronese2_stars():
    D = fan_triangulation(cone_polygon(5), (0, 1))
    assert classify_singularities(D) == []
    v2 = LatticePolygon([(0, 0), (2, 0), (0, 2)])
    D = fan_triangulation(v2, (1, 0))
    assert classify_singularities(D) == []


def test_lower_bound_hexagon_central():
    lb = lower_bound_nu_k(hexagon_central(), 2)
    assert lb.skew_sets == 0 and lb.value == 3
    assert not lb.warnings


def test_lower_bound_rectangle_pair():
    lb = lower_bound_nu_k(rectangle_D(), 2)
    assert lb.skew_sets == 28
    assert lb.value == 35 == nu2_toric_smooth(RECT_2x3)
    contributions = sorted(t.contribution for t in lb.terms if t.used)
    assert contributions == [1, 3, 3]

    lb = lower_bound_nu_k(rectangle_Dprime(), 2)
    assert lb.value == 33 < 35
    assert sorted(t.contribution for t in lb.terms if t.used) == [1, 1, 3]


def test_lower_bound_nu3_on_scroll_star():
    # a degree-7 fan star over S(2,5) inside S(2,7) contributes to nu_3
    P = scroll_polygon(2, 7)
    tris = [((1, 1), (0, 1), (0, 0))]
    for j in range(5):
        tris.append(((1, 1), (j, 0), (j + 1, 0)))
    tris.append(((1, 1), (5, 0), (2, 1)))
    tris.append(((5, 0), (6, 0), (2, 1)))
    tris.append(((6, 0), (7, 0), (2, 1)))
    D = build(P, tris)
    from toricdeg.triangulation import validate

    assert validate(D)
    recs = classify_singularities(D)
    r = next(rec for rec in recs if rec.point == (1, 1))
    assert r.kind == "rational" and r.degree == 7
    assert r.table_row == "rational:S(2,5)"
    assert r.nu2 == comb(5, 2) and r.nu3 == comb(3, 3) == 1
    lb3 = lower_bound_nu_k(D, 3)
    assert lb3.value == count_skew_k_sets(D, 3) + (1 if r.d1_exists else 0)


def test_is_k_delightful_examples():
    assert is_k_delightful(hexagon_central(), 2) is False
    assert is_k_delightful(veronese_staircase(), 2) is False
    for D in delightful_strip_family(2, 2):
        assert is_k_delightful(D, 2) is True
    with pytest.raises(NotDecidableError):
        is_k_delightful(
            build(
                LatticePolygon([(0, 0), (1, 0), (1, 1), (0, 1)]),
                [((0, 0), (1, 0), (0, 1)), ((1, 0), (1, 1), (0, 1))],
            ),
            2,
        )


def test_find_delightful_hexagon():
    out = find_delightful(HEXAGON, 2)
    assert len(out) == 1
    assert equivalent_triangulations(out[0], fig5_hexagon_delightful())


def test_find_delightful_veronese_empty():
    assert find_delightful(VERONESE, 2) == []


def test_find_delightful_delpezzo8():
    out = find_delightful(DELPEZZO8, 3)
    pic1, pic2 = delpezzo8_delightful_pair()
    keys = {canonical_key(D) for D in out}
    expected = {
        canonical_key(pic1),
        canonical_key(pic2),
        canonical_key(mirror_triangulation(pic1)),
        canonical_key(mirror_triangulation(pic2)),
    }
    assert keys == expected
    for D in out:
        assert count_skew_k_sets(D, 2) == 10 == catalog_lookup(DELPEZZO8, 2).nu
        assert count_skew_k_sets(D, 3) == 1 == catalog_lookup(DELPEZZO8, 3).nu
        assert is_regular(D).regular


def test_find_delightful_s22_matches_strip_family():
    out = find_delightful(scroll_polygon(2, 2), 2)
    fam = delightful_strip_family(2, 2)
    found = {canonical_key(D) for D in out}
    expected = set()
    for D in fam:
        expected.add(canonical_key(D))
        expected.add(canonical_key(mirror_triangulation(D)))
    assert found == expected
    # modulo reflections these are exactly the two strip classes
    assert {canonical_key_gl(D) for D in out} == {canonical_key_gl(D) for D in fam}


def test_strip_families_are_delightful():
    for d1 in range(1, 4):
        for i in range(0, 4):
            for D in delightful_strip_family(d1, d1 + i):
                d = 2 * d1 + i
                if d >= 4:
                    assert is_k_delightful(D, 2), (d1, i)
                entry = catalog_lookup(D.polygon, 3)
                if entry.nu is not None:
                    assert count_skew_k_sets(D, 3) == entry.nu


def test_skew_recursion_on_strips():
    # removing the last triangle: skew sets split as N_k(D') plus T * N_{k-1}(D'')
    for d1 in range(2, 6):
        for i in range(0, 2):
            D = delightful_strip_family(d1, d1 + i)[0]
            tris = D.triangle_list()
            coords = [tuple(D.points[v] for v in t) for t in tris]
            # remove the geometrically rightmost triangle
            T = max(coords, key=lambda t: max(p[0] for p in t))
            P2 = LatticePolygon.from_points(
                [p for t in coords if t != T for p in t]
            )
            rest = [t for t in coords if t != T]
            D2 = build(P2, rest)
            dd = [t for t in rest if not set(t) & set(T)]
            for k in (2, 3):
                lhs = count_skew_k_sets(D, k)
                rhs = count_skew_k_sets(D2, k) + (
                    len(dd) if k == 2 else _skew_among(D2, dd, k - 1)
                )
                assert lhs == rhs


def _skew_among(D, coord_tris, k):
    from itertools import combinations

    count = 0
    for sub in combinations(coord_tris, k):
        verts = set()
        for t in sub:
            verts.update(t)
        if len(verts) == 3 * k:
            count += 1
    return count


def test_removal_recursion_on_g1_delightful():
    # each reference delightful genus-one triangulation admits a triangle T,
    # missing the interior point, with exactly d - 4 triangles disjoint from it
    cases = [fig5_hexagon_delightful(), *delpezzo8_delightful_pair()]
    for D in cases:
        d = D.polygon.area2
        interior = [p for p in D.points if D.polygon.contains(p) == 2]
        assert len(interior) == 1
        ip = D.index_of(interior[0])
        good = []
        for t in D.triangle_list():
            if ip in t:
                continue
            others = [u for u in D.triangle_list() if not set(u) & set(t)]
            if len(others) == d - 4:
                good.append(t)
        assert good, "no witness triangle for the recursion"


def test_star_noninterference():
    # two distinct convex singularity stars share at most four lattice points
    sweeps = [rectangle_D(), rectangle_Dprime(), hexagon_central(), veronese_staircase()]
    for P in (scroll_polygon(2, 4), DELPEZZO8):
        sweeps.extend(enumerate_triangulations(P))
    for D in sweeps:
        recs = classify_singularities(D)
        stars = [star(D, r.point) for r in recs]
        for i in range(len(stars)):
            for j in range(i + 1, len(stars)):
                pi = {v for t in stars[i].triangles for v in t}
                pj = {v for t in stars[j].triangles for v in t}
                assert len(pi & pj) <= 4


def test_secant_bounds_hold_on_small_sweep():
    # nu2bar <= nu2 and lower bound <= nu2 over regular triangulations, d <= 6
    polys = [HEXAGON, scroll_polygon(1, 5), scroll_polygon(2, 4), scroll_polygon(3, 3)]
    for P in polys:
        nu2 = catalog_lookup(P, 2).nu
        for D in enumerate_triangulations(P):
            if not is_regular(D).regular:
                continue
            nb = count_skew_k_sets(D, 2)
            assert nb <= nu2
            assert lower_bound_nu_k(D, 2).value <= nu2


def test_secant_bounds_k3_degree_nine():
    # the degree-9 surfaces where nu_3 is defined: bounds hold for k = 2 and 3
    from toricdeg.polygon import enumerate_polygons

    polys = [VERONESE, DELPEZZO8]
    for d1 in (2, 3, 4):
        for d2 in range(max(d1, 7 - d1), 10 - d1):
            polys.append(scroll_polygon(d1, d2))
    for P in polys:
        entries = {k: catalog_lookup(P, k) for k in (2, 3)}
        for D in enumerate_triangulations(P):
            if not is_regular(D).regular:
                continue
            recs = classify_singularities(D)
            for k in (2, 3):
                nu = entries[k].nu
                if nu is None:
                    continue
                assert count_skew_k_sets(D, k) <= nu
                assert lower_bound_nu_k(D, k, records=recs).value <= nu


def test_smooth_g1_formula_matches_del_pezzo_value():
    from toricdeg.census import census1_shapes
    from toricdeg.secant import is_smooth

    for name, P in census1_shapes():
        inv = invariants(P)
        if inv.d < 5 or not is_smooth(P):
            continue
        assert nu2_toric_smooth(P) == comb(inv.d - 3, 2), name
