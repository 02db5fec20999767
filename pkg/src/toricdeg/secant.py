"""Skew k-sets, secant-degree catalog, singularities, and delightfulness.

The number of pairwise vertex-disjoint k-subsets of triangles bounds the
count of k-secant (k-1)-planes of the toric surface from below; convex
star singularities of the triangulation each add the secant degree of the
small surface sitting over the star.  Everything is exact integer work.
"""

from math import comb
from typing import NamedTuple, Optional

from .families import all_fan_stars, cone_polygon, scroll_polygon
from .geometry import primitive, vsub
from .polygon import (
    LatticePolygon,
    are_equivalent,
    canonical_form,
    invariants,
    lattice_points,
)
from .regularity import is_regular
from .triangulation import (
    SubdivisionError,
    Triangulation,
    canonical_key,
    enumerate_triangulations,
    intermediate_subdivision,
    star,
)


class CatalogMissError(LookupError):
    """The polygon is outside the g <= 1 / scroll catalog."""


class NotDecidableError(LookupError):
    """Delightfulness is undecidable: no catalog value for nu_k."""


class SmoothnessError(ValueError):
    """The double-point formula needs a smooth toric surface."""


def count_skew_k_sets(D, k, return_sets=False):
    """Number of k-subsets of pairwise vertex-disjoint triangles of D.

    In a valid triangulation two triangles meet in a common face, so vertex
    disjoint means disjoint as sets.  Backtracking over vertex bitmasks.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    tris = D.triangle_list()
    masks = [(1 << t[0]) | (1 << t[1]) | (1 << t[2]) for t in tris]
    n = len(tris)
    hits = []
    count = 0

    def walk(start, used, chosen):
        nonlocal count
        if len(chosen) == k:
            count += 1
            if return_sets:
                hits.append(frozenset(tris[i] for i in chosen))
            return
        if n - start < k - len(chosen):
            return
        for i in range(start, n):
            if masks[i] & used:
                continue
            chosen.append(i)
            walk(i + 1, used | masks[i], chosen)
            chosen.pop()

    walk(0, 0, [])
    if return_sets:
        return count, hits
    return count


def is_smooth(P):
    """True iff every vertex cone of P is unimodular."""
    verts = P.vertices
    n = len(verts)
    for i in range(n):
        u = primitive(vsub(verts[(i + 1) % n], verts[i]))
        w = primitive(vsub(verts[(i - 1) % n], verts[i]))
        if abs(u[0] * w[1] - u[1] * w[0]) != 1:
            return False
    return True


def nu2_toric_smooth(P):
    """Double points of a generic projection: (d^2 - 10d + 5B + 2V - 12) / 2."""
    if not is_smooth(P):
        raise SmoothnessError(
            "polygon has a non-unimodular vertex cone; the formula needs a smooth surface"
        )
    inv = invariants(P)
    num = inv.d * inv.d - 10 * inv.d + 5 * inv.B + 2 * inv.l - 12
    assert num % 2 == 0
    return num // 2


class CatalogEntry(NamedTuple):
    canonical_polygon: LatticePolygon
    family_tag: str
    r: int                       # ambient dimension: lattice points minus one
    dim_sec: Optional[int]       # None when the secant variety is defective
    nu: Optional[int]            # None unless dim_sec == 3k - 1 <= r
    note: str


def _special_g1_classes():
    return {
        "Veronese3": canonical_form(LatticePolygon([(0, 0), (3, 0), (0, 3)])),
        "delPezzo8": canonical_form(LatticePolygon([(0, 0), (3, 0), (1, 2), (0, 2)])),
        "quadricV2": canonical_form(LatticePolygon([(0, 0), (2, 0), (2, 2), (0, 2)])),
        "coneV2": canonical_form(LatticePolygon([(0, 0), (4, 0), (0, 2)])),
    }


_SPECIALS = None


def _g1_family_tag(C):
    global _SPECIALS
    if _SPECIALS is None:
        _SPECIALS = _special_g1_classes()
    for tag, poly in _SPECIALS.items():
        if poly == C:
            return tag
    inv = invariants(C)
    if 5 <= inv.d <= 8:
        return f"delPezzo{inv.d}"
    return f"elliptic({inv.l},{inv.d},{inv.m})"


def _g0_family(P):
    """Scroll/cone/quadratic-Veronese family of a g = 0 polygon."""
    inv = invariants(P)
    d = inv.d
    if inv.l == 3:
        if are_equivalent(P, LatticePolygon([(0, 0), (2, 0), (0, 2)])):
            return ("Veronese2", None)
        if are_equivalent(P, cone_polygon(d)):
            return (f"cone({d})", 0)
    if inv.l == 4:
        for d1 in range(1, d // 2 + 1):
            d2 = d - d1
            if d2 < d1:
                break
            if are_equivalent(P, scroll_polygon(d1, d2)):
                return (f"scroll({d1},{d2})", d1)
    raise CatalogMissError(f"g=0 polygon outside the census families: {P!r}")


def catalog_lookup(P, k):
    """Catalog entry (dimension and degree of the k-secant variety) for P.

    Values follow the worked census: scrolls have nu_k = C(d-2k+2, k) when
    the k-secant variety has the expected dimension 3k-1; the genus-one
    surfaces have nu_2 = C(d-3, 2) for d >= 5, and nu_3 is defined only for
    the cubic Veronese (4) and the degree-8 del Pezzo (1).  Entries whose
    secant variety fills the ambient space or is defective carry nu = None.
    """
    if k not in (2, 3):
        raise ValueError("catalog covers k in {2, 3}")
    inv = invariants(P)
    C = canonical_form(P)
    r = inv.n_points - 1
    if inv.g == 0:
        tag, d1 = _g0_family(P)
        d = inv.d
        if tag == "Veronese2":
            if k == 2:
                return CatalogEntry(C, tag, r, 4, None, "defective: Sec_2 is the cubic hypersurface")
            return CatalogEntry(C, tag, r, r, None, "fills the ambient space")
        if d1 == 0:  # cone over a rational normal curve
            return CatalogEntry(C, tag, r, None, None, "cone: defective secant varieties")
        # honest scroll S(d1, d2)
        if k == 2:
            if d >= 4:
                return CatalogEntry(C, tag, r, 5, comb(d - 2, 2), "minimal 2-secant degree")
            return CatalogEntry(C, tag, r, r, None, "fills the ambient space")
        if d1 == 1:
            return CatalogEntry(C, tag, r, None, None, "scroll with a line directrix: 3-defective")
        if d >= 7:
            return CatalogEntry(C, tag, r, 8, comb(d - 4, 3), "minimal 3-secant degree")
        return CatalogEntry(C, tag, r, r, None, "fills the ambient space")
    if inv.g == 1:
        tag = _g1_family_tag(C)
        d = inv.d
        if k == 2:
            if d >= 5:
                return CatalogEntry(C, tag, r, 5, comb(d - 3, 2), "minimal 2-secant degree")
            return CatalogEntry(C, tag, r, r, None, "fills the ambient space")
        if tag == "Veronese3":
            return CatalogEntry(C, tag, r, 8, 4, "minimal 3-secant degree")
        if tag == "delPezzo8":
            return CatalogEntry(C, tag, r, 8, 1, "3-secant variety fills P^8 with degree 1")
        if tag in ("quadricV2", "coneV2"):
            return CatalogEntry(C, tag, r, 7, None, "3-secant variety has dimension 7 (degree 4)")
        return CatalogEntry(C, tag, r, min(8, r), None, "fills the ambient space")
    raise CatalogMissError(f"no catalog entry for a polygon with g = {inv.g}")


class SingularityRecord(NamedTuple):
    point: tuple
    kind: str                    # "rational" | "elliptic"
    degree: int                  # triangles in the star = area of its hull
    table_row: str
    nu2: Optional[int]
    nu3: Optional[int]
    d1_exists: bool


def _star_complex(D, st):
    """The star as a standalone triangulation of its hull."""
    hull_pts = lattice_points(st.hull)
    reindex = {p: i for i, p in enumerate(hull_pts)}
    tris = [tuple(sorted(reindex[D.points[v]] for v in t)) for t in st.triangles]
    return Triangulation(st.hull, tris)


def _matches_standard_fan(D, st):
    """True iff the star complex is one of the fan triangulations of its hull."""
    sc = _star_complex(D, st)
    key = canonical_key(sc)
    return any(canonical_key(F) == key for F in all_fan_stars(st.hull).values())


def classify_singularities(D):
    """Table rows matched by the convex stars of D, with their secant data.

    A lattice point whose covering triangles form a convex polygon is a
    rational singularity (point on the boundary, star a scroll fan) or an
    elliptic one (interior point, star the full fan of a genus-one polygon).
    Stars over cones or the quadratic Veronese triangle have defective
    secant varieties and produce no record, as do stars of low degree.
    """
    records = []
    P = D.polygon
    for p in D.points:
        st = star(D, p)
        if st.hull is None:
            continue
        delta = len(st.triangles)
        hull_inv = invariants(st.hull)
        if P.contains(p) == 1:
            assert hull_inv.g == 0
            if delta < 4:
                continue
            try:
                tag, d1 = _g0_family(st.hull)
            except CatalogMissError:
                continue
            if not tag.startswith("scroll(") or not _matches_standard_fan(D, st):
                continue
            nu2 = comb(delta - 2, 2)
            nu3 = comb(delta - 4, 3) if d1 == 2 and delta >= 7 else None
            row = f"rational:S({d1},{delta - d1})"
            kind = "rational"
        else:
            assert hull_inv.g == 1
            if delta < 5:
                continue
            if not _matches_standard_fan(D, st):
                continue
            tag = _g1_family_tag(canonical_form(st.hull))
            nu2 = comb(delta - 3, 2)
            if tag == "Veronese3":
                nu3 = 4
            elif tag == "delPezzo8":
                nu3 = 1
            else:
                nu3 = None
            row = f"elliptic:{tag}"
            kind = "elliptic"
        try:
            sub = intermediate_subdivision(D, p)
            d1_exists = is_regular(sub).regular
        except SubdivisionError:
            d1_exists = False
        records.append(
            SingularityRecord(p, kind, delta, row, nu2, nu3, d1_exists)
        )
    return records


class BoundTerm(NamedTuple):
    record: SingularityRecord
    contribution: int
    used: bool
    why_dropped: Optional[str]


class LowerBound(NamedTuple):
    k: int
    value: int
    skew_sets: int
    terms: list
    warnings: list


def lower_bound_nu_k(D, k, records=None):
    """Secant-degree lower bound: skew k-sets plus usable star contributions.

    A star contributes its catalog nu_k when that value exists (for k = 3
    only the cubic Veronese, the degree-8 del Pezzo and S(2, delta-2) with
    delta >= 7 qualify) and when a regular subdivision containing the star
    hull was actually constructed; otherwise the term is reported dropped
    and the bound stays valid, only weaker.
    """
    if k not in (2, 3):
        raise ValueError("lower bound implemented for k in {2, 3}")
    base = count_skew_k_sets(D, k)
    if records is None:
        records = classify_singularities(D)
    terms = []
    total = base
    for rec in records:
        nu = rec.nu2 if k == 2 else rec.nu3
        if nu is None:
            terms.append(BoundTerm(rec, 0, False, f"nu_{k} undefined for {rec.table_row}"))
            continue
        if not rec.d1_exists:
            terms.append(BoundTerm(rec, nu, False, "no regular intermediate subdivision"))
            continue
        terms.append(BoundTerm(rec, nu, True, None))
        total += nu
    warnings = []
    try:
        entry = catalog_lookup(D.polygon, k)
        if entry.dim_sec != 3 * k - 1 or entry.r < 3 * k - 1:
            warnings.append(
                f"Sec_{k} of the ambient surface does not have dimension {3 * k - 1}; "
                "the bound is vacuous"
            )
    except CatalogMissError:
        if base == 0:
            warnings.append(
                f"polygon not in catalog and no skew {k}-set: expected dimension unverified"
            )
    return LowerBound(k=k, value=total, skew_sets=base, terms=terms, warnings=warnings)


def is_k_delightful(D, k):
    """True iff the skew k-set count reaches the catalog secant degree."""
    entry = catalog_lookup(D.polygon, k)
    if entry.nu is None:
        raise NotDecidableError(
            f"nu_{k} undefined for {entry.family_tag}: {entry.note}"
        )
    return count_skew_k_sets(D, k) == entry.nu


def _delightful_ks(P, k_max):
    ks = []
    for k in range(2, k_max + 1):
        if k > 3:
            break
        try:
            entry = catalog_lookup(P, k)
        except CatalogMissError:
            raise
        if entry.nu is not None:
            ks.append((k, entry.nu))
    return ks


def find_delightful(P, k_max):
    """All delightful triangulation classes of P, up to lattice equivalence.

    A triangulation qualifies when it is regular and k-delightful for every
    k in 2..k_max for which the k-secant variety has the expected dimension
    within the ambient space.  Representatives are deduplicated under the
    equiaffinities of the triangulated polygon.
    """
    ks = _delightful_ks(P, k_max)
    found = []
    for D in enumerate_triangulations(P):
        if all(count_skew_k_sets(D, k) == nu for k, nu in ks):
            if is_regular(D).regular:
                found.append(D)
    by_key = {}
    for D in found:
        by_key.setdefault(canonical_key(D), D)
    return [by_key[key] for key in sorted(by_key)]
