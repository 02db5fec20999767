"""Command-line interface: census, triangulate, check, classify-delightful, render.

All numeric output is exact (integers and num/den rationals).  Reports are
reproducible byte for byte for identical inputs; warnings never change the
exit status.  The environment variable TORIC_MAX_AREA (default 12) caps the
normalized area accepted by the enumeration commands.
"""

import json
import os
from pathlib import Path

import click

from .census import compare_census
from .fileio import ParseError, frac_str, load
from .polygon import invariants
from .regularity import is_regular
from .secant import (
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
from .svgout import render_svg
from .triangulation import (
    Subdivision,
    Triangulation,
    enumerate_triangulations,
    why_invalid,
)


def _max_area():
    return int(os.environ.get("TORIC_MAX_AREA", "12"))


def _emit(records, fmt, out):
    if fmt == "json-lines":
        text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    else:
        lines = []
        for r in records:
            lines.append(
                "  ".join(f"{k}={_plain(v)}" for k, v in sorted(r.items()))
            )
        text = "".join(line + "\n" for line in lines)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _plain(v):
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(v, sort_keys=True)
    return v


def _input_files(path):
    p = Path(path)
    if p.is_dir():
        return sorted(q for q in p.iterdir() if q.is_file())
    return [p]


def _area_guard(P):
    if P.area2 > _max_area():
        raise click.ClickException(
            f"polygon area {P.area2} exceeds TORIC_MAX_AREA={_max_area()}"
        )


@click.group()
def main():
    """Exact toolkit for planar toric degenerations."""


@main.command()
@click.argument("g", type=int)
@click.argument("d_max", type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "json-lines"]), default="text")
@click.option("--out", type=click.Path(), default=None)
def census(g, d_max, fmt, out):
    """Enumerate polygon classes with the given interior-point count."""
    if d_max > _max_area():
        raise click.ClickException(
            f"d_max {d_max} exceeds TORIC_MAX_AREA={_max_area()}"
        )
    cmp = compare_census(g, d_max)
    records = []
    for C in cmp.classes:
        inv = invariants(C)
        status = "in-table"
        name = cmp.matched.get(C.vertices)
        if name is None and C.vertices in cmp.mirror_surplus:
            status = "mirror-of-table-shape"
            name = cmp.mirror_surplus[C.vertices]
        elif name is None:
            status = "extra"
        records.append(
            {
                "command": "census",
                "vertices": list(map(list, C.vertices)),
                "g": inv.g,
                "edges": inv.l,
                "d": inv.d,
                "max_edge": inv.m,
                "boundary_points": inv.B,
                "status": status,
                "table_name": name,
            }
        )
    records.append(
        {
            "command": "census-summary",
            "g": g,
            "d_max": d_max,
            "classes": len(cmp.classes),
            "table_matched": len(cmp.matched),
            "mirror_surplus": len(cmp.mirror_surplus),
            "extra": len(cmp.extra),
            "missing_table_shapes": cmp.missing,
        }
    )
    _emit(records, fmt, out)


@main.command()
@click.argument("polygon_file", type=click.Path(exists=True))
@click.option("--regular-only", is_flag=True, default=False)
@click.option("--format", "fmt", type=click.Choice(["text", "json-lines"]), default="text")
@click.option("--out", type=click.Path(), default=None)
def triangulate(polygon_file, regular_only, fmt, out):
    """List the unimodular triangulations of a polygon (file or directory)."""
    records = []
    for path in _input_files(polygon_file):
        P = load(str(path), kind="polygon")
        _area_guard(P)
        tris = enumerate_triangulations(P)
        kept = 0
        for i, D in enumerate(tris):
            reg = is_regular(D).regular if regular_only else None
            if regular_only and not reg:
                continue
            kept += 1
            records.append(
                {
                    "command": "triangulate",
                    "input": path.name,
                    "index": i,
                    "triangles": [list(t) for t in D.triangle_list()],
                }
            )
        records.append(
            {
                "command": "triangulate-summary",
                "input": path.name,
                "total": len(tris),
                "reported": kept,
                "regular_only": regular_only,
            }
        )
    _emit(records, fmt, out)


@main.command()
@click.argument("triangulation_file", type=click.Path(exists=True))
@click.option("--k", type=int, default=2, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json-lines"]), default="text")
@click.option("--out", type=click.Path(), default=None)
def check(triangulation_file, k, fmt, out):
    """Validate, decide regularity, and compute the secant-degree report."""
    records = []
    for path in _input_files(triangulation_file):
        try:
            obj = load(str(path), kind="complex")
        except ParseError as e:
            raise click.ClickException(f"{path.name}: {e}")
        warnings = []
        rec = {"command": "check", "input": path.name, "k": k}
        if isinstance(obj, Subdivision):
            reg = is_regular(obj)
            rec["kind"] = "subdivision"
            rec["regular"] = reg.regular
            records.append(rec)
            continue
        D = obj
        reason = why_invalid(D)
        rec["kind"] = "triangulation"
        rec["valid"] = reason is None
        if reason is not None:
            rec["invalid_reason"] = reason
            records.append(rec)
            continue
        reg = is_regular(D)
        rec["regular"] = reg.regular
        if reg.witness is not None:
            rec["witness"] = {f"{p[0]} {p[1]}": frac_str(v) for p, v in reg.witness.items()}
        rec["skew_k_sets"] = count_skew_k_sets(D, k)
        recs = classify_singularities(D)
        rec["singularities"] = [
            {
                "point": list(r.point),
                "kind": r.kind,
                "degree": r.degree,
                "table_row": r.table_row,
                "nu2": r.nu2,
                "nu3": r.nu3,
                "d1_exists": r.d1_exists,
            }
            for r in recs
        ]
        bound = lower_bound_nu_k(D, k, records=recs)
        rec["lower_bound"] = bound.value
        rec["lower_bound_terms"] = [
            {
                "point": list(t.record.point),
                "kind": t.record.kind,
                "degree": t.record.degree,
                "contribution": t.contribution,
                "d1_exists": t.record.d1_exists,
                "used": t.used,
                "why_dropped": t.why_dropped,
            }
            for t in bound.terms
        ]
        warnings.extend(bound.warnings)
        try:
            entry = catalog_lookup(D.polygon, k)
            rec["catalog_family"] = entry.family_tag
            rec["catalog_nu"] = entry.nu
            rec["catalog_dim_sec"] = entry.dim_sec
        except CatalogMissError as e:
            warnings.append(str(e))
        try:
            rec["delightful"] = is_k_delightful(D, k)
        except (CatalogMissError, NotDecidableError) as e:
            rec["delightful"] = None
            warnings.append(str(e))
        try:
            rec["nu2_smooth_formula"] = nu2_toric_smooth(D.polygon)
        except SmoothnessError:
            pass
        rec["warnings"] = warnings
        records.append(rec)
    _emit(records, fmt, out)


@main.command("classify-delightful")
@click.argument("polygon_file", type=click.Path(exists=True))
@click.option("--kmax", type=int, default=2, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json-lines"]), default="text")
@click.option("--out", type=click.Path(), default=None)
def classify_delightful(polygon_file, kmax, fmt, out):
    """All delightful triangulation classes of a polygon (file or directory)."""
    records = []
    for path in _input_files(polygon_file):
        P = load(str(path), kind="polygon")
        _area_guard(P)
        try:
            classes = find_delightful(P, kmax)
        except CatalogMissError as e:
            raise click.ClickException(f"{path.name}: {e}")
        for i, D in enumerate(classes):
            records.append(
                {
                    "command": "classify-delightful",
                    "input": path.name,
                    "class_index": i,
                    "triangles": [list(t) for t in D.triangle_list()],
                }
            )
        records.append(
            {
                "command": "classify-delightful-summary",
                "input": path.name,
                "kmax": kmax,
                "classes": len(classes),
            }
        )
    _emit(records, fmt, out)


@main.command()
@click.argument("triangulation_file", type=click.Path(exists=True))
@click.option("--out", type=click.Path(), required=True)
def render(triangulation_file, out):
    """Render a triangulation or subdivision file to a deterministic SVG."""
    try:
        obj = load(triangulation_file, kind="complex")
    except ParseError as e:
        raise click.ClickException(str(e))
    marked = []
    if isinstance(obj, Triangulation):
        marked = [r.point for r in classify_singularities(obj)]
    Path(out).write_text(render_svg(obj, marked_points=marked), encoding="utf-8")
    click.echo(f"wrote {out}")


if __name__ == "__main__":
    main()
