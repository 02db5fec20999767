"""Deterministic SVG rendering of triangulations and subdivisions.

One lattice unit is 40 px.  Elements are emitted in a fixed order (grid,
interior edges, boundary, marked points, labels) with sorted coordinates,
so identical inputs produce byte-identical documents.  Marked singular
points are drawn as filled dots; labeled cells carry their names.
"""

from fractions import Fraction

from .triangulation import Subdivision, Triangulation

SCALE = 40
MARGIN = 20
DOT_RADIUS = 5


def _fmt(v):
    """Exact decimal rendering of a rational, two places, no floats."""
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    n = round(v * 100)
    whole, frac = divmod(abs(n), 100)
    sign = "-" if n < 0 else ""
    return f"{sign}{whole}.{frac:02d}"


def render_svg(obj, marked_points=(), labels=None):
    """SVG document for a triangulation or subdivision.

    marked_points: lattice points drawn as filled circles.
    labels: optional {point-ish (x, y) rationals: text} annotations; cells of
    a subdivision with a label are annotated at their vertex centroid.
    """
    if isinstance(obj, Triangulation):
        P = obj.polygon
        edge_set = set()
        for t in obj.triangle_list():
            a, b, c = (obj.points[i] for i in t)
            for e in ((a, b), (a, c), (b, c)):
                edge_set.add(tuple(sorted(e)))
        cell_labels = {}
    elif isinstance(obj, Subdivision):
        P = obj.polygon
        edge_set = set()
        cell_labels = {}
        for cell in obj.cells:
            verts = cell.polygon.vertices
            for i in range(len(verts)):
                e = tuple(sorted((verts[i], verts[(i + 1) % len(verts)])))
                edge_set.add(e)
            if cell.label:
                cx = Fraction(sum(v[0] for v in verts), len(verts))
                cy = Fraction(sum(v[1] for v in verts), len(verts))
                cell_labels[(cx, cy)] = cell.label
    else:
        raise TypeError("render_svg expects a Triangulation or Subdivision")

    xs = [v[0] for v in P.vertices]
    ys = [v[1] for v in P.vertices]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)

    def px(x):
        return MARGIN + SCALE * (Fraction(x) - x0)

    def py(y):
        return MARGIN + SCALE * (y1 - Fraction(y))

    width = MARGIN * 2 + SCALE * (x1 - x0)
    height = MARGIN * 2 + SCALE * (y1 - y0)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    for gx in range(x0, x1 + 1):
        out.append(
            f'<line x1="{_fmt(px(gx))}" y1="{_fmt(py(y1))}" x2="{_fmt(px(gx))}" '
            f'y2="{_fmt(py(y0))}" stroke="#dddddd" stroke-width="1"/>'
        )
    for gy in range(y0, y1 + 1):
        out.append(
            f'<line x1="{_fmt(px(x0))}" y1="{_fmt(py(gy))}" x2="{_fmt(px(x1))}" '
            f'y2="{_fmt(py(gy))}" stroke="#dddddd" stroke-width="1"/>'
        )
    boundary = set()
    verts = P.vertices
    for i in range(len(verts)):
        boundary.add(tuple(sorted((verts[i], verts[(i + 1) % len(verts)]))))
    for a, b in sorted(edge_set - boundary):
        out.append(
            f'<line x1="{_fmt(px(a[0]))}" y1="{_fmt(py(a[1]))}" x2="{_fmt(px(b[0]))}" '
            f'y2="{_fmt(py(b[1]))}" stroke="black" stroke-width="1.5"/>'
        )
    for a, b in sorted(boundary):
        out.append(
            f'<line x1="{_fmt(px(a[0]))}" y1="{_fmt(py(a[1]))}" x2="{_fmt(px(b[0]))}" '
            f'y2="{_fmt(py(b[1]))}" stroke="black" stroke-width="3"/>'
        )
    for p in sorted(marked_points):
        out.append(
            f'<circle cx="{_fmt(px(p[0]))}" cy="{_fmt(py(p[1]))}" r="{DOT_RADIUS}" '
            f'fill="black"/>'
        )
    anchors = dict(cell_labels)
    if labels:
        anchors.update(labels)
    for (lx, ly), text in sorted(anchors.items()):
        out.append(
            f'<text x="{_fmt(px(lx))}" y="{_fmt(py(ly))}" font-size="16" '
            f'font-family="monospace" text-anchor="middle">{text}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
