"""Text formats for polygons, triangulations, subdivisions and witnesses.

Polygon files carry one "x y" vertex per line in counter-clockwise order;
lines starting with '#' are comments.  A triangulation file is a polygon
block, a line "triangles:", then one triangle per line as three 0-based
indices into the lexicographically sorted lattice-point list.  Subdivision
files use "cells:" with one cell per line: the indices of its vertices in
counter-clockwise order, optionally followed by label=<text>.
"""

from fractions import Fraction

from .polygon import LatticePolygon, lattice_points
from .triangulation import Cell, Subdivision, Triangulation


class ParseError(ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _split_sections(text):
    head, marker, body = [], None, []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("triangles:", "cells:"):
            if marker is not None:
                raise ParseError("duplicate section marker", lineno)
            marker = (line, lineno)
            continue
        (body if marker else head).append((lineno, line))
    return head, marker, body


def _parse_vertices(entries):
    verts = []
    for lineno, line in entries:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'x y', got {line!r}", lineno)
        try:
            verts.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer coordinate in {line!r}", lineno)
    if not verts:
        raise ParseError("no vertices found", 1)
    return verts


def loads_polygon(text):
    head, marker, _ = _split_sections(text)
    if marker is not None:
        raise ParseError(f"unexpected section {marker[0]!r} in a polygon file", marker[1])
    return LatticePolygon(_parse_vertices(head))


def dumps_polygon(P):
    return "".join(f"{x} {y}\n" for x, y in P.vertices)


def loads_complex(text):
    """Parse a triangulation or subdivision file."""
    head, marker, body = _split_sections(text)
    P = LatticePolygon(_parse_vertices(head))
    if marker is None:
        raise ParseError("missing 'triangles:' or 'cells:' section", 1)
    pts = lattice_points(P)
    if marker[0] == "triangles:":
        tris = []
        for lineno, line in body:
            parts = line.split()
            if len(parts) != 3:
                raise ParseError(f"expected three indices, got {line!r}", lineno)
            try:
                t = tuple(int(v) for v in parts)
            except ValueError:
                raise ParseError(f"non-integer index in {line!r}", lineno)
            if any(not 0 <= i < len(pts) for i in t):
                raise ParseError(f"vertex index out of range in {line!r}", lineno)
            tris.append(t)
        if not tris:
            raise ParseError("empty triangle section", marker[1])
        return Triangulation(P, tris)
    cells = []
    for lineno, line in body:
        parts = line.split()
        label = None
        if parts and parts[-1].startswith("label="):
            label = parts[-1][len("label="):]
            parts = parts[:-1]
        try:
            idxs = [int(v) for v in parts]
        except ValueError:
            raise ParseError(f"non-integer index in {line!r}", lineno)
        if len(idxs) < 3:
            raise ParseError("a cell needs at least three vertices", lineno)
        if any(not 0 <= i < len(pts) for i in idxs):
            raise ParseError(f"vertex index out of range in {line!r}", lineno)
        cells.append(Cell(LatticePolygon([pts[i] for i in idxs]), None, label))
    if not cells:
        raise ParseError("empty cell section", marker[1])
    return Subdivision(P, cells)


def dumps_triangulation(D):
    out = [dumps_polygon(D.polygon), "triangles:\n"]
    for t in D.triangle_list():
        out.append(f"{t[0]} {t[1]} {t[2]}\n")
    return "".join(out)


def dumps_subdivision(S):
    idx = {p: i for i, p in enumerate(S.points)}
    out = [dumps_polygon(S.polygon), "cells:\n"]
    for c in S.cells:
        row = " ".join(str(idx[v]) for v in c.polygon.vertices)
        if c.label:
            row += f" label={c.label}"
        out.append(row + "\n")
    return "".join(out)


def frac_str(v):
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def dumps_witness(F):
    """One line per lattice point: "x y num/den"."""
    return "".join(f"{p[0]} {p[1]} {frac_str(v)}\n" for p, v in F.items())


def load(path, kind="auto"):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if kind == "polygon":
        return loads_polygon(text)
    if kind == "complex":
        return loads_complex(text)
    head, marker, body = _split_sections(text)
    if marker is None:
        return loads_polygon(text)
    return loads_complex(text)
