"""Graphviz DOT export for curve and surface graphs.

Double curves are solid edges labelled with their weights; an open face
contributes a dashed arc between its two endpoints (the drawing convention
omits that arc for open 3-faces of planar graphs, and it is never drawn on
top of a real edge).  Faces and angles are listed as comments, angles with a
double-arc annotation.  Output is deterministic byte-for-byte.
"""

from __future__ import annotations

from .curves import CurveGraph
from .surfaces import ZappaticGraph, require_valid


def _curve_dot(g: CurveGraph) -> str:
    lines = ["graph stick_curve {"]
    for v in g.vertices:
        weight = f"g={v.genus}" + (f", d={v.degree}" if v.degree is not None else "")
        lines.append(f'  {v.id} [label="{v.id}: {weight}"];')
    for e in g.edges:
        lines.append(f"  {e.i} -- {e.j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _surface_dot(g: ZappaticGraph) -> str:
    require_valid(g)
    lines = ["graph zappatic_surface {"]
    for f in g.closed_faces:
        lines.append(f"  // closed {f.size}-face {f.cycle} t={f.t}")
    for f in g.open_faces:
        lines.append(f"  // open {f.size}-face {f.path} t={f.t}")
    for a in g.angles:
        lines.append(
            f"  // angle at {a.center} over {a.sorted_leaves} t={a.t} (double arc)"
        )
    for v in g.vertices:
        lines.append(
            f'  {v.id} [label="{v.id}: pg={v.pg}, q={v.q}, '
            f'd={v.degree}, g={v.section_genus}"];'
        )
    for e in g.edges:
        lines.append(
            f'  {e.i} -- {e.j} [label="d={e.curve_degree}, g={e.curve_genus}"];'
        )
    dashed = set()
    for f in g.open_faces:
        if g.planar and f.size == 3:
            continue
        pair = (min(f.endpoints), max(f.endpoints))
        if pair not in g.edge_pairs:
            dashed.add(pair)
    for (a, b) in sorted(dashed):
        lines.append(f"  {a} -- {b} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(doc: CurveGraph | ZappaticGraph) -> str:
    if isinstance(doc, ZappaticGraph):
        return _surface_dot(doc)
    if isinstance(doc, CurveGraph):
        return _curve_dot(doc)
    raise TypeError("export_dot expects a curve or zappatic graph")
