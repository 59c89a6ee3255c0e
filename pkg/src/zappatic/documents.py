"""Strict JSON document format for graphs and residue data.

Three document kinds, all carrying ``"schema_version": 1``:

  curve     {"vertices": [{"id", "genus"?, "degree"?}],
             "edges": [{"i", "j", "index"?}], "embedding_dim"?}
  zappatic  {"planar"?, "vertices": [{"id", "pg"?, "q"?, "degree"?,
             "section_genus"?}],
             "edges": [{"i", "j", "curve_degree"?, "curve_genus"?}],
             "closed_faces": [{"cycle", "t"?}],
             "open_faces": [{"path", "t"?}],
             "angles": [{"center", "leaves", "t"?}]}
  residues  {"values": [{"i", "j", "k", "t"?, "value"}]} with i < j < k
             and "value" a string matching -?p or -?p/q (q > 0, no leading
             zeros, no floats anywhere).

Parsing is strict: unknown fields, duplicate keys, floats, and booleans in
integer slots are all rejected with messages that name the offending spot;
syntax errors keep their line/column.  Serialization is fully explicit and
deterministic, so serialize(parse(serialize(x))) is byte-identical and
parse(serialize(x)) == x.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .curves import CurveEdge, CurveGraph, CurveVertex
from .invariants import PhiSpec
from .residues import ResidueAssignment
from .surfaces import (
    Angle,
    ClosedFace,
    DoubleCurveEdge,
    OpenFace,
    SurfaceVertex,
    ZappaticGraph,
)

SCHEMA_VERSION = 1

Document = CurveGraph | ZappaticGraph | ResidueAssignment

_FRACTION_RE = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?")


class DocumentError(ValueError):
    """Malformed document text or structure."""


def parse_fraction(text: str, where: str = "value") -> Fraction:
    if not isinstance(text, str) or not _FRACTION_RE.fullmatch(text):
        raise DocumentError(
            f"{where}: expected a rational string like '-3/7', got {text!r}"
        )
    return Fraction(text)


def fraction_str(value: Fraction) -> str:
    return str(value)


def _reject_float(s):
    raise DocumentError(f"floating point literal {s!r} is not allowed")


def _pairs_hook(pairs):
    obj = {}
    for key, value in pairs:
        if key in obj:
            raise DocumentError(f"duplicate key {key!r}")
        obj[key] = value
    return obj


def _loads(text: str):
    try:
        return json.loads(
            text,
            parse_float=_reject_float,
            parse_constant=_reject_float,
            object_pairs_hook=_pairs_hook,
        )
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _obj(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise DocumentError(f"{where}: expected an object")
    return value


def _list(value, where: str) -> list:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected an array")
    return value


def _no_extras(obj: dict, allowed: set[str], where: str) -> None:
    extras = sorted(set(obj) - allowed)
    if extras:
        raise DocumentError(f"{where}: unknown field {extras[0]!r}")


def _int(value, where: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise DocumentError(f"{where}: must be >= {minimum}, got {value}")
    return value


def _get_int(obj, name, where, *, default=None, minimum=None):
    if name not in obj:
        if default is None:
            raise DocumentError(f"{where}: missing field {name!r}")
        return default
    return _int(obj[name], f"{where}.{name}", minimum=minimum)


def _int_array(value, where: str) -> tuple[int, ...]:
    return tuple(
        _int(x, f"{where}[{pos}]") for pos, x in enumerate(_list(value, where))
    )


def _parse_curve(doc: dict) -> CurveGraph:
    _no_extras(doc, {"schema_version", "kind", "vertices", "edges", "embedding_dim"}, "curve")
    vertices = []
    for pos, raw in enumerate(_list(doc.get("vertices", []), "vertices")):
        where = f"vertices[{pos}]"
        v = _obj(raw, where)
        _no_extras(v, {"id", "genus", "degree"}, where)
        degree = None
        if "degree" in v:
            degree = _int(v["degree"], f"{where}.degree", minimum=1)
        vertices.append(
            CurveVertex(
                id=_get_int(v, "id", where, minimum=1),
                genus=_get_int(v, "genus", where, default=0, minimum=0),
                degree=degree,
            )
        )
    edges = []
    for pos, raw in enumerate(_list(doc.get("edges", []), "edges")):
        where = f"edges[{pos}]"
        e = _obj(raw, where)
        _no_extras(e, {"i", "j", "index"}, where)
        edges.append(
            CurveEdge(
                i=_get_int(e, "i", where, minimum=1),
                j=_get_int(e, "j", where, minimum=1),
                index=_get_int(e, "index", where, default=1, minimum=1),
            )
        )
    embedding = None
    if "embedding_dim" in doc:
        embedding = _int(doc["embedding_dim"], "embedding_dim", minimum=1)
    return CurveGraph(tuple(vertices), tuple(edges), embedding_dim=embedding)


def _parse_zappatic(doc: dict) -> ZappaticGraph:
    _no_extras(
        doc,
        {
            "schema_version",
            "kind",
            "planar",
            "vertices",
            "edges",
            "closed_faces",
            "open_faces",
            "angles",
        },
        "zappatic",
    )
    planar = doc.get("planar", False)
    if not isinstance(planar, bool):
        raise DocumentError("planar: expected true or false")
    vertices = []
    for pos, raw in enumerate(_list(doc.get("vertices", []), "vertices")):
        where = f"vertices[{pos}]"
        v = _obj(raw, where)
        _no_extras(v, {"id", "pg", "q", "degree", "section_genus"}, where)
        vertices.append(
            SurfaceVertex(
                id=_get_int(v, "id", where, minimum=1),
                pg=_get_int(v, "pg", where, default=0, minimum=0),
                q=_get_int(v, "q", where, default=0, minimum=0),
                degree=_get_int(v, "degree", where, default=1, minimum=1),
                section_genus=_get_int(v, "section_genus", where, default=0, minimum=0),
            )
        )
    edges = []
    for pos, raw in enumerate(_list(doc.get("edges", []), "edges")):
        where = f"edges[{pos}]"
        e = _obj(raw, where)
        _no_extras(e, {"i", "j", "curve_degree", "curve_genus"}, where)
        edges.append(
            DoubleCurveEdge(
                i=_get_int(e, "i", where, minimum=1),
                j=_get_int(e, "j", where, minimum=1),
                curve_degree=_get_int(e, "curve_degree", where, default=1, minimum=1),
                curve_genus=_get_int(e, "curve_genus", where, default=0, minimum=0),
            )
        )
    closed = []
    for pos, raw in enumerate(_list(doc.get("closed_faces", []), "closed_faces")):
        where = f"closed_faces[{pos}]"
        f = _obj(raw, where)
        _no_extras(f, {"cycle", "t"}, where)
        if "cycle" not in f:
            raise DocumentError(f"{where}: missing field 'cycle'")
        closed.append(
            ClosedFace(
                cycle=_int_array(f["cycle"], f"{where}.cycle"),
                t=_get_int(f, "t", where, default=1, minimum=1),
            )
        )
    opens = []
    for pos, raw in enumerate(_list(doc.get("open_faces", []), "open_faces")):
        where = f"open_faces[{pos}]"
        f = _obj(raw, where)
        _no_extras(f, {"path", "t"}, where)
        if "path" not in f:
            raise DocumentError(f"{where}: missing field 'path'")
        opens.append(
            OpenFace(
                path=_int_array(f["path"], f"{where}.path"),
                t=_get_int(f, "t", where, default=1, minimum=1),
            )
        )
    angles = []
    for pos, raw in enumerate(_list(doc.get("angles", []), "angles")):
        where = f"angles[{pos}]"
        a = _obj(raw, where)
        _no_extras(a, {"center", "leaves", "t"}, where)
        if "leaves" not in a:
            raise DocumentError(f"{where}: missing field 'leaves'")
        angles.append(
            Angle(
                center=_get_int(a, "center", where, minimum=1),
                leaves=frozenset(_int_array(a["leaves"], f"{where}.leaves")),
                t=_get_int(a, "t", where, default=1, minimum=1),
            )
        )
    return ZappaticGraph(
        vertices=tuple(vertices),
        edges=tuple(edges),
        closed_faces=tuple(closed),
        open_faces=tuple(opens),
        angles=tuple(angles),
        planar=planar,
    )


def _parse_residues(doc: dict) -> ResidueAssignment:
    _no_extras(doc, {"schema_version", "kind", "values"}, "residues")
    if "values" not in doc:
        raise DocumentError("residues: missing field 'values'")
    entries = []
    for pos, raw in enumerate(_list(doc["values"], "values")):
        where = f"values[{pos}]"
        r = _obj(raw, where)
        _no_extras(r, {"i", "j", "k", "t", "value"}, where)
        i = _get_int(r, "i", where, minimum=1)
        j = _get_int(r, "j", where, minimum=1)
        k = _get_int(r, "k", where, minimum=1)
        if not i < j < k:
            raise DocumentError(f"{where}: indices must satisfy i < j < k")
        t = _get_int(r, "t", where, default=1, minimum=1)
        if "value" not in r:
            raise DocumentError(f"{where}: missing field 'value'")
        entries.append(((i, j, k, t), parse_fraction(r["value"], f"{where}.value")))
    try:
        return ResidueAssignment(entries)
    except ValueError as exc:
        raise DocumentError(f"values: {exc}") from exc


_PARSERS = {
    "curve": _parse_curve,
    "zappatic": _parse_zappatic,
    "residues": _parse_residues,
}


def parse_document(text: str) -> Document:
    doc = _obj(_loads(text), "document")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DocumentError(
            f"schema_version: expected {SCHEMA_VERSION}, got {version!r}"
        )
    kind = doc.get("kind")
    if kind not in _PARSERS:
        raise DocumentError(
            f"kind: expected one of {sorted(_PARSERS)}, got {kind!r}"
        )
    return _PARSERS[kind](doc)


def load_document(path: str | Path) -> Document:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def _curve_payload(g: CurveGraph) -> dict:
    payload: dict = {"schema_version": SCHEMA_VERSION, "kind": "curve"}
    payload["vertices"] = [
        {"id": v.id, "genus": v.genus, **({"degree": v.degree} if v.degree is not None else {})}
        for v in g.vertices
    ]
    payload["edges"] = [{"i": e.i, "j": e.j, "index": e.index} for e in g.edges]
    if g.embedding_dim is not None:
        payload["embedding_dim"] = g.embedding_dim
    return payload


def _zappatic_payload(g: ZappaticGraph) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "zappatic",
        "planar": g.planar,
        "vertices": [
            {
                "id": v.id,
                "pg": v.pg,
                "q": v.q,
                "degree": v.degree,
                "section_genus": v.section_genus,
            }
            for v in g.vertices
        ],
        "edges": [
            {
                "i": e.i,
                "j": e.j,
                "curve_degree": e.curve_degree,
                "curve_genus": e.curve_genus,
            }
            for e in g.edges
        ],
        "closed_faces": [{"cycle": list(f.cycle), "t": f.t} for f in g.closed_faces],
        "open_faces": [{"path": list(f.path), "t": f.t} for f in g.open_faces],
        "angles": [
            {"center": a.center, "leaves": list(a.sorted_leaves), "t": a.t}
            for a in g.angles
        ],
    }


def _residues_payload(a: ResidueAssignment) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "residues",
        "values": [
            {"i": i, "j": j, "k": k, "t": t, "value": fraction_str(value)}
            for (i, j, k, t), value in a.items()
        ],
    }


def document_payload(doc: Document) -> dict:
    if isinstance(doc, CurveGraph):
        return _curve_payload(doc)
    if isinstance(doc, ZappaticGraph):
        return _zappatic_payload(doc)
    if isinstance(doc, ResidueAssignment):
        return _residues_payload(doc)
    raise TypeError(f"not a document: {doc!r}")


def serialize_document(doc: Document) -> str:
    return json.dumps(document_payload(doc), indent=2, ensure_ascii=False) + "\n"


def save_document(doc: Document, path: str | Path) -> None:
    Path(path).write_text(serialize_document(doc), encoding="utf-8")


def parse_phi(text: str) -> PhiSpec:
    """A phi file is a bare object with exactly one of "rank" / "matrix"."""
    doc = _obj(_loads(text), "phi")
    _no_extras(doc, {"rank", "matrix"}, "phi")
    if ("rank" in doc) == ("matrix" in doc):
        raise DocumentError("phi: give exactly one of 'rank' or 'matrix'")
    if "rank" in doc:
        return PhiSpec(rank=_int(doc["rank"], "phi.rank", minimum=0))
    rows = []
    for pos, raw in enumerate(_list(doc["matrix"], "phi.matrix")):
        rows.append(_int_array(raw, f"phi.matrix[{pos}]"))
    try:
        return PhiSpec(matrix=tuple(rows))
    except ValueError as exc:
        raise DocumentError(f"phi.matrix: {exc}") from exc


def load_phi(path: str | Path) -> PhiSpec:
    return parse_phi(Path(path).read_text(encoding="utf-8"))
