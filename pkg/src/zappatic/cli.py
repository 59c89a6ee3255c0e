"""Command-line front end.

Subcommands: invariants, check, reduce, catalog, export-dot, homology,
section, residues.  Exit codes: 0 success, 1 a check failed (coverage
violations, unbalanced residues, failed smoothability), 2 malformed input
(parse or validation errors, unknown catalog names), 3 required data
missing (restriction-map rank needed but not supplied).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import catalog, catalog_names
from .curves import (
    CurveGraph,
    InvalidGraphError,
    curve_chi_O,
    curve_counts,
    curve_degree,
    curve_euler,
    curve_h1,
    curve_pa,
)
from .documents import (
    DocumentError,
    document_payload,
    load_document,
    load_phi,
    serialize_document,
)
from .dot import export_dot
from .homology import betti_numbers, boundary_matrices, two_cycle_basis
from .invariants import (
    InvariantReport,
    MissingPhiError,
    fibre_invariants,
    normal_crossings_report,
)
from .realizability import check_planar, suggest_completions
from .reduction import ReductionTrace, semistable_reduce
from .residues import (
    ResidueAssignment,
    Verdict,
    edge_balance,
    smoothability_report,
)
from .surfaces import ZappaticGraph, counts, is_normal_crossings, require_valid

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_MISSING_DATA = 3


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load_zappatic(path: str) -> ZappaticGraph:
    doc = load_document(path)
    if not isinstance(doc, ZappaticGraph):
        raise ValueError(f"{path}: expected a zappatic document")
    require_valid(doc)
    return doc


def _maybe_phi(args):
    return load_phi(args.phi) if getattr(args, "phi", None) else None


def _curve_invariants(g: CurveGraph, as_json: bool) -> int:
    v, e = curve_counts(g)
    rows: list[tuple[str, object]] = [
        ("kind", "curve"),
        ("vertices", v),
        ("edges", e),
        ("chi_graph", curve_euler(g)),
        ("h1", curve_h1(g)),
        ("chi_O", curve_chi_O(g)),
        ("arithmetic_genus", curve_pa(g)),
    ]
    if all(u.degree is not None for u in g.vertices):
        rows.append(("degree", curve_degree(g)))
    if g.embedding_dim is not None:
        rows.append(("embedding_dim", g.embedding_dim))
    if as_json:
        _emit_json(dict(rows))
    else:
        for name, value in rows:
            print(f"{name:<20}{value}")
    return EXIT_OK


def _report_rows(g: ZappaticGraph, rep: InvariantReport, assumed: bool) -> dict:
    c = counts(g)
    return {
        "kind": "zappatic",
        "planar": g.planar,
        "vertices": c.v,
        "edges": c.e,
        "closed_faces": c.f,
        "open_faces": sum(c.r_n.values()),
        "angles": sum(c.s_n.values()),
        "degree": rep.degree,
        "sectional_genus": rep.sectional_genus,
        "chi_O": rep.chi_O,
        "b0": rep.b0,
        "b1": rep.b1,
        "b2": rep.b2,
        "pg_bound": rep.pg_bound,
        "pg": rep.pg,
        "q": rep.q,
        "equality_certain": rep.equality_certain,
        "smoothability_assumed": assumed,
    }


def cmd_invariants(args) -> int:
    doc = load_document(args.path)
    if isinstance(doc, CurveGraph):
        return _curve_invariants(doc, args.json)
    if not isinstance(doc, ZappaticGraph):
        raise ValueError(f"{args.path}: a residues document has no invariants")
    g = doc
    require_valid(g)
    phi = _maybe_phi(args)
    if is_normal_crossings(g):
        rep = normal_crossings_report(g, phi, ample_condition=args.assert_ample_condition)
        assumed = False
    else:
        rep = fibre_invariants(g, phi)
        assumed = True
    rows = _report_rows(g, rep, assumed)
    warning = None
    if g.planar:
        violations = check_planar(g)
        rows["realizability_violations"] = len(violations)
        if violations:
            warning = (
                f"warning: {len(violations)} coverage violations on this planar "
                "graph (run 'check' for details)"
            )
    if args.json:
        _emit_json(rows)
    else:
        for name, value in rows.items():
            if value is None:
                continue
            print(f"{name:<26}{value}")
        if assumed:
            print(
                "note: graph carries non-3-face markings; pg and q are those of "
                "a smooth fibre, assuming the surface deforms"
            )
        elif not rep.equality_certain:
            print(
                "note: pg bound only; pass --assert-ample-condition if the "
                "double curves are ample enough for equality"
            )
    if warning:
        print(warning, file=sys.stderr)
    return EXIT_OK


def _suggestion_payload(s) -> dict:
    return {
        "vertex": s.vertex,
        "edge_pair": [list(s.edge_pair[0]), list(s.edge_pair[1])],
        "action": s.action,
        "payload": [list(p) if isinstance(p, tuple) else p for p in s.payload]
        if isinstance(s.payload, tuple)
        else s.payload,
        "requires_new_edge": list(s.requires_new_edge) if s.requires_new_edge else None,
        "t": s.t,
        "description": s.describe(),
    }


def cmd_check(args) -> int:
    g = _load_zappatic(args.path)
    violations = check_planar(g)
    suggestions = suggest_completions(g) if violations else []
    if args.json:
        _emit_json(
            {
                "violations": [
                    {
                        "vertex": v.vertex,
                        "edge_pair": [list(v.edge_pair[0]), list(v.edge_pair[1])],
                        "covers": v.covers,
                    }
                    for v in violations
                ],
                "suggestions": [_suggestion_payload(s) for s in suggestions],
            }
        )
    elif not violations:
        print("coverage check passed: every adjacent edge pair is covered exactly once")
    else:
        print(f"{len(violations)} coverage violations")
        for v in violations:
            print(
                f"  vertex {v.vertex}: edges {v.edge_pair[0]} and {v.edge_pair[1]} "
                f"covered {v.covers} times"
            )
        if suggestions:
            print("suggestions:")
            for s in suggestions:
                print(f"  vertex {s.vertex} {s.edge_pair[0]}+{s.edge_pair[1]}: {s.describe()}")
    return EXIT_CHECK_FAILED if violations else EXIT_OK


def _marking_payload(marking) -> dict:
    from .surfaces import Angle, ClosedFace, OpenFace

    if isinstance(marking, ClosedFace):
        return {"closed_face": {"cycle": list(marking.cycle), "t": marking.t}}
    if isinstance(marking, OpenFace):
        return {"open_face": {"path": list(marking.path), "t": marking.t}}
    assert isinstance(marking, Angle)
    return {
        "angle": {
            "center": marking.center,
            "leaves": list(marking.sorted_leaves),
            "t": marking.t,
        }
    }


def trace_payload(trace: ReductionTrace) -> dict:
    return {
        "schema_version": 1,
        "kind": "reduction-trace",
        "initial_betti": list(trace.initial_betti),
        "final_betti": list(trace.final_betti),
        "steps": [
            {
                "kind": s.kind,
                "target": _marking_payload(s.target),
                "new_vertices": list(s.new_vertices),
                "betti_before": list(s.betti_before),
                "betti_after": list(s.betti_after),
            }
            for s in trace.steps
        ],
    }


def cmd_reduce(args) -> int:
    g = _load_zappatic(args.path)
    reduced, trace = semistable_reduce(g)
    if args.out is None:
        _emit_json(
            {"reduced": document_payload(reduced), "trace": trace_payload(trace)}
        )
        return EXIT_OK
    out = Path(args.out)
    out.write_text(serialize_document(reduced), encoding="utf-8")
    trace_path = out.with_suffix(".trace.json")
    trace_path.write_text(
        json.dumps(trace_payload(trace), indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    if args.json:
        _emit_json(trace_payload(trace))
    else:
        b = trace.final_betti
        noun = "step" if len(trace.steps) == 1 else "steps"
        print(
            f"{len(trace.steps)} reduction {noun}, betti (b0={b[0]}, b1={b[1]}, "
            f"b2={b[2]}) preserved"
        )
        for num, s in enumerate(trace.steps, 1):
            print(f"  {num}. {s.kind} {_describe_marking(s.target)} -> new vertex {s.new_vertices[0]}")
        print(f"reduced document written to {out}")
        print(f"trace written to {trace_path}")
    return EXIT_OK


def _describe_marking(marking) -> str:
    from .surfaces import Angle, ClosedFace, OpenFace

    if isinstance(marking, ClosedFace):
        return f"closed {marking.size}-face {marking.cycle} t={marking.t}"
    if isinstance(marking, OpenFace):
        return f"open {marking.size}-face {marking.path} t={marking.t}"
    assert isinstance(marking, Angle)
    return f"angle at {marking.center} over {marking.sorted_leaves} t={marking.t}"


def cmd_catalog(args) -> int:
    sys.stdout.write(serialize_document(catalog(args.name)))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    doc = load_document(args.path)
    if isinstance(doc, ResidueAssignment):
        raise ValueError(f"{args.path}: cannot export a residues document to DOT")
    _write_out(export_dot(doc), args.out)
    return EXIT_OK


def cmd_homology(args) -> int:
    g = _load_zappatic(args.path)
    complex_ = boundary_matrices(g)
    b0, b1, b2 = betti_numbers(complex_)
    basis = two_cycle_basis(complex_)
    if args.json:
        _emit_json(
            {
                "b0": b0,
                "b1": b1,
                "b2": b2,
                "face_order": [
                    {"cycle": list(cycle), "t": t} for (cycle, t) in complex_.face_order
                ],
                "two_cycle_basis": [list(vec) for vec in basis],
            }
        )
    else:
        print(f"betti    b0={b0} b1={b1} b2={b2}")
        faces = " ".join(f"{cycle}#{t}" for (cycle, t) in complex_.face_order)
        print(f"faces    {faces if faces else '(none)'}")
        if basis:
            print(f"2-cycle basis ({len(basis)} vector{'s' if len(basis) != 1 else ''}):")
            for vec in basis:
                print(f"  {list(vec)}")
        else:
            print("2-cycle basis: empty")
    return EXIT_OK


def cmd_section(args) -> int:
    from .surfaces import hyperplane_section

    g = _load_zappatic(args.path)
    _write_out(serialize_document(hyperplane_section(g)), args.out)
    return EXIT_OK


def cmd_residues(args) -> int:
    g = _load_zappatic(args.graph)
    doc = load_document(args.residues)
    if not isinstance(doc, ResidueAssignment):
        raise ValueError(f"{args.residues}: expected a residues document")
    balances = edge_balance(g, doc)
    balanced = all(total == 0 for total in balances.values())
    report = None
    if args.claimed_pg is not None:
        report = smoothability_report(g, args.claimed_pg, _maybe_phi(args))
    if args.json:
        payload = {
            "edge_balance": [
                {"edge": [i, j], "sum": str(total)} for (i, j), total in balances.items()
            ],
            "is_two_cycle": balanced,
        }
        if report is not None:
            payload["smoothability"] = {
                "claimed_pg": report.claimed_pg,
                "pg_bound": report.pg_bound,
                "verdict": report.verdict.name.lower(),
                "detail": report.verdict.value,
            }
        _emit_json(payload)
    else:
        if balances:
            print("edge balances:")
            for (i, j), total in balances.items():
                print(f"  ({i},{j}): {total}")
        else:
            print("edge balances: (no faces)")
        print(f"assignment is a 2-cycle: {'yes' if balanced else 'no'}")
        if report is not None:
            print(report.describe())
    failed = (not balanced) or (report is not None and report.verdict is not Verdict.HOLDS)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zappatic",
        description=(
            "Invariants of stick curves and Zappatic surfaces from their "
            "weighted dual graphs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="degree, genera, chi, Betti, pg/q")
    p.add_argument("path", help="curve or zappatic document")
    p.add_argument("--phi", help="restriction-map data file (rank or matrix)")
    p.add_argument(
        "--assert-ample-condition",
        action="store_true",
        help="assert the ample double-curve condition, making the pg bound exact",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("check", help="planar coverage check with suggestions")
    p.add_argument("path", help="planar zappatic document")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", help="rewrite to closed 3-faces only")
    p.add_argument("path", help="zappatic document")
    p.add_argument("--out", help="write the reduced document here (trace goes to *.trace.json)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("catalog", help="print a built-in example document")
    p.add_argument("name", help="e.g. rn:5, sn:4, en:6, tetrahedron, impossible")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("export-dot", help="Graphviz DOT for a graph document")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("homology", help="Betti numbers and a 2-cycle basis")
    p.add_argument("path", help="zappatic document")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("section", help="hyperplane-section curve document")
    p.add_argument("path", help="zappatic document")
    p.add_argument("--out")
    p.set_defaults(func=cmd_section)

    p = sub.add_parser("residues", help="edge balances plus smoothability verdict")
    p.add_argument("graph", help="zappatic document (closed 3-faces only)")
    p.add_argument("residues", help="residues document")
    p.add_argument("--claimed-pg", type=int, help="claimed fibre genus to test")
    p.add_argument("--phi", help="restriction-map data file (rank or matrix)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_residues)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MissingPhiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING_DATA
    except (DocumentError, InvalidGraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
