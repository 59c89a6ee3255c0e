"""Graph-level semistable reduction.

A surface with chain points, fork points or cyclic points of order n > 3 can
be traded for one with only ordinary triple points; on the graph this is a
sequence of local rewrites, each gluing in the cone over the marking's
footprint with a fresh rational apex vertex:

  * resolve_open_face:   apex joined to every path vertex, one triangle per
                         path edge, marking removed;
  * resolve_angle:       apex joined to the center and all leaves, one
                         triangle (apex, leaf, center) per leaf, marking
                         removed;
  * triangulate_closed_face (n >= 4): apex joined to every cycle vertex, the
                         n-face replaced by n triangles.

Each cone is contractible and glued along its base, so (b0, b1, b2) never
move; `semistable_reduce` recomputes them after every step and refuses to
continue on a mismatch, recording the verified steps in a `ReductionTrace`.

New apexes get weight (pg=0, q=0, degree=1, section_genus=0) and unit
rational edges.  Degree placeholders mean degree sums are *not* preserved,
only the homological invariants are; the planar flag is kept as-is since the
new elements carry planar-compatible weights.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .homology import betti_numbers, boundary_matrices
from .surfaces import (
    Angle,
    ClosedFace,
    DoubleCurveEdge,
    OpenFace,
    SurfaceVertex,
    ZappaticGraph,
    is_normal_crossings,
    require_valid,
)

Marking = ClosedFace | OpenFace | Angle


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    target: Marking
    new_vertices: tuple[int, ...]
    betti_before: tuple[int, int, int]
    betti_after: tuple[int, int, int]


@dataclass(frozen=True)
class ReductionTrace:
    initial_betti: tuple[int, int, int]
    final_betti: tuple[int, int, int]
    steps: tuple[ReductionStep, ...] = ()


def _fresh_id(g: ZappaticGraph) -> int:
    return max(v.id for v in g.vertices) + 1


def _apex(vid: int) -> SurfaceVertex:
    return SurfaceVertex(vid, pg=0, q=0, degree=1, section_genus=0)


def _spokes(apex: int, base: tuple[int, ...]) -> tuple[DoubleCurveEdge, ...]:
    return tuple(DoubleCurveEdge(u, apex) for u in base)


def _compact_closed(faces: tuple[ClosedFace, ...]) -> tuple[ClosedFace, ...]:
    """Renumber t indices per vertex set back to 1..m after a removal."""
    order: dict[frozenset[int], int] = {}
    out = []
    for fc in sorted(faces, key=lambda f: (f.cycle, f.t)):
        nxt = order.get(fc.vertex_set, 0) + 1
        order[fc.vertex_set] = nxt
        out.append(fc if fc.t == nxt else replace(fc, t=nxt))
    return tuple(out)


def _compact_open(faces: tuple[OpenFace, ...]) -> tuple[OpenFace, ...]:
    order: dict[tuple[int, ...], int] = {}
    out = []
    for of in sorted(faces, key=lambda f: (f.path, f.t)):
        nxt = order.get(of.path, 0) + 1
        order[of.path] = nxt
        out.append(of if of.t == nxt else replace(of, t=nxt))
    return tuple(out)


def _compact_angles(angles: tuple[Angle, ...]) -> tuple[Angle, ...]:
    order: dict[tuple, int] = {}
    out = []
    for an in sorted(angles, key=lambda a: (a.center, a.sorted_leaves, a.t)):
        key = (an.center, an.sorted_leaves)
        nxt = order.get(key, 0) + 1
        order[key] = nxt
        out.append(an if an.t == nxt else replace(an, t=nxt))
    return tuple(out)


def _remove_one(markings, target, kind):
    kept = list(markings)
    try:
        kept.remove(target)
    except ValueError:
        raise ValueError(f"{kind} {target} is not a marking of this graph") from None
    return tuple(kept)


def triangulate_closed_face(g: ZappaticGraph, face: ClosedFace) -> ZappaticGraph:
    """Replace a closed n-face (n >= 4) by the cone: apex + n triangles."""
    require_valid(g)
    remaining = _remove_one(g.closed_faces, face, "closed face")
    if face.size < 4:
        raise ValueError("triangulate_closed_face: face is already a triangle")
    w = _fresh_id(g)
    n = face.size
    triangles = tuple(
        ClosedFace((w, face.cycle[k], face.cycle[(k + 1) % n])) for k in range(n)
    )
    return ZappaticGraph(
        vertices=g.vertices + (_apex(w),),
        edges=g.edges + _spokes(w, face.cycle),
        closed_faces=_compact_closed(remaining) + triangles,
        open_faces=g.open_faces,
        angles=g.angles,
        planar=g.planar,
    )


def resolve_open_face(g: ZappaticGraph, face: OpenFace) -> ZappaticGraph:
    """Cone an open n-face: apex over the path, n - 1 triangles, marking gone."""
    require_valid(g)
    remaining = _remove_one(g.open_faces, face, "open face")
    w = _fresh_id(g)
    path = face.path
    triangles = tuple(
        ClosedFace((w, path[k], path[k + 1])) for k in range(len(path) - 1)
    )
    return ZappaticGraph(
        vertices=g.vertices + (_apex(w),),
        edges=g.edges + _spokes(w, path),
        closed_faces=g.closed_faces + triangles,
        open_faces=_compact_open(remaining),
        angles=g.angles,
        planar=g.planar,
    )


def resolve_angle(g: ZappaticGraph, angle: Angle) -> ZappaticGraph:
    """Cone an angle: apex over center and leaves, one triangle per leaf."""
    require_valid(g)
    remaining = _remove_one(g.angles, angle, "angle")
    w = _fresh_id(g)
    base = (angle.center,) + angle.sorted_leaves
    triangles = tuple(
        ClosedFace((w, leaf, angle.center)) for leaf in angle.sorted_leaves
    )
    return ZappaticGraph(
        vertices=g.vertices + (_apex(w),),
        edges=g.edges + _spokes(w, base),
        closed_faces=g.closed_faces + triangles,
        open_faces=g.open_faces,
        angles=_compact_angles(remaining),
        planar=g.planar,
    )


def _next_marking(g: ZappaticGraph):
    if g.open_faces:
        return ("resolve_open_face", g.open_faces[0])
    if g.angles:
        return ("resolve_angle", g.angles[0])
    big = [fc for fc in g.closed_faces if fc.size >= 4]
    if big:
        big.sort(key=lambda f: (-f.size, f.cycle, f.t))
        return ("triangulate_closed_face", big[0])
    return None


_REWRITES = {
    "resolve_open_face": resolve_open_face,
    "resolve_angle": resolve_angle,
    "triangulate_closed_face": triangulate_closed_face,
}


def semistable_reduce(g: ZappaticGraph) -> tuple[ZappaticGraph, ReductionTrace]:
    """Rewrite until only closed 3-faces remain, verifying Betti per step.

    Order: open faces first, then angles, then larger faces by descending n,
    lexicographic within each class; fresh vertex ids are allocated
    consecutively above the current maximum.  A Betti mismatch after any
    step (which would contradict the construction) raises RuntimeError.
    """
    require_valid(g)
    current = g
    before = betti_numbers(boundary_matrices(current))
    initial = before
    steps: list[ReductionStep] = []
    while True:
        chosen = _next_marking(current)
        if chosen is None:
            break
        kind, marking = chosen
        new_vertex = _fresh_id(current)
        current = _REWRITES[kind](current, marking)
        after = betti_numbers(boundary_matrices(current))
        steps.append(
            ReductionStep(
                kind=kind,
                target=marking,
                new_vertices=(new_vertex,),
                betti_before=before,
                betti_after=after,
            )
        )
        if after != before:
            raise RuntimeError(
                f"semistable_reduce: Betti numbers moved {before} -> {after} "
                f"in step {len(steps)} ({kind} {marking})"
            )
        before = after
    assert is_normal_crossings(current)
    return current, ReductionTrace(
        initial_betti=initial, final_betti=before, steps=tuple(steps)
    )
