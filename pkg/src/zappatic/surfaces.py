"""Associated graphs of good Zappatic surfaces.

A good Zappatic surface is a union of smooth components meeting along smooth
double curves, whose singularities in codimension two are of three shapes
only: cyclic points (n double curves closing up around a point), chain points
(they form an open chain), and fork points (n - 1 curves on one component
through a point).  The bookkeeping object is a weighted 2-complex:

  * one vertex per component, weighted (pg, q, degree, section_genus);
  * one simple edge per double curve, weighted (curve_degree, curve_genus);
  * a closed n-face per cyclic point (an n-cycle of vertices),
    an open n-face per chain point (an n-path; its endpoints are drawn with
    a dashed arc but carry no edge), and an angle per fork point (a center
    with at least three leaves).

Several coincident points of the same shape on the same vertices are told
apart by a multiplicity index t running 1..m with no gaps.  ``planar``
asserts that every component is a plane: then all vertex weights vanish,
degrees are 1, double curves are lines, and a vertex triple carries at most
one closed face.

Faces are stored canonically: a cycle starts at its smallest vertex and its
second entry is smaller than its last (fixing the orientation); a path runs
from its smaller endpoint.  Construction canonicalizes, so re-canonicalizing
a stored face is the identity.  `validate` reports every broken invariant as
a message and never aborts; operations that need a valid graph raise
`InvalidGraphError` carrying that list.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .curves import CurveEdge, CurveGraph, CurveVertex, InvalidGraphError


def canonical_cycle(cycle: Iterable[int]) -> tuple[int, ...]:
    """Rotate a cycle to start at its minimum and orient it second < last."""
    cyc = tuple(cycle)
    if not cyc:
        return cyc
    k = cyc.index(min(cyc))
    cyc = cyc[k:] + cyc[:k]
    if len(cyc) >= 3 and cyc[1] > cyc[-1]:
        cyc = (cyc[0],) + tuple(reversed(cyc[1:]))
    return cyc


def canonical_path(path: Iterable[int]) -> tuple[int, ...]:
    """Orient a path from its smaller endpoint."""
    p = tuple(path)
    if len(p) >= 2 and p[0] > p[-1]:
        p = tuple(reversed(p))
    return p


@dataclass(frozen=True)
class SurfaceVertex:
    """A component: id plus weights (pg, q, degree, sectional genus)."""

    id: int
    pg: int = 0
    q: int = 0
    degree: int = 1
    section_genus: int = 0

    @property
    def chi(self) -> int:
        """chi(O) of the smooth component, 1 - q + pg."""
        return 1 - self.q + self.pg


@dataclass(frozen=True)
class DoubleCurveEdge:
    """A double curve between components i < j, weighted (degree, genus)."""

    i: int
    j: int
    curve_degree: int = 1
    curve_genus: int = 0

    def __post_init__(self):
        if self.i > self.j:
            lo, hi = self.j, self.i
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "j", hi)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.i, self.j)

    @property
    def chi(self) -> int:
        """chi(O) of the double curve, 1 - genus."""
        return 1 - self.curve_genus


@dataclass(frozen=True)
class ClosedFace:
    """A cyclic point: the n-cycle of components around it, n >= 3."""

    cycle: tuple[int, ...]
    t: int = 1

    def __post_init__(self):
        object.__setattr__(self, "cycle", canonical_cycle(self.cycle))

    @property
    def size(self) -> int:
        return len(self.cycle)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def boundary_pairs(self) -> tuple[tuple[int, int], ...]:
        """Consecutive (unordered) vertex pairs around the cycle."""
        n = len(self.cycle)
        out = []
        for k in range(n):
            a, b = self.cycle[k], self.cycle[(k + 1) % n]
            out.append((min(a, b), max(a, b)))
        return tuple(out)


@dataclass(frozen=True)
class OpenFace:
    """A chain point: the n-path of components through it, n >= 3.

    No edge is required (or implied) between the two endpoints.
    """

    path: tuple[int, ...]
    t: int = 1

    def __post_init__(self):
        object.__setattr__(self, "path", canonical_path(self.path))

    @property
    def size(self) -> int:
        return len(self.path)

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.path[0], self.path[-1])

    def boundary_pairs(self) -> tuple[tuple[int, int], ...]:
        out = []
        for k in range(len(self.path) - 1):
            a, b = self.path[k], self.path[k + 1]
            out.append((min(a, b), max(a, b)))
        return tuple(out)


@dataclass(frozen=True)
class Angle:
    """A fork point: a center component with n - 1 >= 3 leaf components."""

    center: int
    leaves: frozenset[int]
    t: int = 1

    def __post_init__(self):
        object.__setattr__(self, "leaves", frozenset(self.leaves))

    @property
    def size(self) -> int:
        """The n of the fork point: number of leaves plus one."""
        return len(self.leaves) + 1

    @property
    def sorted_leaves(self) -> tuple[int, ...]:
        return tuple(sorted(self.leaves))


def _angle_key(a: Angle) -> tuple:
    return (a.center, a.sorted_leaves, a.t)


@dataclass(frozen=True)
class ZappaticGraph:
    """The associated weighted 2-complex of a good Zappatic surface.

    Construction normalizes presentation only (ordering, canonical faces);
    semantic invariants are reported by `validate` and enforced by
    `require_valid`.
    """

    vertices: tuple[SurfaceVertex, ...]
    edges: tuple[DoubleCurveEdge, ...] = ()
    closed_faces: tuple[ClosedFace, ...] = ()
    open_faces: tuple[OpenFace, ...] = ()
    angles: tuple[Angle, ...] = ()
    planar: bool = False

    def __post_init__(self):
        object.__setattr__(
            self, "vertices", tuple(sorted(tuple(self.vertices), key=lambda v: v.id))
        )
        object.__setattr__(
            self, "edges", tuple(sorted(tuple(self.edges), key=lambda e: e.pair))
        )
        object.__setattr__(
            self,
            "closed_faces",
            tuple(sorted(tuple(self.closed_faces), key=lambda f: (f.cycle, f.t))),
        )
        object.__setattr__(
            self,
            "open_faces",
            tuple(sorted(tuple(self.open_faces), key=lambda f: (f.path, f.t))),
        )
        object.__setattr__(
            self, "angles", tuple(sorted(tuple(self.angles), key=_angle_key))
        )
        object.__setattr__(self, "planar", bool(self.planar))

    @cached_property
    def _by_id(self) -> dict[int, SurfaceVertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def edge_pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(e.pair for e in self.edges)

    @cached_property
    def _adjacency(self) -> dict[int, tuple[int, ...]]:
        nbr = defaultdict(set)
        for e in self.edges:
            nbr[e.i].add(e.j)
            nbr[e.j].add(e.i)
        return {v.id: tuple(sorted(nbr[v.id])) for v in self.vertices}

    def vertex(self, vid: int) -> SurfaceVertex:
        return self._by_id[vid]

    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(v.id for v in self.vertices)

    def has_vertex(self, vid: int) -> bool:
        return vid in self._by_id

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edge_pairs

    def neighbors(self, vid: int) -> tuple[int, ...]:
        return self._adjacency.get(vid, ())


@dataclass(frozen=True)
class Counts:
    """Element counts: v vertices, e edges, f = sum of the closed faces.

    f_n / r_n / s_n break the closed faces, open faces and angles down by
    their n (cycle length, path length, leaves + 1).
    """

    v: int
    e: int
    f: int
    f_n: Mapping[int, int] = field(default_factory=dict)
    r_n: Mapping[int, int] = field(default_factory=dict)
    s_n: Mapping[int, int] = field(default_factory=dict)


def _check_pairs_are_edges(g, pairs, problems, label):
    for (a, b) in pairs:
        if a == b:
            problems.append(f"{label}: repeated consecutive vertex {a}")
        elif (a, b) not in g.edge_pairs:
            problems.append(f"{label}: missing edge ({a},{b})")


def _check_t_contiguity(groups, problems, describe):
    for key, ts in sorted(groups.items()):
        if sorted(ts) != list(range(1, len(ts) + 1)):
            problems.append(
                f"{describe(key)}: t indices {tuple(sorted(ts))} should be 1..{len(ts)}"
            )


def validate(g: ZappaticGraph) -> list[str]:
    """Every violated invariant as a human-readable message; never raises."""
    problems: list[str] = []
    if not g.vertices:
        problems.append("graph has no vertices")
    ids = set()
    for v in g.vertices:
        if v.id < 1:
            problems.append(f"vertex id {v.id} is not positive")
        if v.id in ids:
            problems.append(f"duplicate vertex id {v.id}")
        ids.add(v.id)
        for name in ("pg", "q", "section_genus"):
            if getattr(v, name) < 0:
                problems.append(f"vertex {v.id}: {name} must be >= 0")
        if v.degree < 1:
            problems.append(f"vertex {v.id}: degree must be >= 1")
        if g.planar and (v.pg, v.q, v.degree, v.section_genus) != (0, 0, 1, 0):
            problems.append(
                f"planar graph: vertex {v.id} must have pg=q=section_genus=0, degree=1"
            )
    seen_pairs = set()
    for e in g.edges:
        if e.i == e.j:
            problems.append(f"edge ({e.i},{e.j}) is a loop")
            continue
        for end in (e.i, e.j):
            if end not in ids:
                problems.append(f"edge ({e.i},{e.j}): vertex {end} missing")
        if e.pair in seen_pairs:
            problems.append(f"duplicate edge {e.pair}")
        seen_pairs.add(e.pair)
        if e.curve_degree < 1:
            problems.append(f"edge {e.pair}: curve_degree must be >= 1")
        if e.curve_genus < 0:
            problems.append(f"edge {e.pair}: curve_genus must be >= 0")
        if g.planar and (e.curve_degree, e.curve_genus) != (1, 0):
            problems.append(
                f"planar graph: edge {e.pair} must have curve_degree=1, curve_genus=0"
            )
    if g.vertices and not _is_connected(g):
        problems.append("graph is not connected")

    face_groups = defaultdict(list)
    for fc in g.closed_faces:
        label = f"closed {fc.size}-face {fc.cycle} t={fc.t}"
        if fc.size < 3:
            problems.append(f"{label}: fewer than 3 vertices")
        if len(set(fc.cycle)) != len(fc.cycle):
            problems.append(f"{label}: repeated vertex")
        for u in fc.cycle:
            if u not in ids:
                problems.append(f"{label}: vertex {u} missing")
        if fc.size >= 3 and len(set(fc.cycle)) == len(fc.cycle):
            _check_pairs_are_edges(g, fc.boundary_pairs(), problems, label)
        if fc.t < 1:
            problems.append(f"{label}: t must be >= 1")
        face_groups[fc.vertex_set].append(fc.t)
    _check_t_contiguity(
        {tuple(sorted(k)): ts for k, ts in face_groups.items()},
        problems,
        lambda key: f"closed faces on vertices {key}",
    )
    if g.planar:
        for vset, ts in sorted(face_groups.items(), key=lambda kv: tuple(sorted(kv[0]))):
            if len(ts) > 1:
                problems.append(
                    f"planar graph: {len(ts)} closed faces on vertices "
                    f"{tuple(sorted(vset))} (at most one allowed)"
                )

    open_groups = defaultdict(list)
    for of in g.open_faces:
        label = f"open {of.size}-face {of.path} t={of.t}"
        if of.size < 3:
            problems.append(f"{label}: fewer than 3 vertices")
        if len(set(of.path)) != len(of.path):
            problems.append(f"{label}: repeated vertex")
        for u in of.path:
            if u not in ids:
                problems.append(f"{label}: vertex {u} missing")
        if of.size >= 2 and len(set(of.path)) == len(of.path):
            _check_pairs_are_edges(g, of.boundary_pairs(), problems, label)
        if of.t < 1:
            problems.append(f"{label}: t must be >= 1")
        open_groups[of.path].append(of.t)
    _check_t_contiguity(open_groups, problems, lambda key: f"open faces on path {key}")

    angle_groups = defaultdict(list)
    for an in g.angles:
        label = f"angle at {an.center} over {an.sorted_leaves} t={an.t}"
        if len(an.leaves) < 3:
            problems.append(f"{label}: fewer than 3 leaves")
        if an.center not in ids:
            problems.append(f"{label}: vertex {an.center} missing")
        if an.center in an.leaves:
            problems.append(f"{label}: center listed as a leaf")
        for leaf in an.sorted_leaves:
            if leaf not in ids:
                problems.append(f"{label}: vertex {leaf} missing")
            elif leaf != an.center and not g.has_edge(an.center, leaf):
                problems.append(
                    f"{label}: missing edge ({min(an.center, leaf)},{max(an.center, leaf)})"
                )
        if an.t < 1:
            problems.append(f"{label}: t must be >= 1")
        angle_groups[(an.center, an.sorted_leaves)].append(an.t)
    _check_t_contiguity(
        angle_groups, problems, lambda key: f"angles at {key[0]} over {key[1]}"
    )
    return problems


def _is_connected(g: ZappaticGraph) -> bool:
    start = g.vertices[0].id
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g.vertices)


def require_valid(g: ZappaticGraph) -> None:
    """Raise InvalidGraphError carrying `validate`'s messages, if any."""
    problems = validate(g)
    if problems:
        raise InvalidGraphError(problems)


def is_normal_crossings(g: ZappaticGraph) -> bool:
    """True when every marking is a closed 3-face (no chains, forks, n > 3)."""
    return (
        not g.open_faces
        and not g.angles
        and all(fc.size == 3 for fc in g.closed_faces)
    )


def counts(g: ZappaticGraph) -> Counts:
    """Element counts (v, e, f) with the by-size breakdowns f_n, r_n, s_n."""
    require_valid(g)
    f_n = Counter(fc.size for fc in g.closed_faces)
    r_n = Counter(of.size for of in g.open_faces)
    s_n = Counter(an.size for an in g.angles)
    return Counts(
        v=len(g.vertices),
        e=len(g.edges),
        f=len(g.closed_faces),
        f_n=dict(sorted(f_n.items())),
        r_n=dict(sorted(r_n.items())),
        s_n=dict(sorted(s_n.items())),
    )


def chi_graph(g: ZappaticGraph) -> int:
    """Euler characteristic v - e + f (closed faces only)."""
    require_valid(g)
    return len(g.vertices) - len(g.edges) + len(g.closed_faces)


def one_skeleton(g: ZappaticGraph) -> CurveGraph:
    """The underlying weighted simple graph: one curve edge per double curve.

    Vertices keep (section_genus, degree); faces and markings are forgotten.
    """
    require_valid(g)
    vertices = tuple(
        CurveVertex(v.id, genus=v.section_genus, degree=v.degree) for v in g.vertices
    )
    edges = tuple(CurveEdge(e.i, e.j) for e in g.edges)
    return CurveGraph(vertices, edges)


def hyperplane_section(g: ZappaticGraph) -> CurveGraph:
    """Dual graph of a general hyperplane section.

    Each component contributes a curve of its (section_genus, degree); a
    double curve of degree c meets the hyperplane in c points, giving c
    parallel edges indexed 1..c.
    """
    require_valid(g)
    vertices = tuple(
        CurveVertex(v.id, genus=v.section_genus, degree=v.degree) for v in g.vertices
    )
    edges = []
    for e in g.edges:
        for index in range(1, e.curve_degree + 1):
            edges.append(CurveEdge(e.i, e.j, index=index))
    return CurveGraph(vertices, tuple(edges))
