"""Dual graphs of reduced nodal curves with smooth components.

A reducible nodal curve is modelled as a connected multigraph: one vertex per
irreducible component, weighted by (geometric genus, degree), and one edge per
node joining the two components that meet there.  Parallel edges are told
apart by a positive index; loops are forbidden (a component is not allowed to
touch itself).  Stick curves are the special case where every component is a
line, i.e. every vertex carries weight (0, 1).

The graph-level genus arithmetic lives here:

    chi(G)   = v - e                      (Euler characteristic of the graph)
    h1(G)    = 1 - chi(G)                 (independent cycles, connected G)
    chi(O_C) = v - e - sum(genus_i)
    p_a(C)   = 1 - chi(O_C) = e - v + 1 + sum(genus_i)

together with constructors for the standard stick-curve shapes: chains R_n,
forks S_n, cycles E_n, and arbitrary trees / unicyclic graphs.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass


class InvalidGraphError(ValueError):
    """A graph value violates its structural invariants."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(self.violations) or "invalid graph")


@dataclass(frozen=True)
class CurveVertex:
    """An irreducible component: vertex id plus (genus, degree) weights.

    ``degree`` may be omitted (None) for abstract curves that carry no
    projective embedding data.
    """

    id: int
    genus: int = 0
    degree: int | None = None


@dataclass(frozen=True)
class CurveEdge:
    """A node of the curve, stored with i < j and oriented from i to j.

    ``index`` distinguishes parallel edges between the same pair of
    components; the indices of a parallel family run 1..m with no gaps.
    """

    i: int
    j: int
    index: int = 1

    def __post_init__(self):
        if self.i > self.j:
            lo, hi = self.j, self.i
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "j", hi)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.i, self.j)


@dataclass(frozen=True)
class CurveGraph:
    """Weighted dual graph of a nodal curve.

    The constructor normalizes ordering (vertices by id, edges by
    (i, j, index)) and rejects structurally broken input outright.
    Connectivity is *not* enforced here; the genus operations that need it
    (`curve_h1`, `curve_pa`) reject disconnected graphs themselves.
    """

    vertices: tuple[CurveVertex, ...]
    edges: tuple[CurveEdge, ...] = ()
    embedding_dim: int | None = None

    def __post_init__(self):
        vs = tuple(sorted(tuple(self.vertices), key=lambda v: v.id))
        es = tuple(sorted(tuple(self.edges), key=lambda e: (e.i, e.j, e.index)))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        problems = _structural_problems(vs, es, self.embedding_dim)
        if problems:
            raise InvalidGraphError(problems)

    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(v.id for v in self.vertices)


def _structural_problems(vertices, edges, embedding_dim) -> list[str]:
    problems = []
    if not vertices:
        problems.append("graph has no vertices")
    ids = set()
    for v in vertices:
        if v.id < 1:
            problems.append(f"vertex id {v.id} is not positive")
        if v.id in ids:
            problems.append(f"duplicate vertex id {v.id}")
        ids.add(v.id)
        if v.genus < 0:
            problems.append(f"vertex {v.id}: genus must be >= 0")
        if v.degree is not None and v.degree < 1:
            problems.append(f"vertex {v.id}: degree must be >= 1")
    seen = set()
    per_pair = defaultdict(list)
    for e in edges:
        if e.i == e.j:
            problems.append(f"edge ({e.i},{e.j}) is a loop")
            continue
        for end in (e.i, e.j):
            if end not in ids:
                problems.append(f"edge ({e.i},{e.j}): vertex {end} missing")
        key = (e.i, e.j, e.index)
        if key in seen:
            problems.append(f"duplicate edge ({e.i},{e.j}) index {e.index}")
        seen.add(key)
        if e.index < 1:
            problems.append(f"edge ({e.i},{e.j}): index must be >= 1")
        per_pair[e.pair].append(e.index)
    for pair, indices in sorted(per_pair.items()):
        if sorted(indices) != list(range(1, len(indices) + 1)):
            problems.append(
                f"edges {pair}: parallel indices {tuple(sorted(indices))} "
                f"should be 1..{len(indices)}"
            )
    if embedding_dim is not None and embedding_dim < 1:
        problems.append("embedding_dim must be >= 1")
    return problems


def is_connected(g: CurveGraph) -> bool:
    """True when every vertex is reachable from the first one."""
    if not g.vertices:
        return False
    adjacency = defaultdict(set)
    for e in g.edges:
        adjacency[e.i].add(e.j)
        adjacency[e.j].add(e.i)
    start = g.vertices[0].id
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g.vertices)


def _require_connected(g: CurveGraph, op: str) -> None:
    if not is_connected(g):
        raise InvalidGraphError([f"{op}: graph is not connected"])


def curve_counts(g: CurveGraph) -> tuple[int, int]:
    """(number of components, number of nodes)."""
    return (len(g.vertices), len(g.edges))


def curve_euler(g: CurveGraph) -> int:
    """Euler characteristic v - e of the dual graph."""
    return len(g.vertices) - len(g.edges)


def curve_h1(g: CurveGraph) -> int:
    """First Betti number of the dual graph; the input must be connected."""
    _require_connected(g, "curve_h1")
    return 1 - curve_euler(g)


def curve_chi_O(g: CurveGraph) -> int:
    """chi of the structure sheaf: v - e - sum of component genera."""
    return curve_euler(g) - sum(v.genus for v in g.vertices)


def curve_pa(g: CurveGraph) -> int:
    """Arithmetic genus e - v + 1 + sum of component genera (connected input)."""
    _require_connected(g, "curve_pa")
    return 1 - curve_chi_O(g)


def curve_degree(g: CurveGraph) -> int:
    """Total degree: sum of component degrees; every vertex must carry one."""
    total = 0
    for v in g.vertices:
        if v.degree is None:
            raise ValueError(f"curve_degree: vertex {v.id} has no degree weight")
        total += v.degree
    return total


def _line_vertices(n: int) -> tuple[CurveVertex, ...]:
    return tuple(CurveVertex(k, genus=0, degree=1) for k in range(1, n + 1))


def make_stick(kind: str, n: int) -> CurveGraph:
    """Standard stick-curve graphs on n lines.

    kind:
      "chain" -- path 1-2-...-n, degree-n rational normal-curve degeneration
                 in P^n;
      "fork"  -- star with center n and teeth 1..n-1, also in P^n.  The
                 standard shape needs n >= 4; n == 3 is accepted and
                 coincides with the 3-chain up to relabelling;
      "cycle" -- n-gon 1-2-...-n-1, the degree-n elliptic degeneration
                 in P^(n-1).
    """
    if kind not in ("chain", "fork", "cycle"):
        raise ValueError(f"make_stick: unknown kind {kind!r} (chain, fork, cycle)")
    if n < 3:
        raise ValueError(f"make_stick: need n >= 3, got {n}")
    if kind == "chain":
        edges = tuple(CurveEdge(k, k + 1) for k in range(1, n))
        return CurveGraph(_line_vertices(n), edges, embedding_dim=n)
    if kind == "fork":
        edges = tuple(CurveEdge(k, n) for k in range(1, n))
        return CurveGraph(_line_vertices(n), edges, embedding_dim=n)
    edges = tuple(CurveEdge(k, k + 1) for k in range(1, n)) + (CurveEdge(1, n),)
    return CurveGraph(_line_vertices(n), edges, embedding_dim=n - 1)


def _require_unweighted(g: CurveGraph, op: str) -> None:
    for v in g.vertices:
        if v.genus != 0 or v.degree is not None:
            raise ValueError(f"{op}: vertex {v.id} carries weights; expected a bare graph")


def make_tree_stick(tree: CurveGraph) -> CurveGraph:
    """Stick curve on any tree shape: stamps (0, 1) weights on every vertex.

    The input must be a bare (weightless) tree on at least 3 vertices; the
    result sits in P^n for n the number of vertices.
    """
    v, e = curve_counts(tree)
    if v < 3:
        raise ValueError(f"make_tree_stick: need at least 3 vertices, got {v}")
    _require_unweighted(tree, "make_tree_stick")
    if e != v - 1 or not is_connected(tree):
        raise ValueError("make_tree_stick: input is not a tree")
    vertices = tuple(CurveVertex(u.id, genus=0, degree=1) for u in tree.vertices)
    return CurveGraph(vertices, tree.edges, embedding_dim=v)


def make_unicyclic_stick(graph: CurveGraph) -> CurveGraph:
    """Stick curve on any connected simple graph with exactly one cycle.

    Such degree-n stick curves live in P^(n-1).  Parallel edges are rejected
    (the shape must be a simple graph), as is any input with h1 != 1.
    """
    v, e = curve_counts(graph)
    if v < 3:
        raise ValueError(f"make_unicyclic_stick: need at least 3 vertices, got {v}")
    _require_unweighted(graph, "make_unicyclic_stick")
    if any(edge.index != 1 for edge in graph.edges):
        raise ValueError("make_unicyclic_stick: parallel edges are not allowed")
    if not is_connected(graph) or e != v:
        raise ValueError("make_unicyclic_stick: input is not connected unicyclic")
    vertices = tuple(CurveVertex(u.id, genus=0, degree=1) for u in graph.vertices)
    return CurveGraph(vertices, graph.edges, embedding_dim=v - 1)


def impossible_stick_curve() -> CurveGraph:
    """The recorded double-weighted graph that no stick curve realizes.

    A quadrilateral 1-2-3-4 with the diagonal 1-3, all weights (0, 1): each
    of the two triangles of mutually meeting lines spans a plane, both
    planes contain lines 1 and 3, so lines 2 and 4 end up coplanar and would
    have to meet in an extra node the graph does not have.
    """
    edges = tuple(
        CurveEdge(i, j) for (i, j) in ((1, 2), (1, 3), (1, 4), (2, 3), (3, 4))
    )
    return CurveGraph(_line_vertices(4), edges)
