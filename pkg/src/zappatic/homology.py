"""Chain complexes and Betti numbers of surface graphs.

The 2-complex of a surface graph is oriented lexicographically: each edge
points from its lower to its higher vertex id, each closed face is traversed
along its canonical cycle.  With that convention

    d1[edge (i,j)]  =  (vertex j) - (vertex i)
    d2[face u_1..u_n]  =  sum over k of (+1) * edge(u_k, u_{k+1})
                          when u_k < u_{k+1}, else (-1) * edge(u_{k+1}, u_k)

(indices cyclic), e.g. a triangle i < j < k contributes e_ij + e_jk - e_ik.
Both matrices have entries in {-1, 0, +1}, their composition telescopes to
zero, and

    b2 = f - rank d2
    b1 = (e - rank d1) - rank d2
    b0 = v - rank d1

are computed by exact rational elimination, so b0 - b1 + b2 = v - e + f holds
on the nose.  2-cycle bases are primitive integer vectors over the canonical
face order with positive first nonzero entry, which makes expected values in
tests literal constants.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import kernel_basis, matrix_rank
from .surfaces import ZappaticGraph, require_valid

# A face is keyed by its canonical cycle plus the multiplicity index t.
FaceKey = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class ChainComplex:
    """Boundary data: d2 is faces x edges, d1 is edges x vertices.

    Row/column meaning is fixed by the three order tuples.  Construction
    checks the shapes, the {-1, 0, +1} entry range, and that the boundary of
    a boundary vanishes; a failure means the matrices were corrupted.
    """

    d2: tuple[tuple[int, ...], ...]
    d1: tuple[tuple[int, ...], ...]
    face_order: tuple[FaceKey, ...]
    edge_order: tuple[tuple[int, int], ...]
    vertex_order: tuple[int, ...]

    def __post_init__(self):
        f, e, v = len(self.face_order), len(self.edge_order), len(self.vertex_order)
        if len(self.d2) != f or any(len(row) != e for row in self.d2):
            raise ValueError("chain complex: d2 shape does not match face/edge order")
        if len(self.d1) != e or any(len(row) != v for row in self.d1):
            raise ValueError("chain complex: d1 shape does not match edge/vertex order")
        for m in (self.d2, self.d1):
            for row in m:
                for x in row:
                    if x not in (-1, 0, 1):
                        raise ValueError(f"chain complex: entry {x} outside -1..1")
        for fi in range(f):
            for vi in range(v):
                s = sum(self.d2[fi][ei] * self.d1[ei][vi] for ei in range(e))
                if s != 0:
                    raise ValueError(
                        "chain complex: boundary maps do not compose to zero "
                        f"(face {self.face_order[fi]}, vertex {self.vertex_order[vi]})"
                    )


def boundary_matrices(g: ZappaticGraph) -> ChainComplex:
    """The oriented chain complex of a valid surface graph."""
    require_valid(g)
    vertex_order = g.vertex_ids()
    edge_order = tuple(e.pair for e in g.edges)
    face_order = tuple((fc.cycle, fc.t) for fc in g.closed_faces)
    vindex = {vid: k for k, vid in enumerate(vertex_order)}
    eindex = {pair: k for k, pair in enumerate(edge_order)}

    d1 = []
    for (i, j) in edge_order:
        row = [0] * len(vertex_order)
        row[vindex[i]] = -1
        row[vindex[j]] = 1
        d1.append(tuple(row))

    d2 = []
    for (cycle, _t) in face_order:
        row = [0] * len(edge_order)
        n = len(cycle)
        for k in range(n):
            a, b = cycle[k], cycle[(k + 1) % n]
            if a < b:
                row[eindex[(a, b)]] += 1
            else:
                row[eindex[(b, a)]] -= 1
        d2.append(tuple(row))

    return ChainComplex(
        d2=tuple(d2),
        d1=tuple(d1),
        face_order=face_order,
        edge_order=edge_order,
        vertex_order=vertex_order,
    )


def betti_numbers(c: ChainComplex) -> tuple[int, int, int]:
    """(b0, b1, b2) over Q via exact ranks of the boundary maps."""
    f, e, v = len(c.face_order), len(c.edge_order), len(c.vertex_order)
    rank_d2 = matrix_rank(c.d2, e)
    rank_d1 = matrix_rank(c.d1, v)
    nullity_d1 = e - rank_d1
    if rank_d2 > nullity_d1:
        raise ValueError(
            "chain complex is corrupted: rank d2 exceeds the nullity of d1"
        )
    return (v - rank_d1, nullity_d1 - rank_d2, f - rank_d2)


def two_cycle_basis(c: ChainComplex) -> list[tuple[int, ...]]:
    """Basis of ker d2 in face coordinates (canonical face order).

    Primitive integer vectors, positive first nonzero entry, ordered by the
    reduced echelon form's free columns; the list has length b2.
    """
    f, e = len(c.face_order), len(c.edge_order)
    # kernel of the map C2 -> C1, i.e. of the transpose acting on face vectors
    transposed = [[c.d2[fi][ei] for fi in range(f)] for ei in range(e)]
    return kernel_basis(transposed, f)
