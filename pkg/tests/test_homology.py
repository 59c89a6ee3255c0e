import random

import pytest

from graphgen import random_zappatic_graph, relabel_zappatic
from oracles import combine_rows, rank_by_minors
from zappatic.catalog import catalog
from zappatic.homology import (
    ChainComplex,
    betti_numbers,
    boundary_matrices,
    two_cycle_basis,
)
from zappatic.linalg import kernel_basis, matrix_rank
from zappatic.surfaces import (
    ClosedFace,
    DoubleCurveEdge,
    SurfaceVertex,
    ZappaticGraph,
)


def test_matrix_rank_small():
    assert matrix_rank([[1, 2], [2, 4]], 2) == 1
    assert matrix_rank([[1, 0], [0, 1]], 2) == 2
    assert matrix_rank([], 3) == 0
    assert matrix_rank([[0, 0, 0]], 3) == 0


def test_kernel_basis_normalization():
    # x + y = 0 has kernel spanned by (1, -1): first nonzero entry positive
    assert kernel_basis([[1, 1]], 2) == [(1, -1)]
    # scaled rows give the same primitive vector
    assert kernel_basis([[3, 3]], 2) == [(1, -1)]
    # no constraints: unit vectors
    assert kernel_basis([], 2) == [(1, 0), (0, 1)]


def test_edge_orientation():
    g = ZappaticGraph(
        vertices=(SurfaceVertex(2), SurfaceVertex(5)),
        edges=(DoubleCurveEdge(2, 5),),
    )
    c = boundary_matrices(g)
    assert c.vertex_order == (2, 5)
    # edge (2,5) enters d1 as -1 at vertex 2 and +1 at vertex 5
    assert c.d1 == ((-1, 1),)
    assert c.d2 == ()


def test_face_orientation():
    g = ZappaticGraph(
        vertices=tuple(SurfaceVertex(k) for k in (1, 2, 3)),
        edges=(DoubleCurveEdge(1, 2), DoubleCurveEdge(1, 3), DoubleCurveEdge(2, 3)),
        closed_faces=(ClosedFace((1, 2, 3)),),
    )
    c = boundary_matrices(g)
    assert c.edge_order == ((1, 2), (1, 3), (2, 3))
    # +1 on (1,2), +1 on (2,3), -1 on (1,3)
    assert c.d2 == ((1, -1, 1),)
    assert betti_numbers(c) == (1, 0, 0)


def test_square_face_row():
    g = ZappaticGraph(
        vertices=tuple(SurfaceVertex(k) for k in (1, 2, 3, 4)),
        edges=(
            DoubleCurveEdge(1, 2),
            DoubleCurveEdge(2, 3),
            DoubleCurveEdge(3, 4),
            DoubleCurveEdge(1, 4),
        ),
        closed_faces=(ClosedFace((1, 2, 3, 4)),),
    )
    c = boundary_matrices(g)
    assert c.edge_order == ((1, 2), (1, 4), (2, 3), (3, 4))
    # cycle 1-2-3-4: up on (1,2), (2,3), (3,4); down on (4,1)
    assert c.d2 == ((1, -1, 1, 1),)
    assert betti_numbers(c) == (1, 0, 0)


def test_tetrahedron_betti_and_basis():
    c = boundary_matrices(catalog("tetrahedron"))
    assert betti_numbers(c) == (1, 0, 1)
    assert two_cycle_basis(c) == [(1, -1, 1, -1)]


def test_tetrahedron_against_minor_ranks():
    """Pin the tetrahedron ranks with the exhaustive-minors oracle."""
    c = boundary_matrices(catalog("tetrahedron"))
    assert rank_by_minors(c.d2, len(c.edge_order)) == 3
    assert rank_by_minors(c.d1, len(c.vertex_order)) == 3
    # so b2 = 4 - 3 = 1, b1 = (6 - 3) - 3 = 0, b0 = 4 - 3 = 1
    for vec in two_cycle_basis(c):
        assert combine_rows(vec, c.d2, len(c.edge_order)) == [0] * 6


def test_unfilled_cycle():
    g = ZappaticGraph(
        vertices=tuple(SurfaceVertex(k) for k in range(1, 6)),
        edges=tuple(DoubleCurveEdge(k, k + 1) for k in range(1, 5))
        + (DoubleCurveEdge(1, 5),),
    )
    assert betti_numbers(boundary_matrices(g)) == (1, 1, 0)
    assert two_cycle_basis(boundary_matrices(g)) == []


def test_two_spheres_basis():
    """Two tetrahedra sharing one vertex: b2 = 2, block-diagonal kernel."""
    verts = tuple(SurfaceVertex(k) for k in range(1, 8))
    quad1 = [1, 2, 3, 4]
    quad2 = [4, 5, 6, 7]
    edges = []
    faces = []
    for quad in (quad1, quad2):
        for pos, i in enumerate(quad):
            for j in quad[pos + 1 :]:
                edges.append(DoubleCurveEdge(i, j))
        a, b, c, d = quad
        for cycle in ((a, b, c), (a, b, d), (a, c, d), (b, c, d)):
            faces.append(ClosedFace(cycle))
    g = ZappaticGraph(vertices=verts, edges=tuple(edges), closed_faces=tuple(faces))
    complex_ = boundary_matrices(g)
    assert betti_numbers(complex_) == (1, 0, 2)
    basis = two_cycle_basis(complex_)
    assert len(basis) == 2
    face_sets = [frozenset(cycle) for (cycle, _t) in complex_.face_order]
    for vec in basis:
        support = {face_sets[pos] for pos, x in enumerate(vec) if x != 0}
        # each generator lives on one tetrahedron only
        assert all(s <= frozenset(quad1) for s in support) or all(
            s <= frozenset(quad2) for s in support
        )
        assert combine_rows(vec, complex_.d2, len(complex_.edge_order)) == [0] * len(
            complex_.edge_order
        )


def test_single_vertex():
    g = ZappaticGraph(vertices=(SurfaceVertex(1),))
    assert betti_numbers(boundary_matrices(g)) == (1, 0, 0)


def test_chain_complex_rejects_corruption():
    good = boundary_matrices(catalog("tetrahedron"))
    bad_d2 = ((1, 0, 0, 0, 0, 0),) + good.d2[1:]
    with pytest.raises(ValueError, match="compose"):
        ChainComplex(bad_d2, good.d1, good.face_order, good.edge_order, good.vertex_order)
    with pytest.raises(ValueError, match="shape"):
        ChainComplex(good.d2, good.d1[:-1], good.face_order, good.edge_order, good.vertex_order)
    out_of_range = ((2, 0, 0, 0, 0, 0),) + good.d2[1:]
    with pytest.raises(ValueError, match="outside"):
        ChainComplex(out_of_range, good.d1, good.face_order, good.edge_order, good.vertex_order)


def test_euler_identity_random():
    rng = random.Random(41)
    for _ in range(250):
        g = random_zappatic_graph(rng)
        c = boundary_matrices(g)  # construction asserts d2 . d1 == 0
        b0, b1, b2 = betti_numbers(c)
        assert b0 - b1 + b2 == len(c.vertex_order) - len(c.edge_order) + len(c.face_order)
        assert b0 >= 1 and b1 >= 0 and b2 >= 0
        assert len(two_cycle_basis(c)) == b2


def test_betti_survive_relabeling():
    rng = random.Random(43)
    for _ in range(60):
        g = random_zappatic_graph(rng)
        ids = [v.id for v in g.vertices]
        mapping = dict(zip(ids, rng.sample(range(1, 300), len(ids))))
        h = relabel_zappatic(g, mapping)
        assert betti_numbers(boundary_matrices(g)) == betti_numbers(
            boundary_matrices(h)
        )


def test_two_cycle_vectors_are_primitive():
    rng = random.Random(47)
    from math import gcd

    for _ in range(80):
        g = random_zappatic_graph(rng)
        for vec in two_cycle_basis(boundary_matrices(g)):
            nonzero = [x for x in vec if x != 0]
            assert nonzero, "kernel basis vector is zero"
            assert nonzero[0] > 0
            total = 0
            for x in nonzero:
                total = gcd(total, abs(x))
            assert total == 1
