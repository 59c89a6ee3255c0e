import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphgen import random_zappatic_graph
from zappatic.catalog import catalog
from zappatic.curves import InvalidGraphError, curve_counts, curve_euler
from zappatic.surfaces import (
    Angle,
    ClosedFace,
    DoubleCurveEdge,
    OpenFace,
    SurfaceVertex,
    ZappaticGraph,
    canonical_cycle,
    canonical_path,
    chi_graph,
    counts,
    hyperplane_section,
    is_normal_crossings,
    one_skeleton,
    require_valid,
    validate,
)


def triangle(planar=True, with_face=True):
    return ZappaticGraph(
        vertices=tuple(SurfaceVertex(k) for k in (1, 2, 3)),
        edges=(DoubleCurveEdge(1, 2), DoubleCurveEdge(1, 3), DoubleCurveEdge(2, 3)),
        closed_faces=(ClosedFace((1, 2, 3)),) if with_face else (),
        planar=planar,
    )


def test_canonical_cycle():
    assert canonical_cycle((2, 3, 1)) == (1, 2, 3)
    assert canonical_cycle((1, 3, 2)) == (1, 2, 3)
    assert canonical_cycle((4, 3, 2, 5)) == (2, 3, 4, 5)
    assert canonical_cycle((2, 5, 4, 3)) == (2, 3, 4, 5)
    # orientation is fixed by second < last
    assert canonical_cycle((1, 4, 2, 3)) == (1, 3, 2, 4)


def test_canonical_path():
    assert canonical_path((3, 2, 1)) == (1, 2, 3)
    assert canonical_path((1, 5, 2)) == (1, 5, 2)
    assert canonical_path((2, 5, 1)) == (1, 5, 2)


@given(st.permutations(list(range(1, 8))), st.integers(min_value=3, max_value=7))
def test_canonical_cycle_is_rotation_and_reflection_stable(perm, n):
    cycle = tuple(perm[:n])
    canon = canonical_cycle(cycle)
    assert canonical_cycle(canon) == canon  # idempotent
    for shift in range(n):
        rotated = cycle[shift:] + cycle[:shift]
        assert canonical_cycle(rotated) == canon
        assert canonical_cycle(tuple(reversed(rotated))) == canon
    assert sorted(canon) == sorted(cycle)


@given(st.permutations(list(range(1, 7))), st.integers(min_value=2, max_value=6))
def test_canonical_path_is_reversal_stable(perm, n):
    path = tuple(perm[:n])
    canon = canonical_path(path)
    assert canonical_path(canon) == canon
    assert canonical_path(tuple(reversed(path))) == canon


def test_counts():
    c = counts(triangle())
    assert (c.v, c.e, c.f) == (3, 3, 1)
    assert c.f_n == {3: 1}

    tetra = catalog("tetrahedron")
    c = counts(tetra)
    assert (c.v, c.e, c.f) == (4, 6, 4)
    assert c.f_n == {3: 4}

    path4 = catalog("rn:4")
    c = counts(path4)
    assert (c.v, c.e, c.f) == (4, 3, 0)
    assert c.r_n == {4: 1}
    assert c.s_n == {}

    fork = catalog("sn:5")
    c = counts(fork)
    assert c.s_n == {5: 1}


def test_chi_graph():
    assert chi_graph(catalog("tetrahedron")) == 2
    assert chi_graph(triangle()) == 1
    assert chi_graph(triangle(with_face=False)) == 0
    assert chi_graph(catalog("rn:4")) == 1


def test_one_skeleton_forgets_faces():
    tetra = catalog("tetrahedron")
    sk = one_skeleton(tetra)
    assert curve_counts(sk) == (4, 6)
    assert curve_euler(sk) == -2
    assert all((v.genus, v.degree) == (0, 1) for v in sk.vertices)


def test_hyperplane_section_expands_degrees():
    g = ZappaticGraph(
        vertices=(
            SurfaceVertex(1, degree=3, section_genus=1),
            SurfaceVertex(2, degree=2),
        ),
        edges=(DoubleCurveEdge(1, 2, curve_degree=3, curve_genus=1),),
    )
    section = hyperplane_section(g)
    assert curve_counts(section) == (2, 3)
    assert [e.index for e in section.edges] == [1, 2, 3]
    assert section.vertices[0].genus == 1
    assert section.vertices[0].degree == 3
    # planar graphs: section equals the one-skeleton
    tetra = catalog("tetrahedron")
    assert hyperplane_section(tetra) == one_skeleton(tetra)


def test_validate_accepts_catalog():
    for name in ("tetrahedron", "impossible", "rn:5", "sn:4", "en:6", "r3-planar"):
        assert validate(catalog(name)) == []


def test_validate_reports_structures():
    g = ZappaticGraph(
        vertices=(SurfaceVertex(1), SurfaceVertex(2), SurfaceVertex(3)),
        edges=(DoubleCurveEdge(1, 2), DoubleCurveEdge(2, 3)),
        closed_faces=(ClosedFace((1, 2, 3)),),
    )
    problems = validate(g)
    assert any("missing edge (1,3)" in p for p in problems)

    g = ZappaticGraph(
        vertices=(SurfaceVertex(1), SurfaceVertex(2)),
        edges=(DoubleCurveEdge(1, 2),),
        open_faces=(OpenFace((1, 2, 5)),),
    )
    assert any("vertex 5 missing" in p for p in validate(g))

    disconnected = ZappaticGraph(
        vertices=(SurfaceVertex(1), SurfaceVertex(2), SurfaceVertex(3)),
        edges=(DoubleCurveEdge(1, 2),),
    )
    assert any("not connected" in p for p in validate(disconnected))

    dup = ZappaticGraph(
        vertices=(SurfaceVertex(1), SurfaceVertex(1)),
    )
    assert any("duplicate vertex" in p for p in validate(dup))


def test_validate_reports_weights_and_planarity():
    g = ZappaticGraph(
        vertices=(SurfaceVertex(1, pg=1), SurfaceVertex(2)),
        edges=(DoubleCurveEdge(1, 2),),
        planar=True,
    )
    assert any("planar graph: vertex 1" in p for p in validate(g))

    g = ZappaticGraph(
        vertices=(SurfaceVertex(1), SurfaceVertex(2)),
        edges=(DoubleCurveEdge(1, 2, curve_genus=1),),
        planar=True,
    )
    assert any("planar graph: edge (1, 2)" in p for p in validate(g))

    two_faces = ZappaticGraph(
        vertices=tuple(SurfaceVertex(k) for k in (1, 2, 3)),
        edges=(DoubleCurveEdge(1, 2), DoubleCurveEdge(1, 3), DoubleCurveEdge(2, 3)),
        closed_faces=(ClosedFace((1, 2, 3), t=1), ClosedFace((1, 2, 3), t=2)),
        planar=True,
    )
    assert any("at most one" in p for p in validate(two_faces))
    # same multiplicity is fine without the planar flag
    non_planar = ZappaticGraph(
        vertices=two_faces.vertices,
        edges=two_faces.edges,
        closed_faces=two_faces.closed_faces,
    )
    assert validate(non_planar) == []


def test_validate_reports_t_gaps():
    g = ZappaticGraph(
        vertices=tuple(SurfaceVertex(k) for k in (1, 2, 3)),
        edges=(DoubleCurveEdge(1, 2), DoubleCurveEdge(1, 3), DoubleCurveEdge(2, 3)),
        closed_faces=(ClosedFace((1, 2, 3), t=2),),
    )
    assert any("t indices" in p for p in validate(g))


def test_validate_reports_angle_problems():
    g = ZappaticGraph(
        vertices=tuple(SurfaceVertex(k) for k in (1, 2, 3, 4)),
        edges=(DoubleCurveEdge(1, 4), DoubleCurveEdge(2, 4), DoubleCurveEdge(3, 4)),
        angles=(Angle(center=4, leaves=frozenset({1, 2})),),
    )
    assert any("fewer than 3 leaves" in p for p in validate(g))
    g = ZappaticGraph(
        vertices=tuple(SurfaceVertex(k) for k in (1, 2, 3, 4)),
        edges=(DoubleCurveEdge(1, 4), DoubleCurveEdge(2, 4), DoubleCurveEdge(3, 4)),
        angles=(Angle(center=4, leaves=frozenset({1, 2, 4})),),
    )
    assert any("center listed as a leaf" in p for p in validate(g))


def test_require_valid_raises_with_messages():
    g = ZappaticGraph(
        vertices=(SurfaceVertex(1), SurfaceVertex(2)),
        edges=(DoubleCurveEdge(1, 2),),
        closed_faces=(ClosedFace((1, 2, 9)),),
    )
    with pytest.raises(InvalidGraphError) as err:
        require_valid(g)
    assert any("vertex 9 missing" in v for v in err.value.violations)


def test_is_normal_crossings():
    assert is_normal_crossings(catalog("tetrahedron"))
    assert is_normal_crossings(triangle(with_face=False))
    assert not is_normal_crossings(catalog("rn:4"))
    assert not is_normal_crossings(catalog("sn:4"))
    assert not is_normal_crossings(catalog("en:4"))


def test_chi_identity_on_random_graphs():
    rng = random.Random(23)
    for _ in range(200):
        g = random_zappatic_graph(rng)
        c = counts(g)
        assert chi_graph(g) == c.v - c.e + c.f
        assert chi_graph(g) == curve_euler(one_skeleton(g)) + c.f
        assert sum(c.f_n.values()) == c.f


def test_stored_faces_are_canonical():
    rng = random.Random(31)
    for _ in range(100):
        g = random_zappatic_graph(rng)
        for fc in g.closed_faces:
            assert canonical_cycle(fc.cycle) == fc.cycle
        for of in g.open_faces:
            assert canonical_path(of.path) == of.path
