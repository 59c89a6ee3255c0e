"""Built-in worked examples, addressable by name from the CLI.

Parametrized families (the graph-level analogues of the stick-curve shapes):

  rn:<n>   chain point of order n: a path on n vertices with one open
           n-face (abstract, not flagged planar), n >= 3;
  sn:<n>   fork point of order n: a star with center n, leaves 1..n-1 and
           one angle (abstract), n >= 4;
  en:<n>   cyclic point of order n: a planar n-gon with one closed n-face,
           n >= 3.

Fixed examples:

  tetrahedron   four planes in general position: K4 with all four closed
                3-faces, planar;
  impossible    the planar graph whose edge pairs at vertices 1 and 3 are
                covered by no marking, so no configuration of planes
                realizes it;
  r3-planar     three planes through a chain point: a planar path with one
                open 3-face (the one open face whose dashed arc is omitted
                when drawing planar graphs);
  e3-triangle   alias of en:3, the triangle of planes around an ordinary
                triple point.
"""

from __future__ import annotations

from .surfaces import Angle, ClosedFace, DoubleCurveEdge, OpenFace, SurfaceVertex, ZappaticGraph


def catalog_names() -> tuple[str, ...]:
    return (
        "rn:<n>",
        "sn:<n>",
        "en:<n>",
        "tetrahedron",
        "impossible",
        "r3-planar",
        "e3-triangle",
    )


def _planes(n: int) -> tuple[SurfaceVertex, ...]:
    return tuple(SurfaceVertex(k) for k in range(1, n + 1))


def _chain_point(n: int) -> ZappaticGraph:
    edges = tuple(DoubleCurveEdge(k, k + 1) for k in range(1, n))
    return ZappaticGraph(
        vertices=_planes(n),
        edges=edges,
        open_faces=(OpenFace(tuple(range(1, n + 1))),),
    )


def _fork_point(n: int) -> ZappaticGraph:
    edges = tuple(DoubleCurveEdge(k, n) for k in range(1, n))
    return ZappaticGraph(
        vertices=_planes(n),
        edges=edges,
        angles=(Angle(center=n, leaves=frozenset(range(1, n))),),
    )


def _cyclic_point(n: int) -> ZappaticGraph:
    edges = tuple(DoubleCurveEdge(k, k + 1) for k in range(1, n)) + (
        DoubleCurveEdge(1, n),
    )
    return ZappaticGraph(
        vertices=_planes(n),
        edges=edges,
        closed_faces=(ClosedFace(tuple(range(1, n + 1))),),
        planar=True,
    )


def _tetrahedron() -> ZappaticGraph:
    edges = tuple(
        DoubleCurveEdge(i, j) for i in range(1, 5) for j in range(i + 1, 5)
    )
    faces = tuple(
        ClosedFace(cycle) for cycle in ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))
    )
    return ZappaticGraph(vertices=_planes(4), edges=edges, closed_faces=faces, planar=True)


def _impossible() -> ZappaticGraph:
    edges = tuple(
        DoubleCurveEdge(i, j) for (i, j) in ((1, 2), (1, 3), (1, 4), (2, 3), (3, 4))
    )
    faces = (ClosedFace((1, 2, 3)), ClosedFace((1, 3, 4)))
    return ZappaticGraph(vertices=_planes(4), edges=edges, closed_faces=faces, planar=True)


def _r3_planar() -> ZappaticGraph:
    edges = (DoubleCurveEdge(1, 2), DoubleCurveEdge(2, 3))
    return ZappaticGraph(
        vertices=_planes(3),
        edges=edges,
        open_faces=(OpenFace((1, 2, 3)),),
        planar=True,
    )


_FIXED = {
    "tetrahedron": _tetrahedron,
    "impossible": _impossible,
    "r3-planar": _r3_planar,
    "e3-triangle": lambda: _cyclic_point(3),
}

_FAMILIES = {
    "rn": (_chain_point, 3),
    "sn": (_fork_point, 4),
    "en": (_cyclic_point, 3),
}


def catalog(name: str) -> ZappaticGraph:
    """Look a catalog entry up by name, e.g. "rn:5" or "tetrahedron"."""
    if name in _FIXED:
        return _FIXED[name]()
    prefix, sep, rest = name.partition(":")
    if sep and prefix in _FAMILIES:
        builder, minimum = _FAMILIES[prefix]
        try:
            n = int(rest)
        except ValueError:
            n = None
        if n is not None and n >= minimum:
            return builder(n)
        raise ValueError(
            f"catalog: {prefix}:<n> needs an integer n >= {minimum}, got {rest!r}"
        )
    raise ValueError(
        f"unknown catalog name {name!r}; valid names: " + ", ".join(catalog_names())
    )
