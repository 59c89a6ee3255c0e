"""Numerical invariants of a surface graph and of its smooth deformations.

With X = union of components X_i glued along double curves C_ij, everything
below is graph arithmetic:

    degree          d      = sum d_i
    sectional genus g      = sum g_i + sum c_ij - v + 1
    chi(O_X)               = sum (1 - q_i + pg_i) - sum (1 - g_ij) + f

The geometric genus is controlled by the restriction map Phi from the
component H^1(O)'s to the double-curve H^1(O)'s, a (sum g_ij) x (sum q_i)
matrix supplied by the caller when it matters:

    pg(X)  <=  b2(G)  +  sum pg_i  +  dim coker Phi

for graphs whose only markings are closed 3-faces, with equality when every
component is regular (all q_i = 0) or when the caller asserts the ample
double-curve condition.  If the graph is the central fibre of a degeneration
with smooth total space, the bound computes the fibre's pg exactly for any
good graph, and q follows from chi(O) = 1 - q + pg.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import InvalidGraphError
from .homology import betti_numbers, boundary_matrices
from .linalg import matrix_rank
from .surfaces import ZappaticGraph, is_normal_crossings, require_valid


class MissingPhiError(ValueError):
    """The requested invariant needs restriction-map data not supplied."""


@dataclass(frozen=True)
class PhiSpec:
    """Restriction-map data: either the rank directly or an integer matrix.

    The matrix rows correspond to double-curve H^1 dimensions (sum g_ij in
    total), columns to component H^1 dimensions (sum q_i in total); its rank
    is computed exactly.  Exactly one of the two fields must be given.
    """

    rank: int | None = None
    matrix: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if (self.rank is None) == (self.matrix is None):
            raise ValueError("PhiSpec: give exactly one of rank or matrix")
        if self.rank is not None and self.rank < 0:
            raise ValueError("PhiSpec: rank must be >= 0")
        if self.matrix is not None:
            rows = tuple(tuple(row) for row in self.matrix)
            object.__setattr__(self, "matrix", rows)
            widths = {len(row) for row in rows}
            if len(widths) > 1:
                raise ValueError("PhiSpec: matrix rows have unequal lengths")

    def resolved_rank(self) -> int:
        if self.matrix is not None:
            ncols = len(self.matrix[0]) if self.matrix else 0
            return matrix_rank(self.matrix, ncols)
        return self.rank  # type: ignore[return-value]


@dataclass(frozen=True)
class PgBound:
    bound: int
    equality_certain: bool


@dataclass(frozen=True)
class InvariantReport:
    """Everything the graph determines about the surface (or its fibre).

    pg and q are filled in only when they are exact, in which case pg equals
    pg_bound and equality_certain is set.
    """

    degree: int
    sectional_genus: int
    chi_O: int
    b0: int
    b1: int
    b2: int
    pg_bound: int
    equality_certain: bool
    pg: int | None = None
    q: int | None = None

    def __post_init__(self):
        if self.pg is not None and (self.pg != self.pg_bound or not self.equality_certain):
            raise ValueError("InvariantReport: exact pg must equal the certain bound")


def degree(g: ZappaticGraph) -> int:
    """Sum of the component degrees."""
    require_valid(g)
    return sum(v.degree for v in g.vertices)


def sectional_genus(g: ZappaticGraph) -> int:
    """Arithmetic genus of a general hyperplane section.

    Equals sum g_i + sum c_ij - v + 1; for planar graphs this is e - v + 1.
    """
    require_valid(g)
    return (
        sum(v.section_genus for v in g.vertices)
        + sum(e.curve_degree for e in g.edges)
        - len(g.vertices)
        + 1
    )


def chi_O(g: ZappaticGraph) -> int:
    """chi of the structure sheaf: component chis minus curve chis plus f."""
    require_valid(g)
    return (
        sum(v.chi for v in g.vertices)
        - sum(e.chi for e in g.edges)
        + len(g.closed_faces)
    )


def _h1_totals(g: ZappaticGraph) -> tuple[int, int]:
    """(sum of double-curve genera, sum of component irregularities)."""
    return (sum(e.curve_genus for e in g.edges), sum(v.q for v in g.vertices))


def coker_phi_dim(g: ZappaticGraph, phi: PhiSpec | None = None) -> int:
    """Dimension of coker Phi for the restriction map of the graph.

    Needs no data when the target is trivial (sum g_ij = 0, result 0) or the
    source is trivial (sum q_i = 0, result sum g_ij); otherwise a PhiSpec is
    required.  A supplied rank or matrix is checked against the graph's
    dimensions.
    """
    require_valid(g)
    target_dim, source_dim = _h1_totals(g)
    rank = None
    if phi is not None:
        if phi.matrix is not None:
            if len(phi.matrix) != target_dim:
                raise ValueError(
                    f"phi matrix has {len(phi.matrix)} rows, expected {target_dim}"
                )
            if target_dim and len(phi.matrix[0]) != source_dim:
                raise ValueError(
                    f"phi matrix has {len(phi.matrix[0])} columns, expected {source_dim}"
                )
        rank = phi.resolved_rank()
        if rank > min(target_dim, source_dim):
            raise ValueError(
                f"phi rank {rank} exceeds min(sum g_ij, sum q_i) = "
                f"{min(target_dim, source_dim)}"
            )
    if target_dim == 0:
        return 0
    if source_dim == 0:
        return target_dim
    if rank is None:
        raise MissingPhiError(
            "restriction-map data required: both sum g_ij "
            f"({target_dim}) and sum q_i ({source_dim}) are positive"
        )
    return target_dim - rank


def _require_normal_crossings(g: ZappaticGraph, op: str) -> None:
    if not is_normal_crossings(g):
        raise InvalidGraphError(
            [f"{op}: graph must carry closed 3-faces only (no chains, forks, n > 3)"]
        )


def pg_upper_bound(
    g: ZappaticGraph, phi: PhiSpec | None = None, ample_condition: bool = False
) -> PgBound:
    """Upper bound b2 + sum pg_i + dim coker Phi for the geometric genus.

    Only graphs whose markings are all closed 3-faces qualify.  The bound is
    attained when every component is regular, or when the caller asserts the
    ample condition on the double curves (`ample_condition=True`).
    """
    require_valid(g)
    _require_normal_crossings(g, "pg_upper_bound")
    _, _, b2 = betti_numbers(boundary_matrices(g))
    bound = b2 + sum(v.pg for v in g.vertices) + coker_phi_dim(g, phi)
    certain = ample_condition or all(v.q == 0 for v in g.vertices)
    return PgBound(bound=bound, equality_certain=certain)


def planar_pg_q(g: ZappaticGraph) -> tuple[int, int]:
    """(pg, q) of a planar surface graph with only closed 3-faces.

    For such surfaces pg = b2 and q = b1 of the 2-complex, exactly.
    """
    require_valid(g)
    if not g.planar:
        raise InvalidGraphError(["planar_pg_q: graph is not flagged planar"])
    _require_normal_crossings(g, "planar_pg_q")
    b0, b1, b2 = betti_numbers(boundary_matrices(g))
    return (b2, b1)


def fibre_invariants(g: ZappaticGraph, phi: PhiSpec | None = None) -> InvariantReport:
    """Invariants of a smooth fibre degenerating to the surface of `g`.

    The caller asserts smoothability (there is a degeneration with smooth
    total space whose central fibre has this graph); degree, sectional genus
    and chi(O) are constant in the family and pg is exact:

        pg = b2 + sum pg_i + dim coker Phi,    q = 1 + pg - chi(O).
    """
    require_valid(g)
    d = degree(g)
    sg = sectional_genus(g)
    chi = chi_O(g)
    b0, b1, b2 = betti_numbers(boundary_matrices(g))
    pg = b2 + sum(v.pg for v in g.vertices) + coker_phi_dim(g, phi)
    return InvariantReport(
        degree=d,
        sectional_genus=sg,
        chi_O=chi,
        b0=b0,
        b1=b1,
        b2=b2,
        pg_bound=pg,
        equality_certain=True,
        pg=pg,
        q=1 + pg - chi,
    )


def normal_crossings_report(
    g: ZappaticGraph, phi: PhiSpec | None = None, ample_condition: bool = False
) -> InvariantReport:
    """Report for an only-3-face graph without assuming it deforms.

    pg and q are filled in only when one of the equality conditions holds
    (all components regular, or the asserted ample condition); q then comes
    from chi(O) = 1 - q + pg.
    """
    require_valid(g)
    _require_normal_crossings(g, "normal_crossings_report")
    d = degree(g)
    sg = sectional_genus(g)
    chi = chi_O(g)
    b0, b1, b2 = betti_numbers(boundary_matrices(g))
    bound = b2 + sum(v.pg for v in g.vertices) + coker_phi_dim(g, phi)
    certain = ample_condition or all(v.q == 0 for v in g.vertices)
    return InvariantReport(
        degree=d,
        sectional_genus=sg,
        chi_O=chi,
        b0=b0,
        b1=b1,
        b2=b2,
        pg_bound=bound,
        equality_certain=certain,
        pg=bound if certain else None,
        q=(1 + bound - chi) if certain else None,
    )
