"""Residue data on triple points and the smoothability test built on it.

A global logarithmic 2-form on a surface whose markings are all closed
3-faces carries one rational residue per triple point; swapping two indices
flips the sign, so values are stored on the increasing representative

    omega[(i, j, k, t)]     with i < j < k.

The residue theorem on one double curve forces, for each edge (i, j), the
signed sum over all triple points through it to vanish:

    sum_{k<i} w[k,i,j] - sum_{i<k<j} w[i,k,j] + sum_{k>j} w[i,j,k] = 0.

These are exactly the coordinates of the assignment paired with the rows of
the boundary map d2 (a triangle a < b < c counts +w on (a,b) and (b,c) and
-w on (a,c)), so an assignment balances on every edge precisely when it is
a 2-cycle of the complex.  `edge_balance` below is written directly from the
sign rule, independent of the chain-complex code, which keeps the two routes
honest cross-checks of one another.

Smoothability: if the surface were the central fibre of a degeneration with
smooth total space, its claimed geometric genus could not exceed the bound
of `pg_upper_bound`; a claimed pg above the bound is inconsistent input,
below the bound rules smoothing out, equal means the necessary condition
holds (it is not sufficient).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .invariants import PhiSpec, pg_upper_bound
from .surfaces import ZappaticGraph, is_normal_crossings, require_valid
from .curves import InvalidGraphError

# (i, j, k, t) with i < j < k: a closed 3-face key plus multiplicity index.
TripleKey = tuple[int, int, int, int]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise ValueError(f"residue value must be rational, got {value!r}")


class ResidueAssignment:
    """A rational value per closed 3-face, keyed (i, j, k, t) with i < j < k."""

    def __init__(self, values: Mapping[TripleKey, Fraction] | Iterable):
        items = values.items() if isinstance(values, Mapping) else values
        cleaned = {}
        for key, value in items:
            key = tuple(key)
            if len(key) != 4:
                raise ValueError(f"residue key must be (i, j, k, t): {key!r}")
            i, j, k, t = key
            if not i < j < k:
                raise ValueError(f"residue key {key!r} is not increasing")
            if t < 1:
                raise ValueError(f"residue key {key!r} has t < 1")
            if key in cleaned:
                raise ValueError(f"duplicate residue key {key!r}")
            cleaned[key] = _as_fraction(value)
        self._items: tuple[tuple[TripleKey, Fraction], ...] = tuple(
            sorted(cleaned.items())
        )
        self._map = dict(self._items)

    def items(self) -> tuple[tuple[TripleKey, Fraction], ...]:
        return self._items

    def keys(self) -> tuple[TripleKey, ...]:
        return tuple(k for k, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other) -> bool:
        return isinstance(other, ResidueAssignment) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self._items)
        return f"ResidueAssignment({{{inner}}})"


def _triple_sign(triple: tuple[int, int, int]) -> int:
    """Sign of the permutation sorting a triple of distinct ints."""
    a, b, c = triple
    sign = 1
    if a > b:
        a, b, sign = b, a, -sign
    if b > c:
        b, c, sign = c, b, -sign
    if a > b:
        a, b, sign = b, a, -sign
    return sign


def residue_at(a: ResidueAssignment, i: int, j: int, k: int, t: int = 1) -> Fraction:
    """The residue at the (i, j, k) triple point, in the given index order.

    Indices may come in any order; the value is the stored one twisted by
    the permutation sign.  Unknown keys raise KeyError.
    """
    if len({i, j, k}) != 3:
        raise ValueError(f"residue indices must be distinct: ({i}, {j}, {k})")
    key = tuple(sorted((i, j, k))) + (t,)
    if key not in a._map:
        raise KeyError(f"no closed 3-face with key {key}")
    return _triple_sign((i, j, k)) * a._map[key]


def _graph_triple_keys(g: ZappaticGraph) -> set[TripleKey]:
    return {fc.cycle + (fc.t,) for fc in g.closed_faces}


def edge_balance(
    g: ZappaticGraph, a: ResidueAssignment
) -> dict[tuple[int, int], Fraction]:
    """Signed residue sum per edge, straight from the sign rule.

    The graph's markings must all be closed 3-faces and the assignment must
    key exactly those faces.  Edges lying on no face are omitted (their sum
    is empty); an edge that appears carries the rational total, zero or not.
    """
    require_valid(g)
    if not is_normal_crossings(g):
        raise InvalidGraphError(
            ["edge_balance: graph must carry closed 3-faces only"]
        )
    graph_keys = _graph_triple_keys(g)
    given = set(a._map)
    if given != graph_keys:
        missing = sorted(graph_keys - given)
        extra = sorted(given - graph_keys)
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if extra:
            detail.append(f"not faces of the graph: {extra}")
        raise ValueError("assignment keys do not match the 3-faces: " + "; ".join(detail))
    balance: dict[tuple[int, int], Fraction] = {}
    for (i, j, k, _t), value in a.items():
        for (x, y, sign) in ((i, j, 1), (j, k, 1), (i, k, -1)):
            balance[(x, y)] = balance.get((x, y), Fraction(0)) + sign * value
    return dict(sorted(balance.items()))


def is_two_cycle(g: ZappaticGraph, a: ResidueAssignment) -> bool:
    """True when every edge balance vanishes (the residue theorem holds)."""
    return all(total == 0 for total in edge_balance(g, a).values())


class Verdict(enum.Enum):
    HOLDS = "necessary condition holds"
    VIOLATED = "violated: not smoothable"
    INCONSISTENT = "inconsistent input"


@dataclass(frozen=True)
class SmoothabilityReport:
    verdict: Verdict
    claimed_pg: int
    pg_bound: int

    def describe(self) -> str:
        return (
            f"claimed pg {self.claimed_pg} vs bound {self.pg_bound}: "
            f"{self.verdict.value}"
        )


def smoothability_report(
    g: ZappaticGraph, claimed_pg: int, phi: PhiSpec | None = None
) -> SmoothabilityReport:
    """Compare a claimed fibre genus against the graph's pg bound.

    claimed == bound: the necessary condition holds (no sufficiency claim);
    claimed < bound: a smooth total space is impossible, not smoothable;
    claimed > bound: the claim itself is inconsistent with the graph.
    """
    if claimed_pg < 0:
        raise ValueError(f"claimed pg must be >= 0, got {claimed_pg}")
    result = pg_upper_bound(g, phi)
    if claimed_pg == result.bound:
        verdict = Verdict.HOLDS
    elif claimed_pg < result.bound:
        verdict = Verdict.VIOLATED
    else:
        verdict = Verdict.INCONSISTENT
    return SmoothabilityReport(
        verdict=verdict, claimed_pg=claimed_pg, pg_bound=result.bound
    )
