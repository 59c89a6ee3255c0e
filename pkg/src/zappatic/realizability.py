"""Necessary conditions for a planar surface graph to come from planes.

In an actual union of planes in general position every point where two
double lines of the same plane meet is a singular point of one of the three
allowed shapes, so every unordered pair of adjacent edges must be accounted
for by exactly one marking:

  * a closed face in which the two edges are consecutive at their shared
    vertex;
  * an open face in which they are consecutive at an interior vertex;
  * an angle centered at the shared vertex whose leaves contain both
    opposite endpoints.

`check_planar` reports every pair covered zero times (the two double lines
would still meet somewhere, but the graph records no singular point there)
or more than once.  The condition is necessary, not sufficient: an empty
report does not certify that a configuration of planes exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .curves import InvalidGraphError
from .surfaces import Angle, ClosedFace, OpenFace, ZappaticGraph, require_valid

EdgePair = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class CoverageViolation:
    """An adjacent edge pair at `vertex` covered `covers` != 1 times."""

    vertex: int
    edge_pair: EdgePair
    covers: int


@dataclass(frozen=True)
class CompletionSuggestion:
    """One way to repair a coverage violation.

    For an uncovered pair: a marking to add (`payload` is the face cycle,
    the open-face path, or the (center, leaves) of an angle; a closed face
    may need the extra edge in `requires_new_edge`).  For an over-covered
    pair: a covering marking to remove (then `t` identifies it).
    """

    vertex: int
    edge_pair: EdgePair
    action: str
    payload: tuple
    requires_new_edge: tuple[int, int] | None = None
    t: int | None = None

    def describe(self) -> str:
        if self.action == "add_closed_face":
            extra = (
                f" [requires new edge {self.requires_new_edge}]"
                if self.requires_new_edge
                else ""
            )
            return f"add closed 3-face {self.payload}{extra}"
        if self.action == "add_open_face":
            return f"add open 3-face {self.payload}"
        if self.action == "add_angle":
            center, leaves = self.payload
            return f"add angle at {center} over {leaves}"
        kind = self.action.removeprefix("remove_").replace("_", " ")
        return f"remove {kind} {self.payload} (t={self.t})"


def _pair_key(w: int, a: int, b: int) -> EdgePair:
    ea = (min(w, a), max(w, a))
    eb = (min(w, b), max(w, b))
    return (ea, eb) if ea <= eb else (eb, ea)


def _covered_pairs(marking) -> list[tuple[int, EdgePair]]:
    """(shared vertex, edge pair) for every adjacency a marking accounts for."""
    out = []
    if isinstance(marking, ClosedFace):
        cycle = marking.cycle
        n = len(cycle)
        for k in range(n):
            w = cycle[k]
            out.append((w, _pair_key(w, cycle[k - 1], cycle[(k + 1) % n])))
    elif isinstance(marking, OpenFace):
        path = marking.path
        for k in range(1, len(path) - 1):
            w = path[k]
            out.append((w, _pair_key(w, path[k - 1], path[k + 1])))
    elif isinstance(marking, Angle):
        for l1, l2 in combinations(marking.sorted_leaves, 2):
            out.append((marking.center, _pair_key(marking.center, l1, l2)))
    else:
        raise TypeError(f"not a marking: {marking!r}")
    return out


def check_planar(g: ZappaticGraph) -> list[CoverageViolation]:
    """All adjacent edge pairs whose marking coverage count is not 1.

    Input must be a valid graph flagged planar.  An empty list means the
    necessary coverage condition holds.
    """
    require_valid(g)
    if not g.planar:
        raise InvalidGraphError(["check_planar: graph is not flagged planar"])
    coverage: dict[tuple[int, EdgePair], int] = {}
    for marking in (*g.closed_faces, *g.open_faces, *g.angles):
        for key in _covered_pairs(marking):
            coverage[key] = coverage.get(key, 0) + 1
    violations = []
    for v in g.vertices:
        for a, b in combinations(g.neighbors(v.id), 2):
            key = (v.id, _pair_key(v.id, a, b))
            covers = coverage.pop(key, 0)
            if covers != 1:
                violations.append(
                    CoverageViolation(vertex=v.id, edge_pair=key[1], covers=covers)
                )
    # whatever is left covers a non-adjacent pair, impossible on a valid graph
    return violations


def suggest_completions(g: ZappaticGraph) -> list[CompletionSuggestion]:
    """Candidate marking edits fixing each coverage violation.

    For uncovered pairs: the closed 3-face on the triple (flagging the extra
    edge it needs if absent), the open 3-face through the shared vertex, and
    the minimal angles obtained by adjoining one more neighbor.  For
    over-covered pairs: removal of each covering marking.  Deterministic
    order, no claim of completeness.
    """
    violations = check_planar(g)
    suggestions: list[CompletionSuggestion] = []
    for viol in violations:
        w = viol.vertex
        (ea, eb) = viol.edge_pair
        a = ea[0] if ea[1] == w else ea[1]
        b = eb[0] if eb[1] == w else eb[1]
        a, b = min(a, b), max(a, b)
        if viol.covers == 0:
            needs = None if g.has_edge(a, b) else (a, b)
            suggestions.append(
                CompletionSuggestion(
                    vertex=w,
                    edge_pair=viol.edge_pair,
                    action="add_closed_face",
                    payload=ClosedFace((w, a, b)).cycle,
                    requires_new_edge=needs,
                )
            )
            suggestions.append(
                CompletionSuggestion(
                    vertex=w,
                    edge_pair=viol.edge_pair,
                    action="add_open_face",
                    payload=OpenFace((a, w, b)).path,
                )
            )
            for extra in g.neighbors(w):
                if extra in (a, b):
                    continue
                leaves = tuple(sorted((a, b, extra)))
                suggestions.append(
                    CompletionSuggestion(
                        vertex=w,
                        edge_pair=viol.edge_pair,
                        action="add_angle",
                        payload=(w, leaves),
                    )
                )
        else:
            for marking in (*g.closed_faces, *g.open_faces, *g.angles):
                if (w, viol.edge_pair) not in _covered_pairs(marking):
                    continue
                if isinstance(marking, ClosedFace):
                    action, payload = "remove_closed_face", marking.cycle
                elif isinstance(marking, OpenFace):
                    action, payload = "remove_open_face", marking.path
                else:
                    action, payload = "remove_angle", (marking.center, marking.sorted_leaves)
                suggestions.append(
                    CompletionSuggestion(
                        vertex=w,
                        edge_pair=viol.edge_pair,
                        action=action,
                        payload=payload,
                        t=marking.t,
                    )
                )
    return suggestions
