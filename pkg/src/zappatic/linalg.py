"""Exact linear algebra over the rationals for small integer matrices.

Everything here is plain sequential Gauss-Jordan elimination on
`fractions.Fraction` entries: no pivoting heuristics, no floating point,
so ranks are exact and kernel bases are bit-reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


def _echelon(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Reduce `rows` in place to reduced row-echelon form.

    Pivots are chosen as the first nonzero entry scanning rows top-down and
    columns left-to-right.  Returns the pivot column indices in order.
    """
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pivot_row = None
        for rr in range(r, len(rows)):
            if rows[rr][c] != 0:
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for rr in range(len(rows)):
            if rr != r and rows[rr][c] != 0:
                factor = rows[rr][c]
                rows[rr] = [a - factor * b for a, b in zip(rows[rr], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def matrix_rank(rows: IntMatrix, ncols: int) -> int:
    """Rank over Q of a matrix given as rows of length `ncols`."""
    work = [[Fraction(x) for x in row] for row in rows]
    return len(_echelon(work, ncols))


def _primitive(vec: list[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, first nonzero positive."""
    denom = lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def kernel_basis(rows: IntMatrix, ncols: int) -> list[tuple[int, ...]]:
    """Basis of {x in Q^ncols : M x = 0} as primitive integer vectors.

    One basis vector per free column of the reduced row-echelon form, in
    ascending free-column order; each vector has gcd 1 and a positive first
    nonzero entry.
    """
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = _echelon(work, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for prow, pcol in enumerate(pivots):
            vec[pcol] = -work[prow][free]
        basis.append(_primitive(vec))
    return basis
