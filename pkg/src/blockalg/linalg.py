"""Exact linear algebra over Q: fraction-free rank and rational nullspaces."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .cpoly import CPoly


def _clear_row(row: Sequence[Fraction | int]) -> list[int]:
    """Scale a rational row to a primitive integer row (rank-preserving)."""
    fracs = [Fraction(x) for x in row]
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def rank_int(rows: Iterable[Sequence[Fraction | int]]) -> int:
    """Rank over Q by Bareiss fraction-free elimination.

    Rows are scaled to integers first; Bareiss keeps every intermediate
    entry an exact integer (a minor of the input), avoiding the
    coefficient blowup of naive rational pivoting.
    """
    mat = [_clear_row(r) for r in rows]
    mat = [r for r in mat if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    if any(len(r) != ncols for r in mat):
        raise ValueError("ragged matrix")
    rank = 0
    prev = 1
    col = 0
    while rank < len(mat) and col < ncols:
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            row_i = mat[i]
            f = row_i[col]
            row_r = mat[rank]
            for j in range(col, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        rank += 1
        col += 1
    return rank


def rank_over_q(vectors: Iterable[CPoly]) -> int:
    """Exact rank of a family of homogeneous polynomials of one bidegree.

    Zero polynomials are permitted (they contribute nothing); the nonzero
    inputs must share ``nvars`` and total degree.
    """
    vecs = [v for v in vectors]
    nonzero = [v for v in vecs if not v.is_zero()]
    if not nonzero:
        return 0
    nvars = nonzero[0].nvars
    degree = nonzero[0].homogeneous_degree()
    if degree is None:
        raise ValueError("inputs must be homogeneous")
    for v in nonzero:
        if v.nvars != nvars:
            raise ValueError("mixed variable counts")
        if v.homogeneous_degree() != degree:
            raise ValueError("mixed degrees")
    cols = sorted({e for v in nonzero for e, _ in v.terms()})
    index = {e: i for i, e in enumerate(cols)}
    rows = []
    for v in nonzero:
        row = [Fraction(0)] * len(cols)
        for e, c in v.terms():
            row[index[e]] = c
        rows.append(row)
    return rank_int(rows)


def nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace of the matrix, by exact Gauss-Jordan."""
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        basis.append(vec)
    return basis


def in_row_span(rows: Sequence[Sequence[Fraction | int]], target: Sequence[Fraction | int]) -> bool:
    """Whether ``target`` lies in the row span of ``rows``."""
    base = [list(r) for r in rows]
    return rank_int(base) == rank_int(base + [list(target)])
