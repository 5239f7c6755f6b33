"""Exact linear algebra over the rationals.

Everything here works on dense row-lists of Fractions.  Matrices are small
(tens to a few hundred rows), so plain Gaussian elimination is fine.
"""

from __future__ import annotations

from fractions import Fraction


def row_echelon(rows):
    """Reduce a list of rows in place-free fashion; returns (echelon, pivots).

    ``pivots`` is the list of pivot column indices, one per nonzero row of
    the echelon form.
    """
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = Fraction(1) / m[rank][col]
        m[rank] = [c * inv for c in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    return m[:rank], pivots


def rank(rows):
    if not rows:
        return 0
    _, pivots = row_echelon(rows)
    return len(pivots)


def kernel_basis(rows, ncols):
    """Basis of the right kernel of the matrix given by ``rows``."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ech, pivots = row_echelon(rows)
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in zip(ech, pivots):
            v[pc] = -r[fc]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution x of A x = b, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ech, pivots = row_echelon(aug)
    for r, pc in zip(ech, pivots):
        if pc == ncols:
            return None
    x = [Fraction(0)] * ncols
    for r, pc in zip(ech, pivots):
        x[pc] = r[ncols]
    return x
