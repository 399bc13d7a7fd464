"""Exact kernel computation over Q or Q(sqrt 5).

Elimination is fraction-free (Bareiss): each update is a 2x2 determinant
divided exactly by the previous pivot, so no intermediate inverses appear
until the final back-substitution.
"""

from __future__ import annotations

from typing import Sequence


def bareiss_echelon(rows: Sequence[Sequence], one) -> tuple[list[list], list[int]]:
    """Row echelon form and pivot columns by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    prev = one
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][col]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][col]
        for i in range(r + 1, nrows):
            f = m[i][col]
            row = m[i]
            for c in range(col, ncols):
                row[c] = (piv * row[c] - f * m[r][c]) / prev
        prev = piv
        pivots.append(col)
        r += 1
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], zero, one) -> list[list]:
    """Basis of ``{x : rows @ x = 0}``, one vector per free column."""
    if not rows:
        return []
    ncols = len(rows[0])
    ech, pivots = bareiss_echelon(rows, one)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for r in range(len(pivots) - 1, -1, -1):
            p = pivots[r]
            acc = zero
            for c in range(p + 1, ncols):
                if ech[r][c] and x[c]:
                    acc = acc + ech[r][c] * x[c]
            x[p] = -acc / ech[r][p]
        basis.append(x)
    return basis
