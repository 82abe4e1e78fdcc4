"""Exact Gaussian elimination over a :class:`~commvar.ring.CoefficientField`."""

from __future__ import annotations

from .ring import CoefficientField


def rref(rows, F: CoefficientField):
    """Reduced row echelon form.  Returns (rows, pivot columns); input is not modified."""
    A = [[F(x) for x in row] for row in rows]
    if not A:
        return [], []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F(x * inv) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [F(x - f * y) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows, F: CoefficientField) -> int:
    return len(rref(rows, F)[1])


def kernel(rows, ncols: int, F: CoefficientField) -> list:
    """Basis of {v : A v = 0}; one vector per free column, with a 1 in that column."""
    R, pivots = rref(rows, F) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F(0)] * ncols
        v[fc] = F(1)
        for row, pc in zip(R, pivots):
            v[pc] = F(-row[fc])
        basis.append(v)
    return basis
