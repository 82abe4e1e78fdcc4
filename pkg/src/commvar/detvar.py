"""Matrices of indeterminates, their minor ideals, and staircase dimensions.

A staircase shape is given by cumulative column cuts ``a_1 <= ... <= a_s``
and row cuts ``b_1 <= ... <= b_s``.  Rows in band k (``b_{k-1} < r <= b_k``)
carry indeterminates exactly in the columns ``c > a_{k-1}``.  The matrix
``X_{i,j,m}`` is the shape ``(i, i+j, i+j+m) / (1, 2, 3)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groebner import Ideal
from .ring import CoefficientField, Polynomial, RingDescriptor


@dataclass(frozen=True)
class GenericMatrix:
    """m x n matrix whose nonzero entries are distinct ring variables."""

    ring: RingDescriptor
    entries: tuple  # tuple of row tuples of Polynomial

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


def _from_layout(layout, field: CoefficientField, order: str) -> GenericMatrix:
    names = [name for row in layout for name in row if name]
    ring = RingDescriptor(tuple(names), order, field)
    entries = tuple(tuple(ring.var(nm) if nm else ring.zero() for nm in row) for row in layout)
    return GenericMatrix(ring, entries)


def generic_matrix(m: int, n: int, name: str = "x", field: CoefficientField | None = None,
                   order: str = "grevlex") -> GenericMatrix:
    if m < 1 or n < 1:
        raise ValueError("matrix dimensions must be positive")
    field = field or CoefficientField()
    sep = "" if m < 10 and n < 10 else "_"
    layout = [[f"{name}{i}{sep}{j}" for j in range(1, n + 1)] for i in range(1, m + 1)]
    return _from_layout(layout, field, order)


@dataclass(frozen=True)
class StaircaseShape:
    col_cuts: tuple
    row_cuts: tuple

    def __post_init__(self):
        a, b = tuple(self.col_cuts), tuple(self.row_cuts)
        object.__setattr__(self, "col_cuts", a)
        object.__setattr__(self, "row_cuts", b)
        if len(a) != len(b) or not a:
            raise ValueError("need the same positive number of column and row cuts")
        for cuts in (a, b):
            if any(x < 0 for x in cuts) or any(x > y for x, y in zip(cuts, cuts[1:])):
                raise ValueError(f"cuts {cuts} must be non-negative and non-decreasing")
        if a[-1] < 1 or b[-1] < 1:
            raise ValueError("shape has no rows or no columns")

    @property
    def bands(self) -> int:
        return len(self.col_cuts)

    @property
    def nrows(self) -> int:
        return self.row_cuts[-1]

    @property
    def ncols(self) -> int:
        return self.col_cuts[-1]

    def live(self, r: int, c: int) -> bool:
        """Whether 0-based entry (r, c) is an indeterminate."""
        a = (0,) + self.col_cuts
        b = (0,) + self.row_cuts
        for k in range(1, len(b)):
            if b[k - 1] <= r < b[k]:
                return c >= a[k - 1]
        raise IndexError(r)

    def nvars(self) -> int:
        return sum(self.live(r, c) for r in range(self.nrows) for c in range(self.ncols))

    @classmethod
    def xijm(cls, i: int, j: int, m: int) -> "StaircaseShape":
        if min(i, j, m) < 0 or i + j + m == 0:
            raise ValueError("need non-negative i, j, m with i+j+m >= 1")
        return cls((i, i + j, i + j + m), (1, 2, 3))


def staircase_matrix(shape: StaircaseShape, name: str = "w",
                     field: CoefficientField | None = None, order: str = "grevlex") -> GenericMatrix:
    layout = [[f"{name}{r + 1}_{c + 1}" if shape.live(r, c) else None
               for c in range(shape.ncols)] for r in range(shape.nrows)]
    return _from_layout(layout, field or CoefficientField(), order)


def xijm_matrix(i: int, j: int, m: int, field: CoefficientField | None = None,
                order: str = "grevlex") -> GenericMatrix:
    """``X_{i,j,m}`` with rows x_1..x_{i+j+m}, y_1..y_{j+m}, z_1..z_m."""
    StaircaseShape.xijm(i, j, m)
    layout = [
        [f"x{c}" for c in range(1, i + j + m + 1)],
        [None] * i + [f"y{c}" for c in range(1, j + m + 1)],
        [None] * (i + j) + [f"z{c}" for c in range(1, m + 1)],
    ]
    return _from_layout(layout, field or CoefficientField(), order)


def determinant(rows, ring: RingDescriptor) -> Polynomial:
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return ring.one()
    if n == 1:
        return rows[0][0]
    total = ring.zero()
    for k in range(n):
        if not rows[0][k]:
            continue
        minor = [row[:k] + row[k + 1:] for row in rows[1:]]
        term = rows[0][k] * determinant(minor, ring)
        total = total + term if k % 2 == 0 else total - term
    return total


def minors_ideal(M: GenericMatrix, t: int) -> Ideal:
    """All nonzero t x t minors, in lexicographic order of (row set, column set).

    A matrix with fewer than t rows or columns has no minors: the zero ideal.
    """
    if t < 1:
        raise ValueError(f"minor size must be positive, got {t}")
    gens = []
    for rs in itertools.combinations(range(M.rows), t):
        for cs in itertools.combinations(range(M.cols), t):
            d = determinant([[M.entries[r][c] for c in cs] for r in rs], M.ring)
            if d:
                gens.append(d)
    return Ideal(M.ring, tuple(gens))


def detvar_dim_formula(m: int, n: int, t: int) -> int:
    """Dimension of the rank < t locus of a generic m x n matrix."""
    if not 1 <= t <= min(m, n):
        raise ValueError(f"need 1 <= t <= min(m, n), got m={m} n={n} t={t}")
    return (t - 1) * (m + n - t + 1)


def staircase_components(shape: StaircaseShape) -> list:
    """Rank <= 1 components: band k keeps rows <= b_k and columns > a_{k-1}."""
    a = (0,) + shape.col_cuts
    out = []
    for k in range(1, shape.bands + 1):
        rows, cols = shape.row_cuts[k - 1], shape.ncols - a[k - 1]
        # a 1-row or 1-column matrix has no 2x2 minors; rows+cols-1 still counts it
        dim = rows + cols - 1 if min(rows, cols) >= 1 else 0
        out.append((f"band {k}: generic {rows}x{cols}, rank<=1", dim))
    return out


def staircase_dim(shape: StaircaseShape) -> int:
    return max(d for _, d in staircase_components(shape))


def printed_staircase_formula(shape: StaircaseShape) -> int:
    """max_k (a_s - (a_1 + ... + a_{k-1}) + b_k + 1), read with cumulative cuts.

    Kept for comparison only; it does not reproduce the X_{i,j,m} values.
    """
    a, b = shape.col_cuts, shape.row_cuts
    return max(a[-1] - sum(a[:k]) + b[k] + 1 for k in range(len(a)))
