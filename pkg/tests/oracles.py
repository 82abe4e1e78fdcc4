"""Brute-force reference computations, independent of the package internals.

Everything here is deliberately naive: plain lists, full enumeration, no
shared helpers with ``commvar``.
"""

import itertools


def rank_mod(rows, p):
    """Rank of an integer matrix over F_p by schoolbook elimination."""
    M = [[v % p for v in r] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], p - 2, p)
        M[rank] = [v * inv % p for v in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c]
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def matmul(A, B, p):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) % p for j in range(n)] for i in range(n)]


def is_zero(A):
    return all(v == 0 for r in A for v in r)


def commutes(A, B, p):
    return matmul(A, B, p) == matmul(B, A, p)


def trace_zero_matrices(n, p):
    """All n x n trace-zero matrices over F_p."""
    free = [(i, j) for i in range(n) for j in range(n) if (i, j) != (n - 1, n - 1)]
    for vals in itertools.product(range(p), repeat=len(free)):
        A = [[0] * n for _ in range(n)]
        for (i, j), v in zip(free, vals):
            A[i][j] = v
        A[n - 1][n - 1] = (-sum(A[i][i] for i in range(n - 1))) % p
        yield A


def is_nilpotent(A, p):
    P = A
    for _ in range(len(A) - 1):
        P = matmul(P, A, p)
    return is_zero(P)


def count_rank_at_most(m, n, r, p):
    total = 0
    for vals in itertools.product(range(p), repeat=m * n):
        rows = [list(vals[i * n:(i + 1) * n]) for i in range(m)]
        total += rank_mod(rows, p) <= r
    return total


def brute_commuting_count(sets, p):
    """|{(v_1..v_r) in product(sets) : pairwise commuting}| by full product."""
    total = 0
    for tup in itertools.product(*sets):
        if all(commutes(a, b, p) for a, b in itertools.combinations(tup, 2)):
            total += 1
    return total


def zsub_elements(p):
    """z_sub in sl_3 over F_p, as [[x,0,0],[y,x,t],[z,0,-2x]]."""
    for x, y, z, t in itertools.product(range(p), repeat=4):
        yield [[x, 0, 0], [y, x, t], [z, 0, (-2 * x) % p]]


def base_digits(c, p, r):
    out = []
    for _ in range(r):
        out.append(c % p)
        c //= p
    return out


def affine_dim_of_monomial_ideal(monomials, nvars):
    """Largest coordinate subspace avoiding every monomial's support (exhaustive)."""
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in monomials]
    if any(not s for s in supports):
        return -1
    for size in range(nvars, -1, -1):
        for S in itertools.combinations(range(nvars), size):
            S = set(S)
            if not any(s <= S for s in supports):
                return size
    return -1
