"""Exact F_q point counts of (mixed) commuting varieties by enumeration.

Every locus is a linear ambient space (given by a basis of matrices) cut by a
vectorized membership predicate.  Counting walks the factors: the points of
the first locus are listed, and for each point the next factor is enumerated
inside the common centralizer of everything chosen so far, which is computed
as a kernel over F_q.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .groebner import Ideal
from .lie import MixedSpec, VarietySpec
from .ring import is_prime

DEFAULT_COUNT_BUDGET = 50_000_000

# enumeration order: smaller loci go outermost
_SIZE_RANK = {"V1": 0, "V2": 0, "z_sub_cap_Osub": 1, "z_sub_cap_N": 2, "z_sub": 3,
              "subreg_closure": 4, "nilpotent_cone": 5, "full_sl": 6, "full_gl": 7}


class CountBudgetExceeded(RuntimeError):
    pass


@dataclass
class CountResult:
    spec: MixedSpec
    q: int
    count: int
    wall_time: float
    branch: str


def _unit(n, i, j):
    E = np.zeros((n, n), dtype=np.int64)
    E[i, j] = 1
    return E


def _sl_basis(n):
    basis = [_unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    basis += [_unit(n, i, i) - _unit(n, n - 1, n - 1) for i in range(n - 1)]
    return basis


def _zsub_basis(n):
    """a_1..a_{n-1}, b, c coordinates of the centralizer of the [n-1, 1] Jordan matrix."""
    basis = []
    for k in range(n - 1):
        A = np.zeros((n, n), dtype=np.int64)
        for i in range(k, n - 1):
            A[i, i - k] = 1
        if k == 0:
            A[n - 1, n - 1] = 1 - n
        basis.append(A)
    basis.append(_unit(n, n - 1, 0))   # b
    basis.append(_unit(n, n - 2, n - 1))  # c
    return basis


def ambient_basis(spec: VarietySpec) -> list:
    n = spec.n
    k = spec.kind
    if k in ("full_sl", "nilpotent_cone", "subreg_closure"):
        return _sl_basis(n)
    if k == "full_gl":
        return [_unit(n, i, j) for i in range(n) for j in range(n)]
    if k == "z_sub":
        return _zsub_basis(n)
    y, z, t = _unit(3, 1, 0), _unit(3, 2, 0), _unit(3, 1, 2)
    return {"z_sub_cap_N": [y, z, t], "z_sub_cap_Osub": [y, z, t], "V1": [y, z], "V2": [y, t]}[k]


def _is_nilpotent(X, q):
    n = X.shape[-1]
    if n == 3:
        tr = (X[:, 0, 0] + X[:, 1, 1] + X[:, 2, 2]) % q
        c2 = (X[:, 0, 0] * X[:, 1, 1] - X[:, 0, 1] * X[:, 1, 0]
              + X[:, 0, 0] * X[:, 2, 2] - X[:, 0, 2] * X[:, 2, 0]
              + X[:, 1, 1] * X[:, 2, 2] - X[:, 1, 2] * X[:, 2, 1]) % q
        det = (X[:, 0, 0] * ((X[:, 1, 1] * X[:, 2, 2] - X[:, 1, 2] * X[:, 2, 1]) % q)
               - X[:, 0, 1] * ((X[:, 1, 0] * X[:, 2, 2] - X[:, 1, 2] * X[:, 2, 0]) % q)
               + X[:, 0, 2] * ((X[:, 1, 0] * X[:, 2, 1] - X[:, 1, 1] * X[:, 2, 0]) % q)) % q
        return (tr == 0) & (c2 == 0) & (det == 0)
    P = X
    for _ in range(n - 1):
        P = np.einsum("kij,kjl->kil", P, X) % q
    return ~P.reshape(len(X), -1).any(axis=1)


def _square_zero(X, q):
    S = np.einsum("kij,kjl->kil", X, X) % q
    tr = np.trace(X, axis1=1, axis2=2) % q
    return ~S.reshape(len(X), -1).any(axis=1) & (tr == 0)


def predicate(spec: VarietySpec):
    """Vectorized membership test on a stack of matrices from the ambient space."""
    if spec.kind == "nilpotent_cone":
        return _is_nilpotent
    if spec.kind in ("subreg_closure", "z_sub_cap_Osub"):
        return _square_zero
    return None


def _kernel_mod(A: np.ndarray, q: int) -> np.ndarray:
    """Rows spanning {c : A c = 0} over F_q."""
    A = A.copy() % q
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if not len(nz):
            continue
        pr = r + nz[0]
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, q) % q
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % q
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    K = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        K[k, fc] = 1
        for i, pc in enumerate(pivots):
            K[k, pc] = (-A[i, fc]) % q
    return K


@lru_cache(maxsize=64)
def _coefficient_grid(q: int, d: int) -> np.ndarray:
    idx = np.arange(q ** d, dtype=np.int64)
    powers = q ** np.arange(d - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers) % q


def _points(basis: np.ndarray, q: int, pred) -> np.ndarray:
    """All F_q points of span(basis) passing ``pred``; basis has shape (d, n, n)."""
    d, n, _ = basis.shape
    C = _coefficient_grid(q, d)
    X = (C @ basis.reshape(d, n * n)) % q
    X = X.reshape(len(C), n, n)
    if pred is not None:
        X = X[pred(X, q)]
    return X


def _restrict(basis: np.ndarray, chosen: list, q: int) -> np.ndarray:
    """Basis of span(basis) ∩ common centralizer of ``chosen``."""
    if not chosen or not len(basis):
        return basis
    d, n, _ = basis.shape
    blocks = []
    for P in chosen:
        comm = (np.einsum("kij,jl->kil", basis, P) - np.einsum("ij,kjl->kil", P, basis)) % q
        blocks.append(comm.reshape(d, n * n).T)
    K = _kernel_mod(np.vstack(blocks), q)
    if not len(K):
        return basis[:0]
    return np.einsum("ab,bij->aij", K, basis) % q


def estimate_work(spec: MixedSpec, q: int) -> int:
    """Outer ambient scan times a generic (n-1)-dimensional centralizer per later factor."""
    if not spec.r:
        return 1
    factors = sorted(spec.factors, key=lambda f: _SIZE_RANK[f.kind])
    outer = len(ambient_basis(factors[0]))
    return q ** outer * q ** ((spec.n - 1) * (spec.r - 1))


def branch_note(n: int, q: int) -> str:
    """Which characteristic branch of the z_sub dimension count applies."""
    return "q | n" if n % q == 0 else "q ∤ n"


def count_points(spec: MixedSpec, q: int, budget: int = DEFAULT_COUNT_BUDGET) -> CountResult:
    """|{(v_1..v_r) : v_i in V_i(F_q), [v_i, v_j] = 0}| by exhaustive enumeration."""
    if not is_prime(q):
        raise ValueError(f"q = {q} must be prime")
    est = estimate_work(spec, q)
    if est > budget:
        raise CountBudgetExceeded(
            f"estimated work {est} for {spec} over F_{q} exceeds budget {budget}")
    start = time.perf_counter()
    factors = sorted(spec.factors, key=lambda f: _SIZE_RANK[f.kind])
    bases = [np.array(ambient_basis(f), dtype=np.int64) % q for f in factors]
    preds = [predicate(f) for f in factors]

    def walk(level: int, chosen: list) -> int:
        B = _restrict(bases[level], chosen, q)
        if level == len(factors) - 1 and preds[level] is None:
            return q ** len(B)  # a linear space
        pts = _points(B, q, preds[level])
        if level == len(factors) - 1:
            return len(pts)
        return sum(walk(level + 1, chosen + [P]) for P in pts)

    count = walk(0, []) if factors else 1
    return CountResult(spec, q, count, time.perf_counter() - start, branch_note(spec.n, q))


def membership(X, spec: VarietySpec) -> bool:
    """Whether the scalar matrix X (entries taken mod p = spec.p) lies on the locus."""
    q = spec.p
    A = np.array(X, dtype=np.int64) % q
    if A.shape != (spec.n, spec.n):
        raise ValueError(f"expected a {spec.n}x{spec.n} matrix")
    basis = np.array(ambient_basis(spec), dtype=np.int64) % q
    # in the ambient span iff appending X does not raise the rank
    M = basis.reshape(len(basis), -1)
    r0 = len(M) - len(_kernel_mod(M.T, q))
    r1 = len(M) + 1 - len(_kernel_mod(np.vstack([M, A.reshape(1, -1)]).T, q))
    if r1 != r0:
        return False
    pred = predicate(spec)
    return bool(pred(A[None], q)[0]) if pred is not None else True


def count_ideal_points(ideal: Ideal, q: int | None = None) -> int:
    """|V(ideal)(F_q)| by evaluating every generator at every point (q = ring's p)."""
    q = q or ideal.ring.field.characteristic
    if ideal.ring.field.characteristic != q:
        raise ValueError("count over the ring's own prime field")
    nv = ideal.ring.nvars
    if q ** nv > 20_000_000:
        raise CountBudgetExceeded(f"{q}^{nv} points is too many to enumerate")
    pts = _coefficient_grid(q, nv)
    ok = np.ones(len(pts), dtype=bool)
    for g in ideal.generators:
        val = np.zeros(len(pts), dtype=np.int64)
        for mono, c in g.terms.items():
            term = np.full(len(pts), c % q, dtype=np.int64)
            for i, e in enumerate(mono):
                if e:
                    term = term * pow_mod(pts[:, i], e, q) % q
            val = (val + term) % q
        ok &= val == 0
    return int(ok.sum())


def pow_mod(v: np.ndarray, e: int, q: int) -> np.ndarray:
    out = np.ones_like(v)
    for _ in range(e):
        out = out * v % q
    return out


def dimension_slope(spec: MixedSpec, qs, budget: int = DEFAULT_COUNT_BUDGET, counts: dict | None = None) -> float:
    """Least-squares slope of log(count) against log(q): a heuristic dimension.

    ``counts`` may carry precomputed {q: count} values (e.g. from a cache).
    """
    qs = list(qs)
    if len(qs) < 2:
        raise ValueError("need at least two primes")
    counts = dict(counts or {})
    for q in qs:
        if q not in counts:
            counts[q] = count_points(spec, q, budget).count
    xs = np.log(np.array(qs, dtype=float))
    ys = np.log(np.array([counts[q] for q in qs], dtype=float))
    slope = np.polyfit(xs, ys, 1)[0]
    return float(slope)


def rank_at_most_count(m: int, n: int, rank: int, q: int) -> int:
    """Number of m x n matrices over F_q of rank <= ``rank`` (closed form)."""
    total = 0
    for k in range(rank + 1):
        num = 1
        for i in range(k):
            num *= (q ** m - q ** i) * (q ** n - q ** i)
        den = 1
        for i in range(k):
            den *= q ** k - q ** i
        total += num // den
    return total


def log_ratio(a: int, b: int) -> float:
    return math.log(a) / math.log(b)
