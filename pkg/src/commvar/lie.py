"""Symbolic sl_n / gl_n layer: Jordan nilpotents, centralizers, generic elements
of the loci N, Ō_sub, z_sub and its slices, commutators, commuting ideals.

Conventions for n = 3 (lower triangular, v_sub = E_21):

    z_sub       [[x,0,0],[y,x,t],[z,0,-2x]]
    z_sub ∩ N   [[0,0,0],[y,0,t],[z,0,0]]
    V1          [[0,0,0],[y,0,0],[z,0,0]]
    V2          [[0,0,0],[y,0,t],[0,0,0]]

For general n, z_sub is the lower-triangular Toeplitz block in a_1..a_{n-1},
with c at (n-1, n), b at (n, 1) and (1-n) a_1 at (n, n).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .groebner import Ideal, is_member
from .ring import CoefficientField, Polynomial, RingDescriptor, RingMismatchError

KINDS = ("full_sl", "full_gl", "nilpotent_cone", "subreg_closure", "z_sub",
         "z_sub_cap_N", "z_sub_cap_Osub", "V1", "V2")

# kinds whose generic element is a parametrized slice of z_sub (n = 3 only, except z_sub)
SLICE_KINDS = ("z_sub_cap_N", "z_sub_cap_Osub", "V1", "V2")


class SquareMatrix:
    """n x n matrix of polynomials sharing one ring."""

    __slots__ = ("ring", "entries")

    def __init__(self, entries: Sequence[Sequence[Polynomial]], ring: RingDescriptor | None = None):
        rows = tuple(tuple(r) for r in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        if ring is None:
            if not n:
                raise ValueError("empty matrix needs an explicit ring")
            ring = rows[0][0].ring
        for r in rows:
            for e in r:
                if e.ring != ring:
                    raise RingMismatchError("matrix entries live in different rings")
        self.ring = ring
        self.entries = rows

    @classmethod
    def from_scalars(cls, ring: RingDescriptor, rows) -> "SquareMatrix":
        return cls([[ring.const(c) for c in row] for row in rows], ring)

    @classmethod
    def zero(cls, ring: RingDescriptor, n: int) -> "SquareMatrix":
        return cls.from_scalars(ring, [[0] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def _check(self, other: "SquareMatrix"):
        if other.n != self.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        if other.ring != self.ring:
            raise RingMismatchError("matrices live in different rings")

    def __add__(self, other):
        self._check(other)
        return SquareMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.ring)

    def __sub__(self, other):
        self._check(other)
        return SquareMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.ring)

    def __neg__(self):
        return SquareMatrix([[-a for a in r] for r in self.entries], self.ring)

    def __matmul__(self, other):
        self._check(other)
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.ring.zero()
                for k in range(n):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SquareMatrix(out, self.ring)

    def scale(self, c) -> "SquareMatrix":
        if isinstance(c, Polynomial):
            return SquareMatrix([[c * a for a in r] for r in self.entries], self.ring)
        return SquareMatrix([[a.scale(c) for a in r] for r in self.entries], self.ring)

    def trace(self) -> Polynomial:
        acc = self.ring.zero()
        for i in range(self.n):
            acc = acc + self.entries[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(not e for r in self.entries for e in r)

    def nonzero_entries(self) -> list:
        """[((i, j), entry)] for nonzero entries, row-major, 0-based."""
        return [((i, j), e) for i, r in enumerate(self.entries) for j, e in enumerate(r) if e]

    def substitute(self, assignment) -> "SquareMatrix":
        rows = [[e.substitute(assignment) for e in r] for r in self.entries]
        ring = rows[0][0].ring if rows else self.ring
        return SquareMatrix(rows, ring)

    def change_ring(self, ring: RingDescriptor) -> "SquareMatrix":
        return SquareMatrix([[e.change_ring(ring) for e in r] for r in self.entries], ring)

    def scalars(self) -> list:
        """Entries as field elements; fails unless every entry is constant."""
        return [[e.constant_value() for e in r] for r in self.entries]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.ring == other.ring and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.entries) + "]"

    __repr__ = __str__


def commutator(A: SquareMatrix, B: SquareMatrix) -> SquareMatrix:
    """AB - BA, fully expanded."""
    A._check(B)
    return A @ B - B @ A


# nilpotents and centralizers ----------------------------------------------------

def jordan_nilpotent(partition: Sequence[int], ring: RingDescriptor | None = None) -> SquareMatrix:
    """Block-diagonal nilpotent Jordan matrix with ones on each block's subdiagonal."""
    parts = list(partition)
    if not parts or any(not isinstance(k, int) or k < 1 for k in parts):
        raise ValueError(f"invalid partition {partition}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition {partition} is not weakly decreasing")
    n = sum(parts)
    ring = ring or RingDescriptor((), "grevlex", CoefficientField())
    rows = [[0] * n for _ in range(n)]
    s = 0
    for k in parts:
        for i in range(k - 1):
            rows[s + i + 1][s + i] = 1
        s += k
    return SquareMatrix.from_scalars(ring, rows)


def centralizer_basis(e: SquareMatrix, ambient: str = "sl") -> list:
    """Basis of {X : Xe = eX} (and tr X = 0 for ``ambient="sl"``) over e's field.

    Kernel of X -> Xe - eX on the n^2 matrix coordinates, by exact elimination.
    """
    if ambient not in ("sl", "gl"):
        raise ValueError(f"unknown ambient {ambient!r}")
    F = e.ring.field
    E = e.scalars()
    n = e.n
    rows = []
    # coordinate (a, b) <-> unit matrix E_ab; entry (i, j) of [E_ab, e]
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for a in range(n):
                for b in range(n):
                    v = (E[b][j] if a == i else 0) - (E[i][a] if b == j else 0)
                    row[a * n + b] = v
            rows.append(row)
    if ambient == "sl":
        rows.append([1 if a == b else 0 for a in range(n) for b in range(n)])
    basis = linalg.kernel(rows, n * n, F)
    return [SquareMatrix.from_scalars(e.ring, [v[i * n:(i + 1) * n] for i in range(n)]) for v in basis]


# variety specs --------------------------------------------------------------

@dataclass(frozen=True)
class VarietySpec:
    """A locus in sl_n (or gl_n); ``p`` is the working characteristic (0 = rationals)."""

    kind: str
    n: int = 3
    p: int = 32003

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown variety kind {self.kind!r}; expected one of {KINDS}")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.kind in SLICE_KINDS + ("subreg_closure",) and self.n != 3:
            raise ValueError(f"{self.kind} is only defined for n = 3")
        if self.kind == "z_sub" and self.n < 3:
            raise ValueError("z_sub needs n >= 3")
        CoefficientField(self.p)

    @property
    def field(self) -> CoefficientField:
        return CoefficientField(self.p)

    def __str__(self):
        return self.kind


@dataclass(frozen=True)
class MixedSpec:
    """Ordered factors of C(V_1, ..., V_r)."""

    factors: tuple = field(default_factory=tuple)

    def __post_init__(self):
        fs = tuple(self.factors)
        object.__setattr__(self, "factors", fs)
        if len({(f.n, f.p) for f in fs}) > 1:
            raise ValueError("all factors must share n and p")

    @classmethod
    def of(cls, kinds, n: int = 3, p: int = 32003) -> "MixedSpec":
        if isinstance(kinds, str):
            kinds = [k.strip() for k in kinds.split(",") if k.strip()]
        return cls(tuple(VarietySpec(k, n, p) for k in kinds))

    @classmethod
    def cijm(cls, i: int, j: int, m: int, p: int = 32003) -> "MixedSpec":
        """C_{i,j,m}: i copies of Ō_sub, then j of N, then m of sl_3."""
        return cls.of(["subreg_closure"] * i + ["nilpotent_cone"] * j + ["full_sl"] * m, 3, p)

    @property
    def r(self) -> int:
        return len(self.factors)

    @property
    def n(self) -> int:
        return self.factors[0].n if self.factors else 3

    @property
    def p(self) -> int:
        return self.factors[0].p if self.factors else 32003

    def kinds(self) -> list:
        return [f.kind for f in self.factors]

    def __str__(self):
        return "(" + ", ".join(self.kinds()) + f"; n={self.n}, p={self.p})"


def _principal_minor_sum(X: SquareMatrix, k: int) -> Polynomial:
    from itertools import combinations

    from .detvar import determinant
    acc = X.ring.zero()
    for idx in combinations(range(X.n), k):
        acc = acc + determinant([[X.entries[i][j] for j in idx] for i in idx], X.ring)
    return acc


def char_coefficients(X: SquareMatrix) -> list:
    """[e_1, ..., e_n]: sums of principal k x k minors (e_1 = trace, e_n = det)."""
    return [_principal_minor_sum(X, k) for k in range(1, X.n + 1)]


def _layout(spec: VarietySpec, tag: str):
    """(variable names, rows of entry specs) where an entry spec is a list of (coeff, name)."""
    n, kind = spec.n, spec.kind
    if kind in ("full_sl", "nilpotent_cone", "subreg_closure", "full_gl"):
        names = [f"g{i + 1}{j + 1}_{tag}" for i in range(n) for j in range(n)]
        if kind != "full_gl":
            names = names[:-1]
        rows = [[[(1, f"g{i + 1}{j + 1}_{tag}")] for j in range(n)] for i in range(n)]
        if kind != "full_gl":
            rows[n - 1][n - 1] = [(-1, f"g{i + 1}{i + 1}_{tag}") for i in range(n - 1)]
        return names, rows
    if kind == "z_sub" and n != 3:
        a = [f"a{k}_{tag}" for k in range(1, n)]
        b, c = f"b_{tag}", f"c_{tag}"
        rows = [[[] for _ in range(n)] for _ in range(n)]
        for i in range(n - 1):
            for j in range(i + 1):
                rows[i][j] = [(1, a[i - j])]
        rows[n - 2][n - 1] = [(1, c)]
        rows[n - 1][0] = [(1, b)]
        rows[n - 1][n - 1] = [(1 - n, a[0])]
        return a + [b, c], rows
    x, y, z, t = (f"{s}{tag}" for s in "xyzt")
    live = {"z_sub": (x, y, z, t), "z_sub_cap_N": (y, z, t), "z_sub_cap_Osub": (y, z, t),
            "V1": (y, z), "V2": (y, t)}[kind]
    ent = {(0, 0): [(1, x)], (1, 0): [(1, y)], (1, 1): [(1, x)], (1, 2): [(1, t)],
           (2, 0): [(1, z)], (2, 2): [(-2, x)]}
    rows = [[[(c, v) for c, v in ent.get((i, j), []) if v in live] for j in range(3)] for i in range(3)]
    return list(live), rows


def generic_element(spec: VarietySpec, tag: str = "1", order: str = "grevlex"):
    """(generic matrix of the locus, constraint ideal) in a ring of fresh variables.

    Variable names carry ``tag`` so that several factors can share a ring.
    """
    names, layout = _layout(spec, tag)
    ring = RingDescriptor(tuple(names), order, spec.field)
    X = SquareMatrix([[sum((ring.var(v).scale(c) for c, v in cell), ring.zero()) for cell in row]
                      for row in layout], ring)
    kind = spec.kind
    if kind == "nilpotent_cone":
        cons = char_coefficients(X)[1:]
    elif kind == "subreg_closure":
        cons = [e for r in (X @ X).entries for e in r]
    elif kind == "z_sub_cap_Osub":
        cons = [ring.var(f"z{tag}") * ring.var(f"t{tag}")]
    else:
        cons = []
    return X, Ideal(ring, tuple(cons)).normalized()


def _unique_tags(spec: MixedSpec) -> list:
    return [str(k + 1) for k in range(spec.r)]


def mixed_ring_elements(spec: MixedSpec, order: str = "grevlex"):
    """Generic elements of all factors in one joint ring (factor 1's variables first)."""
    parts = [generic_element(f, tag, order) for f, tag in zip(spec.factors, _unique_tags(spec))]
    names = tuple(v for X, _ in parts for v in X.ring.variables)
    field = spec.factors[0].field if spec.factors else CoefficientField()
    ring = RingDescriptor(names, order, field)
    mats = [X.change_ring(ring) for X, _ in parts]
    cons = [g.change_ring(ring) for _, I in parts for g in I.generators]
    return ring, mats, cons


def commuting_ideal(spec: MixedSpec, order: str = "grevlex") -> Ideal:
    """Factor constraints plus all entries of [u_i, u_j], i < j, as primitive polynomials."""
    ring, mats, cons = mixed_ring_elements(spec, order)
    gens = list(cons)
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            gens.extend(e for _, e in commutator(mats[a], mats[b]).nonzero_entries())
    return Ideal(ring, tuple(g.primitive() for g in gens if g)).normalized()


# intersections of z_sub with N and Ō_sub -------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class IntersectionReport:
    p: int
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]


def _radical_contains(f: Polynomial, ideal: Ideal, max_power: int = 4) -> bool:
    return any(is_member(f ** k, ideal) for k in range(1, max_power + 1))


def verify_intersections(n: int = 3, p: int = 32003) -> IntersectionReport:
    """Symbolic checks of z_sub ∩ N, z_sub ∩ Ō_sub = V1 ∪ V2 and the commuting dichotomy."""
    if n != 3:
        raise ValueError("the intersection identities are stated for n = 3")
    checks = []

    # (i) nilpotency constraints on z_sub cut out x = 0
    U, _ = generic_element(VarietySpec("z_sub", 3, p), "")
    R = U.ring
    x, y, z, t = (R.var(v) for v in "xyzt")
    nil = Ideal(R, tuple(char_coefficients(U)[1:])).normalized()
    in_rad = _radical_contains(x, nil)
    vanish = all(not g.substitute({"x": R.zero()}) for g in nil.generators)
    checks.append(CheckResult(
        "z_sub ∩ N is {x = 0}", in_rad and vanish,
        f"constraints {nil}; x in radical: {in_rad}; vanish on x=0: {vanish}"))

    # (ii) adding X^2 = 0 on z_sub ∩ N leaves (zt) = (z) ∩ (t)
    UN = U.substitute({"x": R.zero()})
    sq = Ideal(R, tuple(e for r in (UN @ UN).entries for e in r)).normalized()
    sq_full = Ideal(R, tuple(e for r in (U @ U).entries for e in r)) + nil
    zt = z * t
    same = is_member(zt, sq) and all(is_member(g, Ideal(R, (zt,))) for g in sq.generators)
    full_ok = all(_radical_contains(g, sq_full) for g in (x, zt)) and \
        all(not g.substitute({"x": R.zero(), "z": R.zero()}) for g in sq_full.generators) and \
        all(not g.substitute({"x": R.zero(), "t": R.zero()}) for g in sq_full.generators)
    union_ok = is_member(zt, Ideal(R, (t,))) and is_member(zt, Ideal(R, (z,)))
    checks.append(CheckResult(
        "z_sub ∩ Ō_sub = V1 ∪ V2", same and full_ok and union_ok,
        f"X^2 on z_sub ∩ N generates {sq}; expected (z*t)"))

    # (iii) [u, v] = 0 iff both in V1 or both in V2
    spec = MixedSpec.of(["V1", "V2"], 3, p)
    ring, (A, B), _ = mixed_ring_elements(spec)
    cross = commutator(A, B)
    nz = cross.nonzero_entries()
    spec11 = MixedSpec.of(["V1", "V1"], 3, p)
    _, (A1, B1), _ = mixed_ring_elements(spec11)
    spec22 = MixedSpec.of(["V2", "V2"], 3, p)
    _, (A2, B2), _ = mixed_ring_elements(spec22)
    within = commutator(A1, B1).is_zero() and commutator(A2, B2).is_zero()
    checks.append(CheckResult(
        "[V1, V2] != 0, [V1, V1] = [V2, V2] = 0", bool(nz) and within,
        "cross commutator entries: " + ", ".join(f"({i + 1},{j + 1}): {e}" for (i, j), e in nz)))
    return IntersectionReport(p, checks)
