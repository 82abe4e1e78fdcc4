"""Closed-form dimensions and irreducibility of commuting and mixed commuting
varieties over sl_3, plus the component split of C_{i,j,m}.

C_{i,j,m} has i factors in Ō_sub, then j in N, then m in sl_3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

BASELINES = {
    "C_r_sl3": lambda r: 2 * r + 6,
    "C_r_N": lambda r: 2 * r + 4,
    "C_r_Osub": lambda r: 2 * r + 2,
    "C_N_sl_mixed": lambda r: 2 * r + 4,
    "C_r_gl3": lambda r: 3 * r + 6,
}

DIM_G_VSUB = 4  # dim of the subregular orbit in sl_3
RANK_SL3 = 2


@dataclass(frozen=True)
class MixedParams:
    i: int
    j: int
    m: int

    def __post_init__(self):
        if min(self.i, self.j, self.m) < 0:
            raise ValueError("i, j, m must be non-negative")
        if self.r < 1:
            raise ValueError("need at least one factor")

    @property
    def r(self) -> int:
        return self.i + self.j + self.m

    def __str__(self):
        return f"C_{{{self.i},{self.j},{self.m}}}"


@dataclass
class DimensionReport:
    label: str
    formula_dim: int
    groebner_dim: int | None = None
    pointcount_slopes: list | None = None
    counts: dict = field(default_factory=dict)
    irreducible: bool | None = None
    components: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    refusals: list = field(default_factory=list)  # (track, message) for budget refusals
    slope_tolerance: float = 0.75
    n: int = 3

    @property
    def agreement(self) -> dict:
        out = {}
        if self.groebner_dim is not None:
            out["groebner"] = self.groebner_dim == self.formula_dim
        if self.pointcount_slopes:
            out["pointcount"] = all(abs(s - self.formula_dim) <= self.slope_tolerance
                                    for s in self.pointcount_slopes)
        return out

    @property
    def agrees(self) -> bool:
        return all(self.agreement.values())


def dim_Cr_zsub(n: int, r: int, p_divides_n: bool) -> int:
    """dim C_r(z_sub) in sl_n."""
    if n < 3 or r < 1:
        raise ValueError(f"need n >= 3 and r >= 1, got n={n} r={r}")
    return n * r + 1 if p_divides_n else (n - 1) * r + 2


def dim_baselines(kind: str, r: int) -> int:
    if kind not in BASELINES:
        raise ValueError(f"unknown baseline {kind!r}; expected one of {sorted(BASELINES)}")
    if r < 1:
        raise ValueError("r must be >= 1")
    return BASELINES[kind](r)


def sl3_char3_lower_bound(r: int) -> int:
    """Lower bound 3r + 2 for dim C_r(sl_3) when p = 3 (not an equality)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return 3 * r + 2


def N_value(i: int, j: int, m: int) -> int:
    """max{m+2, j+m+1, i+j+m}, each term counted only when its band is nonempty.

    The m+2 term needs m >= 1 and the j+m+1 term needs j+m >= 1; N(0,0,0) = 0.
    """
    if min(i, j, m) < 0:
        raise ValueError("i, j, m must be non-negative")
    terms = [i + j + m]
    if j + m >= 1:
        terms.append(j + m + 1)
    if m >= 1:
        terms.append(m + 2)
    return max(terms)


def dim_Cijm(i: int, j: int, m: int) -> int:
    P = MixedParams(i, j, m)
    if P.i == 0 and P.j == 0:
        return dim_baselines("C_r_sl3", m)
    if P.i == 0 and P.m == 0:
        return dim_baselines("C_r_N", j)
    if P.j == 0 and P.m == 0:
        return dim_baselines("C_r_Osub", i)
    if P.i == 0:
        return 2 * (j + m) + 4
    return N_value(i - 1, j, m) + i + j + m + 3


def _dim_or_origin(i: int, j: int, m: int) -> int:
    return 0 if i == j == m == 0 else dim_Cijm(i, j, m)


def decompose_Cijm(i: int, j: int, m: int) -> list:
    """[(label, dim)] for C_{i,j,m} = G·(v_sub, D_{i-1,j,m}) ∪ 0 × C_{i-1,j,m}.

    For j = m = 0 and i >= 2 the irreducible split into the V1 and V2 sheets
    (each of dim 2i+2) is returned instead.
    """
    if i < 1:
        raise ValueError("decomposition needs i >= 1; for i = 0 use dim_Cijm (C_{0,j,m} squeeze)")
    MixedParams(i, j, m)
    if j == m == 0 and i >= 2:
        sheet = DIM_G_VSUB + 2 * (i - 1)
        return [(f"closure G·(v_sub, V1^{i - 1})", sheet),
                (f"closure G·(v_sub, V2^{i - 1})", sheet)]
    sat = DIM_G_VSUB + (i + j + m - 1) + N_value(i - 1, j, m)
    rest = _dim_or_origin(i - 1, j, m)
    rest_label = "0 × origin" if i - 1 == j == m == 0 else f"0 × C_{{{i - 1},{j},{m}}}"
    return [(f"G·(v_sub, D_{{{i - 1},{j},{m}}})", sat), (rest_label, rest)]


def is_irreducible_Cijm(i: int, j: int, m: int) -> bool:
    MixedParams(i, j, m)
    return (i == 0 and j == 0) or (i == 0 and m == 0) or (i == 1 and j == 0 and m == 0)


def check_inequality_3_1(r: int) -> bool:
    """dim C_r(sl_3) <= dim C(N, sl_3^{r-1}) + rank sl_3."""
    if r < 2:
        raise ValueError("r must be >= 2")
    return dim_baselines("C_r_sl3", r) <= dim_baselines("C_N_sl_mixed", r) + RANK_SL3


def dim_sliced(i: int, j: int, m: int) -> int:
    """dim D_{i-1,j,m}: free y's times the staircase determinantal part."""
    if i < 1:
        raise ValueError("the slice needs i >= 1")
    return (i + j + m - 1) + N_value(i - 1, j, m)
