"""Cross-checks tying the three tracks together.

Dimension reports put a closed-form value next to a Groebner dimension and a
point-count slope.  The verify suites replay whole grids of such checks and
return plain dict records, so that two runs can be diffed byte for byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cache import NO_CACHE, ResultCache, cache_key
from .detvar import (StaircaseShape, detvar_dim_formula, generic_matrix, minors_ideal,
                     printed_staircase_formula, staircase_components, staircase_dim, staircase_matrix, xijm_matrix)
from .formulas import (BASELINES, DIM_G_VSUB, DimensionReport, N_value, check_inequality_3_1,
                       decompose_Cijm, dim_baselines, dim_Cijm, dim_Cr_zsub, dim_sliced,
                       is_irreducible_Cijm)
from .groebner import DEFAULT_BUDGET, BudgetExceeded, Ideal, is_member, krull_dimension
from .lie import MixedSpec, commuting_ideal, mixed_ring_elements, verify_intersections
from .pointcount import (DEFAULT_COUNT_BUDGET, CountBudgetExceeded, branch_note, count_points,
                         dimension_slope, estimate_work)
from .ring import CoefficientField
from .support import WeightA2, support_dimension, support_variety

DEFAULT_QS = (2, 3, 5)
SHEETS = ("V1", "V2")

# staircase shapes (column cuts, row cuts) exercised by the staircase suite
STAIRCASE_SHAPES = (
    ((1, 2, 3), (1, 2, 3)),
    ((2, 3, 4), (1, 2, 3)),
    ((1, 3, 4), (1, 2, 3)),
    ((1, 2, 4), (1, 2, 3)),
    ((2, 4), (1, 3)),
    ((1, 4), (2, 3)),
    ((2, 4), (2, 4)),
    ((3, 5), (1, 3)),
    ((1, 2, 3, 4), (1, 2, 3, 4)),
    ((0, 2, 4), (1, 2, 3)),
    ((2, 2, 4), (1, 2, 3)),
    ((1, 3), (1, 4)),
)


@dataclass
class Budgets:
    groebner: int = DEFAULT_BUDGET
    count: int = DEFAULT_COUNT_BUDGET

    def __post_init__(self):
        if self.groebner < 1 or self.count < 1:
            raise ValueError("budgets must be positive")


def _field_tag(p: int) -> str:
    return str(CoefficientField(p))


def groebner_dim(ideal: Ideal, budgets: Budgets, cache: ResultCache = NO_CACHE) -> int:
    ring = ideal.ring
    key = cache_key(what="krull", vars=ring.variables, field=_field_tag(ring.field.characteristic),
                    order=ring.order, gens=[str(g) for g in ideal.generators],
                    budget=budgets.groebner)
    return cache.memo(key, lambda: krull_dimension(ideal, budgets.groebner))


def point_count(spec: MixedSpec, q: int, budgets: Budgets, cache: ResultCache = NO_CACHE) -> int:
    key = cache_key(what="count", kinds=spec.kinds(), n=spec.n, q=q, budget=budgets.count)
    return cache.memo(key, lambda: count_points(spec, q, budgets.count).count)


# sliced track ------------------------------------------------------------------

def sliced_kinds(i: int, j: int, m: int, sheet: str) -> list:
    """Factors of one branch of D_{i-1,j,m}: (sheet)^{i-1}, (z_sub ∩ N)^j, z_sub^m."""
    if i < 1:
        raise ValueError("the slice needs i >= 1")
    return [sheet] * (i - 1) + ["z_sub_cap_N"] * j + ["z_sub"] * m


def sliced_dimension(i: int, j: int, m: int, p: int = 32003, budgets: Budgets | None = None,
                     cache: ResultCache = NO_CACHE) -> tuple:
    """(dim D_{i-1,j,m}, {sheet: dim}) from Groebner bases of the two branch ideals.

    A V1 element and a V2 element commute only if one of them vanishes, so D
    is the union of the all-V1 and the all-V2 branch.
    """
    budgets = budgets or Budgets()
    dims = {}
    for sheet in SHEETS:
        kinds = sliced_kinds(i, j, m, sheet)
        dims[sheet] = groebner_dim(commuting_ideal(MixedSpec.of(kinds, 3, p)), budgets, cache) \
            if kinds else 0
    return max(dims.values()), dims


def sliced_track(i: int, j: int, m: int, p: int = 32003, budgets: Budgets | None = None,
                 cache: ResultCache = NO_CACHE) -> tuple:
    """(dim C_{i,j,m}, notes) via max(4 + dim D_{i-1,j,m}, dim C_{i-1,j,m}).

    The second piece recurses while i-1 >= 1.  For i-1 = 0 it is C_{0,j,m},
    whose value is taken from the closed form (it lives in the full ambient
    space, outside the slice).
    """
    dD, dims = sliced_dimension(i, j, m, p, budgets, cache)
    notes = [f"dim D_{{{i - 1},{j},{m}}} = {dD} (branches {dims['V1']}, {dims['V2']})"]
    sat = DIM_G_VSUB + dD
    if i - 1 >= 1:
        rest, sub = sliced_track(i - 1, j, m, p, budgets, cache)
        notes += sub
    elif j + m == 0:
        rest = 0
    else:
        rest = dim_Cijm(0, j, m)
        notes.append(f"piece 0 x C_{{0,{j},{m}}} uses its closed form {rest}")
    return max(sat, rest), notes


# dimension reports ---------------------------------------------------------------

def _add_counts(report: DimensionReport, spec: MixedSpec, qs, budgets: Budgets, cache: ResultCache):
    qs = list(qs)
    for q in qs:
        est = estimate_work(spec, q)
        if est > budgets.count:
            report.refusals.append(("pointcount", f"estimated work {est} for {spec} over F_{q} "
                                                  f"exceeds budget {budgets.count}"))
            return
    try:
        counts = {q: point_count(spec, q, budgets, cache) for q in qs}
    except CountBudgetExceeded as exc:
        report.refusals.append(("pointcount", str(exc)))
        return
    report.counts = counts
    if len(qs) >= 2:
        report.pointcount_slopes = [dimension_slope(spec, qs, budgets.count, counts)]


def cijm_report(i: int, j: int, m: int, *, p: int = 32003, groebner: bool = False, count: bool = False,
                qs=DEFAULT_QS, budgets: Budgets | None = None, cache: ResultCache = NO_CACHE) -> DimensionReport:
    budgets = budgets or Budgets()
    rep = DimensionReport(f"C_{{{i},{j},{m}}}", dim_Cijm(i, j, m),
                          irreducible=is_irreducible_Cijm(i, j, m))
    if i >= 1:
        rep.components = decompose_Cijm(i, j, m)
    if groebner:
        try:
            if i >= 1:
                rep.groebner_dim, notes = sliced_track(i, j, m, p, budgets, cache)
                rep.notes += ["groebner track: sliced ideal"] + notes
            else:
                rep.groebner_dim = groebner_dim(commuting_ideal(MixedSpec.cijm(i, j, m, p)), budgets, cache)
                rep.notes.append("groebner track: ambient commuting ideal")
        except BudgetExceeded as exc:
            rep.refusals.append(("groebner", str(exc)))
    if count:
        _add_counts(rep, MixedSpec.cijm(i, j, m), qs, budgets, cache)
    return rep


def zsub_report(n: int, r: int, p: int, *, groebner: bool = False, count: bool = False,
                qs=DEFAULT_QS, budgets: Budgets | None = None, cache: ResultCache = NO_CACHE) -> DimensionReport:
    """C_r(z_sub) in sl_n over characteristic p (0 for the rationals)."""
    budgets = budgets or Budgets()
    divides = p > 0 and n % p == 0
    rep = DimensionReport(f"C_{r}(z_sub) n={n} p={p}", dim_Cr_zsub(n, r, divides),
                          irreducible=True, n=n)
    rep.notes.append("p | n branch: nr+1" if divides else "p ∤ n branch: (n-1)r+2")
    if groebner:
        try:
            rep.groebner_dim = groebner_dim(commuting_ideal(MixedSpec.of(["z_sub"] * r, n, p)), budgets, cache)
        except BudgetExceeded as exc:
            rep.refusals.append(("groebner", str(exc)))
    if count:
        same = [q for q in qs if (n % q == 0) == divides]
        if len(same) < 2:
            rep.notes.append(f"point counts skipped: fewer than two primes in {list(qs)} on this branch")
        else:
            _add_counts(rep, MixedSpec.of(["z_sub"] * r, n), same, budgets, cache)
    return rep


def det_report(m: int, n: int, t: int, *, p: int = 32003, groebner: bool = True,
               budgets: Budgets | None = None, cache: ResultCache = NO_CACHE) -> DimensionReport:
    budgets = budgets or Budgets()
    rep = DimensionReport(f"D_{t}({m}x{n})", detvar_dim_formula(m, n, t), irreducible=True)
    if groebner:
        try:
            M = generic_matrix(m, n, field=CoefficientField(p))
            rep.groebner_dim = groebner_dim(minors_ideal(M, t), budgets, cache)
        except BudgetExceeded as exc:
            rep.refusals.append(("groebner", str(exc)))
    return rep


def staircase_report(shape: StaircaseShape, *, p: int = 32003, groebner: bool = True,
                     budgets: Budgets | None = None, cache: ResultCache = NO_CACHE) -> DimensionReport:
    budgets = budgets or Budgets()
    comps = staircase_components(shape)
    rep = DimensionReport(f"staircase a={list(shape.col_cuts)} b={list(shape.row_cuts)}",
                          staircase_dim(shape), components=comps)
    printed = printed_staircase_formula(shape)
    rep.notes.append(f"literal closed-form reading gives {printed} "
                     f"(deviation {printed - rep.formula_dim:+d})")
    if groebner:
        try:
            M = staircase_matrix(shape, field=CoefficientField(p))
            rep.groebner_dim = groebner_dim(minors_ideal(M, 2), budgets, cache)
        except BudgetExceeded as exc:
            rep.refusals.append(("groebner", str(exc)))
    return rep


def _variety_formula(spec: MixedSpec):
    kinds = spec.kinds()
    r = len(kinds)
    if set(kinds) <= {"subreg_closure", "nilpotent_cone", "full_sl"} and spec.n == 3:
        i, j, m = (kinds.count(k) for k in ("subreg_closure", "nilpotent_cone", "full_sl"))
        return dim_Cijm(i, j, m), is_irreducible_Cijm(i, j, m)
    if set(kinds) == {"z_sub"}:
        p = spec.p
        return dim_Cr_zsub(spec.n, r, p > 0 and spec.n % p == 0), True
    if set(kinds) == {"full_gl"} and spec.n == 3:
        return dim_baselines("C_r_gl3", r), True
    single = {"z_sub_cap_N": 3, "z_sub_cap_Osub": 2, "V1": 2, "V2": 2}
    if r == 1 and kinds[0] in single:
        return single[kinds[0]], kinds[0] != "z_sub_cap_Osub"
    raise ValueError(f"no closed form for the mixed variety {spec}")


def variety_report(kinds, n: int = 3, p: int = 32003, *, groebner: bool = False, count: bool = False,
                   qs=DEFAULT_QS, budgets: Budgets | None = None, cache: ResultCache = NO_CACHE) -> DimensionReport:
    budgets = budgets or Budgets()
    spec = MixedSpec.of(kinds, n, p)
    dim, irr = _variety_formula(spec)
    rep = DimensionReport(f"C({', '.join(spec.kinds())}) n={n}", dim, irreducible=irr, n=n)
    if groebner:
        try:
            rep.groebner_dim = groebner_dim(commuting_ideal(spec), budgets, cache)
        except BudgetExceeded as exc:
            rep.refusals.append(("groebner", str(exc)))
    if count:
        _add_counts(rep, MixedSpec.of(kinds, n), qs, budgets, cache)
    return rep


def report_records(rep: DimensionReport) -> list:
    """Line records for a report, in a fixed track order."""
    out = [{"spec": rep.label, "track": "formula", "dim": rep.formula_dim,
            "irreducible": rep.irreducible,
            "components": [[lab, d] for lab, d in rep.components]}]
    if rep.groebner_dim is not None:
        out.append({"spec": rep.label, "track": "groebner", "dim": rep.groebner_dim,
                    "agrees": rep.agreement["groebner"]})
    for q in sorted(rep.counts):
        out.append({"spec": rep.label, "track": "pointcount", "q": q, "count": rep.counts[q],
                    "branch": branch_note(rep.n, q)})
    if rep.pointcount_slopes:
        out.append({"spec": rep.label, "track": "slope", "qs": sorted(rep.counts),
                    "slope": round(rep.pointcount_slopes[0], 6),
                    "agrees": rep.agreement["pointcount"]})
    for track, msg in rep.refusals:
        out.append({"spec": rep.label, "track": track, "refused": msg})
    return out



# z_sub product structure ---------------------------------------------------------

def zsub_product_structure(n: int, r: int, p: int) -> dict:
    """Compare commuting_ideal(z_sub^r) with I_2 of the 3 x r matrix of (a_1, c, b) columns.

    Returns the two inclusion verdicts and the variables that occur in no
    generator (expected: (n-2) r of them, the free affine factor).
    """
    spec = MixedSpec.of(["z_sub"] * r, n, p)
    ideal = commuting_ideal(spec)
    ring = ideal.ring
    tags = [str(k + 1) for k in range(r)]
    if n == 3:
        cols = [(f"x{t}", f"t{t}", f"z{t}") for t in tags]
    else:
        cols = [(f"a1_{t}", f"c_{t}", f"b_{t}") for t in tags]
    minors = []
    for (u, v) in itertools.combinations(range(r), 2):
        for (a, b) in itertools.combinations(range(3), 2):
            f = ring.var(cols[u][a]) * ring.var(cols[v][b]) - ring.var(cols[u][b]) * ring.var(cols[v][a])
            minors.append(f)
    target = Ideal(ring, tuple(minors)).normalized()
    forward = all(is_member(g, target) for g in ideal.generators)
    backward = all(is_member(g, ideal) for g in target.generators)
    used = set()
    for g in ideal.generators:
        used.update(g.variables())
    free = [v for v in ring.variables if v not in used]
    return {"ideal_in_minors": forward, "minors_in_ideal": backward, "free": free,
            "expected_free": (n - 2) * r}


# verify suites -------------------------------------------------------------------

def _rec(suite: str, case: str, expected, observed, passed=None, **extra) -> dict:
    rec = {"suite": suite, "case": case, "expected": expected, "observed": observed,
           "passed": bool(expected == observed if passed is None else passed)}
    rec.update(extra)
    return rec


def suite_xijm_grid(total: int = 5, p: int = 32003, budgets: Budgets | None = None,
                    cache: ResultCache = NO_CACHE) -> list:
    """Groebner dimension of I_2(X_{i,j,m}) against N and the staircase value."""
    budgets = budgets or Budgets()
    out = []
    for s in range(1, total + 1):
        for i in range(s + 1):
            for j in range(s - i + 1):
                m = s - i - j
                X = xijm_matrix(i, j, m, CoefficientField(p))
                g = groebner_dim(minors_ideal(X, 2), budgets, cache)
                stair = staircase_dim(StaircaseShape.xijm(i, j, m))
                out.append(_rec("xijm-grid", f"X_{{{i},{j},{m}}}", N_value(i, j, m), g,
                                passed=g == N_value(i, j, m) == stair))
    return out


def suite_determinantal(p: int = 32003, budgets: Budgets | None = None,
                        cache: ResultCache = NO_CACHE) -> list:
    out = []
    for m in range(1, 5):
        for n in range(1, 5):
            for t in range(1, min(m, n, 3) + 1):
                rep = det_report(m, n, t, p=p, budgets=budgets, cache=cache)
                out.append(_rec("determinantal", rep.label, rep.formula_dim, rep.groebner_dim))
    return out


def suite_staircase(p: int = 32003, budgets: Budgets | None = None,
                    cache: ResultCache = NO_CACHE) -> list:
    out = []
    for a, b in STAIRCASE_SHAPES:
        shape = StaircaseShape(a, b)
        rep = staircase_report(shape, p=p, budgets=budgets, cache=cache)
        printed = printed_staircase_formula(shape)
        out.append(_rec("staircase", rep.label, rep.formula_dim, rep.groebner_dim,
                        printed=printed, deviation=printed - rep.formula_dim,
                        nvars=shape.nvars()))
    return out


def suite_intersections(p: int = 32003) -> list:
    rep = verify_intersections(3, p)
    return [_rec("intersections", c.name, True, c.passed, detail=c.detail) for c in rep.checks]


def suite_zsub(n: int = 3, chars=(7, 3), rs=None, budgets: Budgets | None = None,
               cache: ResultCache = NO_CACHE) -> list:
    rs = rs or ((1, 2, 3) if n == 3 else (2,))
    out = []
    for p in chars:
        for r in rs:
            rep = zsub_report(n, r, p, groebner=True, budgets=budgets, cache=cache)
            obs = rep.groebner_dim if rep.groebner_dim is not None else "refused"
            out.append(_rec("zsub", rep.label, rep.formula_dim, obs))
        if n % p and max(rs) >= 2:
            r = max(rs)
            ps = zsub_product_structure(n, r, p)
            ok = ps["ideal_in_minors"] and ps["minors_in_ideal"] and len(ps["free"]) == ps["expected_free"]
            out.append(_rec("zsub", f"C_{r}(z_sub) n={n} p={p} = D_2(3x{r}) x k^{ps['expected_free']}",
                            True, ok, free=ps["free"]))
    return out


def suite_sliced(total: int = 4, p: int = 32003, budgets: Budgets | None = None,
                 cache: ResultCache = NO_CACHE) -> list:
    out = []
    for s in range(1, total + 1):
        for i in range(1, s + 1):
            for j in range(s - i + 1):
                m = s - i - j
                dD, _ = sliced_dimension(i, j, m, p, budgets, cache)
                out.append(_rec("sliced", f"D_{{{i - 1},{j},{m}}}", dim_sliced(i, j, m), dD))
                rest = 0 if i - 1 == j == m == 0 else dim_Cijm(i - 1, j, m)
                out.append(_rec("sliced", f"C_{{{i},{j},{m}}} = max(4 + dim D, dim C_{{{i - 1},{j},{m}}})",
                                dim_Cijm(i, j, m), max(DIM_G_VSUB + dD, rest)))
    return out


def suite_formulas(bound: int = 6) -> list:
    """Seams between the closed forms: pure cases, squeeze, split, irreducibility."""
    out = []
    for r in range(1, 11):
        out.append(_rec("formulas", f"C_{{0,0,{r}}} = C_{r}(sl_3)", BASELINES["C_r_sl3"](r), dim_Cijm(0, 0, r)))
        out.append(_rec("formulas", f"C_{{0,{r},0}} = C_{r}(N)", BASELINES["C_r_N"](r), dim_Cijm(0, r, 0)))
        out.append(_rec("formulas", f"C_{{{r},0,0}} = C_{r}(Osub)", BASELINES["C_r_Osub"](r), dim_Cijm(r, 0, 0)))
        if r >= 2:
            out.append(_rec("formulas", f"dim C_{r}(sl_3) <= dim C(N, sl_3^{r - 1}) + 2", True,
                            check_inequality_3_1(r)))
        out.append(_rec("formulas", f"C_{r}(gl_3) = C_{r}(sl_3) + r",
                        dim_baselines("C_r_sl3", r) + r, dim_baselines("C_r_gl3", r)))
    for i, j, m in itertools.product(range(bound + 1), repeat=3):
        if i + j + m == 0:
            continue
        if i == 0 and j >= 1 and m >= 1:
            out.append(_rec("formulas", f"C_{{0,{j},{m}}} squeeze", 2 * (j + m) + 4, dim_Cijm(0, j, m)))
        if i >= 1:
            comps = decompose_Cijm(i, j, m)
            out.append(_rec("formulas", f"C_{{{i},{j},{m}}} = max of components",
                            dim_Cijm(i, j, m), max(d for _, d in comps)))
        expected_irr = (i == 0 and j == 0) or (i == 0 and m == 0) or (i == 1 and j == 0 and m == 0)
        out.append(_rec("formulas", f"C_{{{i},{j},{m}}} irreducible", expected_irr,
                        is_irreducible_Cijm(i, j, m)))
    return out


def _pattern_weight(pattern, p: int) -> WeightA2:
    """A concrete weight whose k-th digit is regular (0,0) or singular (p-1,0)."""
    c1 = sum((p - 1) * p ** k for k, regular in enumerate(pattern) if not regular)
    return WeightA2(c1, 0)


def suite_support(max_r: int = 8, p: int = 7) -> list:
    out = []
    for r in range(1, max_r + 1):
        for a in range(r + 1):
            b = r - a
            pattern = [False] * a + [True] * b
            rep = support_variety(_pattern_weight(pattern, p), p, r)
            out.append(_rec("support", f"r={r} a={a} b={b}", dim_Cijm(a, b, 0), rep.dim))
            if r >= 2:
                out.append(_rec("support", f"r={r} a={a} b={b} irreducible", a == 0, rep.irreducible))
                out.append(_rec("support", f"r={r} a={a} b={b} three-case display",
                                support_dimension(a, b), rep.dim))
    return out


def suite_pointcount(qs=DEFAULT_QS, budgets: Budgets | None = None, cache: ResultCache = NO_CACHE) -> list:
    budgets = budgets or Budgets()
    out = []
    cases = [(["nilpotent_cone"] * 2, 3, 8), (["subreg_closure"] * 2, 3, 6), (["z_sub"] * 2, 3, 6)]
    for kinds, n, expected in cases:
        spec = MixedSpec.of(kinds, n)
        counts = {q: point_count(spec, q, budgets, cache) for q in qs}
        slope = dimension_slope(spec, qs, budgets.count, counts)
        out.append(_rec("pointcount", f"C({', '.join(kinds)}) n={n} qs={list(qs)}", expected,
                        round(slope, 6), passed=abs(slope - expected) <= 0.75,
                        counts={str(q): c for q, c in counts.items()}))
    return out


SUITES = ("xijm-grid", "determinantal", "staircase", "intersections", "zsub", "sliced",
          "formulas", "support", "pointcount")


def run_suites(names, *, n: int = 3, chars=(7, 3), budgets: Budgets | None = None,
               cache: ResultCache = NO_CACHE) -> list:
    """Records of the named suites followed by one summary record per suite."""
    runners = {
        "xijm-grid": lambda: suite_xijm_grid(budgets=budgets, cache=cache),
        "determinantal": lambda: suite_determinantal(budgets=budgets, cache=cache),
        "staircase": lambda: suite_staircase(budgets=budgets, cache=cache),
        "intersections": lambda: suite_intersections(),
        "zsub": lambda: suite_zsub(n, chars, budgets=budgets, cache=cache),
        "sliced": lambda: suite_sliced(budgets=budgets, cache=cache),
        "formulas": lambda: suite_formulas(),
        "support": lambda: suite_support(),
        "pointcount": lambda: suite_pointcount(budgets=budgets, cache=cache),
    }
    records, summary = [], []
    for name in names:
        if name not in runners:
            raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
        recs = runners[name]()
        records += recs
        failed = sum(not r["passed"] for r in recs)
        summary.append({"suite": name, "case": "summary", "checked": len(recs), "failed": failed,
                        "passed": failed == 0})
    return records + summary
