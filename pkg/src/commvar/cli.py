"""Command line front end: ``commvar dim | ideal | verify | support``.

Exit status: 0 when every populated track agrees, 1 on a disagreement (or a
failed check), 2 on a usage error, 3 when a requested track was refused for
budget reasons.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from .cache import NO_CACHE, ResultCache, default_cache_dir
from .checks import (DEFAULT_QS, SUITES, Budgets, cijm_report, det_report, report_records,
                     run_suites, staircase_report, variety_report, zsub_report)
from .detvar import StaircaseShape
from .groebner import DEFAULT_BUDGET, BudgetExceeded
from .lie import MixedSpec, commuting_ideal
from .pointcount import DEFAULT_COUNT_BUDGET, CountBudgetExceeded
from .ring import ORDERS, CoefficientField, RingDescriptor, parse_polynomial
from .support import WeightA2, support_variety

log = logging.getLogger("commvar")

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    characteristic: int = 32003  # 0 means the rationals
    order: str = "grevlex"
    groebner_budget: int = DEFAULT_BUDGET
    count_budget: int = DEFAULT_COUNT_BUDGET
    output: str = "text"
    cache_dir: Path | None = field(default_factory=default_cache_dir)

    def __post_init__(self):
        if self.order not in ORDERS:
            raise UsageError(f"unknown order {self.order!r}")
        if self.output not in ("text", "jsonl"):
            raise UsageError(f"unknown output format {self.output!r}")
        try:
            self.budgets = Budgets(self.groebner_budget, self.count_budget)
            CoefficientField(self.characteristic)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc

    def cache(self) -> ResultCache:
        return ResultCache(self.cache_dir) if self.cache_dir is not None else NO_CACHE


# output ------------------------------------------------------------------------

def dump_record(rec: dict) -> str:
    return json.dumps(rec, sort_keys=True, ensure_ascii=False, separators=(", ", ": "))


class Emitter:
    """Single writer for all command output, so line order is fixed."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def record(self, rec: dict, text: str):
        self.stream.write((dump_record(rec) if self.fmt == "jsonl" else text) + "\n")


def _report_text(rec: dict) -> str:
    track = rec["track"]
    if "refused" in rec:
        return f"{rec['spec']}  [{track}] refused: {rec['refused']}"
    if track == "formula":
        line = f"{rec['spec']}  formula dim {rec['dim']}"
        if rec["irreducible"] is not None:
            line += ", irreducible" if rec["irreducible"] else ", reducible"
        for lab, d in rec["components"]:
            line += f"\n    component {lab}: dim {d}"
        return line
    if track == "groebner":
        return f"{rec['spec']}  groebner dim {rec['dim']} ({'agrees' if rec['agrees'] else 'DISAGREES'})"
    if track == "pointcount":
        return f"{rec['spec']}  |F_{rec['q']} points| = {rec['count']} ({rec['branch']})"
    return f"{rec['spec']}  slope over q={rec['qs']}: {rec['slope']} " \
           f"({'agrees' if rec['agrees'] else 'DISAGREES'})"


def _int_list(text: str, count: int | None = None, what: str = "value") -> list:
    try:
        vals = [int(v) for v in text.replace(";", ",").split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"cannot parse {what} {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"{what} needs {count} comma-separated integers, got {text!r}")
    return vals


def _char(text: str) -> int:
    if text.upper() in ("QQ", "Q", "0"):
        return 0
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"field must be a prime or QQ, got {text!r}") from None


# commands ------------------------------------------------------------------------

def cmd_dim(args, cfg: RunConfig, out: Emitter) -> int:
    p = cfg.characteristic if args.char is None else _char(args.char)
    qs = _int_list(args.qs, what="--qs")
    kw = dict(groebner=args.groebner, budgets=cfg.budgets, cache=cfg.cache())
    chosen = [x for x in (args.cijm, args.det, args.staircase, args.variety) if x] + ([1] if args.zsub else [])
    if len(chosen) != 1:
        raise UsageError("give exactly one of --cijm, --zsub, --det, --staircase, --variety")
    try:
        if args.cijm:
            rep = cijm_report(*_int_list(args.cijm, 3, "--cijm"), p=p, count=args.count, qs=qs, **kw)
        elif args.zsub:
            rep = zsub_report(args.n, args.r, p, count=args.count, qs=qs, **kw)
        elif args.det:
            m, n, t = _int_list(args.det, 3, "--det")
            kw["groebner"] = True
            rep = det_report(m, n, t, p=p, **kw)
        elif args.staircase:
            parts = args.staircase.split("/")
            if len(parts) != 2:
                raise UsageError("--staircase expects 'a1,..,as/b1,..,bs'")
            shape = StaircaseShape(tuple(_int_list(parts[0])), tuple(_int_list(parts[1])))
            kw["groebner"] = True
            rep = staircase_report(shape, p=p, **kw)
        else:
            rep = variety_report(args.variety, args.n, p, count=args.count, qs=qs, **kw)
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for rec in report_records(rep):
        out.record(rec, _report_text(rec))
    if cfg.output == "text":
        for note in rep.notes:
            out.stream.write(f"    note: {note}\n")
    if not rep.agrees:
        return EXIT_DISAGREE
    return EXIT_BUDGET if rep.refusals else EXIT_OK


def _ideal_spec(args, cfg: RunConfig) -> MixedSpec:
    p = cfg.characteristic if args.char is None else _char(args.char)
    if args.cijm:
        i, j, m = _int_list(args.cijm, 3, "--cijm")
        return MixedSpec.cijm(i, j, m, p)
    if not args.kinds:
        raise UsageError("give --kinds or --cijm")
    return MixedSpec.of(args.kinds, args.n, p)


def ideal_header(ring: RingDescriptor) -> str:
    return f"# {ring.field} {ring.order}: " + " ".join(ring.variables)


def write_ideal(ideal, stream) -> None:
    stream.write(ideal_header(ideal.ring) + "\n")
    for g in ideal.generators:
        stream.write(str(g) + "\n")


def read_ideal(text: str):
    """Inverse of :func:`write_ideal`."""
    from .groebner import Ideal
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("missing header line")
    head, _, names = lines[0][1:].partition(":")
    field_name, order = head.split()
    p = 0 if field_name == "QQ" else int(field_name.strip("GF()"))
    ring = RingDescriptor(tuple(names.split()), order, CoefficientField(p))
    return Ideal(ring, tuple(parse_polynomial(ring, ln) for ln in lines[1:]))


def cmd_ideal(args, cfg: RunConfig, out: Emitter) -> int:
    try:
        spec = _ideal_spec(args, cfg)
        ideal = commuting_ideal(spec, cfg.order)
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.output in (None, "-"):
        write_ideal(ideal, out.stream)
    else:
        with open(args.output, "w") as fh:
            write_ideal(ideal, fh)
        log.info("wrote %d generators to %s", len(ideal), args.output)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, out: Emitter) -> int:
    names = [s for s in SUITES if getattr(args, s.replace("-", "_"))]
    if args.all:
        names = list(SUITES)
    if not names:
        names = ["xijm-grid"]
    chars = tuple(_char(c) for c in args.chars.split(","))
    try:
        records = run_suites(names, n=args.n, chars=chars, budgets=cfg.budgets, cache=cfg.cache())
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for rec in records:
        if rec["case"] == "summary":
            text = f"{rec['suite']}: {rec['checked'] - rec['failed']}/{rec['checked']} " \
                   f"{'PASS' if rec['passed'] else 'FAIL'}"
        else:
            text = f"  [{'ok' if rec['passed'] else 'FAIL'}] {rec['suite']} {rec['case']}: " \
                   f"expected {rec['expected']}, observed {rec['observed']}"
        out.record(rec, text)
    return EXIT_OK if all(r["passed"] for r in records) else EXIT_DISAGREE


def _support_rows(args) -> list:
    if args.batch:
        rows = []
        for ln in Path(args.batch).read_text().splitlines():
            ln = ln.split("#", 1)[0].strip()
            if ln:
                vals = _int_list(ln.replace(" ", ",").replace("\t", ","), 4, "batch row")
                rows.append(tuple(vals))
        return rows
    if not args.lam:
        raise UsageError("give --lambda or --batch")
    c1, c2 = _int_list(args.lam, 2, "--lambda")
    return [(c1, c2, args.p, args.r)]


def cmd_support(args, cfg: RunConfig, out: Emitter) -> int:
    for c1, c2, p, r in _support_rows(args):
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                rep = support_variety(WeightA2(c1, c2), p, r)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        rec = rep.record()
        digits = " ".join(f"({d.c1},{d.c2}):{'reg' if f else 'sing'}" for d, f in zip(rep.digits, rep.regular))
        text = (f"L({c1},{c2}) p={p} r={r}: digits {digits}; a={rep.a} b={rep.b} -> "
                f"C_{{{rep.a},{rep.b},0}}, dim {rep.dim}, "
                f"{'irreducible' if rep.irreducible else 'reducible'}")
        out.record(rec, text)
    return EXIT_OK


# parser ----------------------------------------------------------------------------

def _add_common(ap: argparse.ArgumentParser, suppress: bool = False):
    """Options accepted both before and after the subcommand."""
    def dflt(v):
        return argparse.SUPPRESS if suppress else v
    ap.add_argument("--field", default=dflt("32003"), help="prime p for F_p, or QQ (default 32003)")
    ap.add_argument("--order", default=dflt("grevlex"), choices=ORDERS)
    ap.add_argument("--budget", type=int, default=dflt(DEFAULT_BUDGET),
                    help="Groebner pair-reduction budget")
    ap.add_argument("--count-budget", type=int, default=dflt(DEFAULT_COUNT_BUDGET),
                    help="point-count work budget")
    ap.add_argument("--format", default=dflt("text"), choices=("text", "jsonl"))
    ap.add_argument("--cache-dir", default=dflt(None),
                    help="result cache directory (default $COMMVAR_CACHE_DIR or ~/.cache/commvar)")
    ap.add_argument("--no-cache", action="store_true", default=dflt(False))
    ap.add_argument("-v", "--verbose", action="store_true", default=dflt(False))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="commvar", description=__doc__.splitlines()[0])
    _add_common(ap)
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dim", help="dimension report: formula, Groebner and point-count tracks")
    d.add_argument("--cijm", help="i,j,m for C_{i,j,m} (Osub, N, sl_3 factor counts)")
    d.add_argument("--zsub", action="store_true", help="C_r(z_sub) in sl_n")
    d.add_argument("--det", help="m,n,t: rank < t locus of a generic m x n matrix")
    d.add_argument("--staircase", help="column cuts / row cuts, e.g. 1,2,3/1,2,3")
    d.add_argument("--variety", help="comma-separated factor kinds, e.g. nilpotent_cone,full_sl")
    d.add_argument("--n", type=int, default=3)
    d.add_argument("--r", type=int, default=2)
    d.add_argument("--char", default=None, help="characteristic for this report (overrides --field)")
    d.add_argument("--groebner", action="store_true", help="populate the Groebner track")
    d.add_argument("--count", action="store_true", help="populate the point-count track")
    d.add_argument("--qs", default=",".join(map(str, DEFAULT_QS)), help="primes for point counts")
    _add_common(d, suppress=True)
    d.set_defaults(func=cmd_dim)

    i = sub.add_parser("ideal", help="write a commuting ideal, one generator per line")
    i.add_argument("--kinds", help="comma-separated factor kinds")
    i.add_argument("--cijm", help="i,j,m")
    i.add_argument("--n", type=int, default=3)
    i.add_argument("--char", default=None)
    i.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    _add_common(i, suppress=True)
    i.set_defaults(func=cmd_ideal)

    v = sub.add_parser("verify", help="run check suites (default: the X_{i,j,m} grid)")
    for s in SUITES:
        v.add_argument(f"--{s}", action="store_true")
    v.add_argument("--all", action="store_true")
    v.add_argument("--n", type=int, default=3, help="matrix size for the z_sub suite")
    v.add_argument("--chars", default="7,3", help="characteristics for the z_sub suite")
    _add_common(v, suppress=True)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("support", help="support varieties of simple SL_3 modules for G_r")
    s.add_argument("--lambda", dest="lam", help="c1,c2")
    s.add_argument("--p", type=int, default=7)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--batch", help="file of 'c1 c2 p r' rows (commas or whitespace)")
    _add_common(s, suppress=True)
    s.set_defaults(func=cmd_support)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        cfg = RunConfig(_char(args.field), args.order, args.budget, args.count_budget, args.format,
                        None if args.no_cache else Path(args.cache_dir) if args.cache_dir else default_cache_dir())
        return args.func(args, cfg, Emitter(cfg.output))
    except UsageError as exc:
        print(f"commvar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, CountBudgetExceeded) as exc:
        print(f"commvar: budget refusal: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"commvar: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
