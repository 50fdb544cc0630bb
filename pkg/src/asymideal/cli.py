"""Command line front end: ``ai invariants``, ``ai sequence``, ``ai verify``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 work limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .checks import SUITES, run_suite
from .groebner import (
    MonomialOrder,
    PolynomialIdeal,
    WorkLimitExceeded,
    colength_poly,
    initial_ideal,
    samuel_multiplicity,
)
from .monomial import (
    MonomialIdeal,
    NotZeroDimensionalError,
    colength,
    colon,
    is_zero_dimensional,
    order_at_max_ideal,
)
from .multiplier import multiplier_ideal
from .newton import UnitIdealError, lct, multiplicity
from .sequences import (
    DEFAULT_M,
    DEFAULT_P_BUDGET,
    DEFAULT_R_BUDGET,
    Asymptotic,
    GradedSequence,
    LimitEstimate,
    lct_bracket,
    lct_limit,
    multiplicity_limit,
    ord_limit,
    saturate,
    volume_limsup,
)
from .textio import ParseError, decimal12, format_rational, parse_ideal, parse_monomial_ideal, parse_rational

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_WORK = 0, 1, 2, 3

COLUMNS = ("MULT", "VOL", "LCT", "BRACKET", "ORD", "SATURATE", "COLON")
DEFAULT_COLUMNS = ("MULT", "VOL", "LCT")


class InputError(ValueError):
    pass


# sequence descriptors --------------------------------------------------------------


def parse_table_file(path: str | Path, dim: int | None = None) -> dict[int, MonomialIdeal]:
    """Lines ``m: <ideal>``; blank lines and ``#`` comments are ignored."""
    out = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise InputError(f"{path}:{lineno}: expected 'm: ideal'")
        m, text = line.split(":", 1)
        out[int(m)] = parse_monomial_ideal(text, dim)
    if not out:
        raise InputError(f"{path}: empty table")
    top = max(a.dim for a in out.values())
    return {m: a if a.dim == top else parse_monomial_ideal(str(a), top) for m, a in out.items()}


def parse_descriptor(words: list[str], dim: int | None = None) -> GradedSequence:
    if not words:
        raise InputError("empty sequence descriptor")
    kind, rest = words[0].lower(), words[1:]
    if kind == "powers":
        return GradedSequence.powers(parse_monomial_ideal(" ".join(rest), dim))
    if kind == "weighted":
        if len(rest) < 2:
            raise InputError("weighted needs n weights and an offset")
        nums = [parse_rational(x) for x in rest]
        return GradedSequence.weighted(nums[:-1], nums[-1])
    if kind == "maxpow":
        if len(rest) != 1:
            raise InputError("maxpow takes a single integer k")
        return GradedSequence.maxpow(dim or 2, int(rest[0]))
    if kind == "table":
        if len(rest) != 1:
            raise InputError("table takes a file path")
        return GradedSequence.table(parse_table_file(rest[0], dim), label=f"table {rest[0]}")
    raise InputError(f"unknown sequence kind {kind!r}")


# reports ---------------------------------------------------------------------------


@dataclass
class ExperimentSpec:
    descriptor: list[str]
    M: int = DEFAULT_M
    p_budget: int = DEFAULT_P_BUDGET
    r_budget: int = DEFAULT_R_BUDGET
    columns: tuple[str, ...] = DEFAULT_COLUMNS
    out: str | None = None
    format: str = "text"
    dim: int | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if min(self.M, self.p_budget, self.r_budget) < 1:
            raise InputError("budgets must be positive")
        self.columns = tuple(c.upper() for c in self.columns)
        if not self.columns:
            raise InputError("at least one output column is required")
        bad = [c for c in self.columns if c not in COLUMNS]
        if bad:
            raise InputError(f"unknown columns {bad}; choose from {', '.join(COLUMNS)}")
        if self.format not in ("csv", "json", "text"):
            raise InputError(f"unknown format {self.format!r}")


def _envelope_record(name: str, est: LimitEstimate | None) -> dict:
    if est is None:
        return {"name": name, "best_bound": None, "direction": None}
    rec = {
        "name": name,
        "best_bound": format_rational(est.best_bound),
        "decimal": decimal12(est.best_bound),
        "direction": est.direction.value if est.direction else "limsup",
    }
    if "window" in est.meta:
        rec["window"] = est.meta["window"]
    return rec


def sequence_report(spec: ExperimentSpec) -> dict:
    """Compute the per-``m`` table and envelopes; all values are exact Fractions."""
    seq = parse_descriptor(spec.descriptor, spec.dim)
    n = seq.dim
    cols = spec.columns
    asym = Asymptotic(seq, spec.p_budget)
    rows: dict[int, dict[str, Fraction | None]] = {m: {} for m in range(1, spec.M + 1)}
    envelopes = []

    def put(name, est):
        for m, v in est.samples:
            rows[m][name] = v
        envelopes.append(_envelope_record(name, est))

    if "MULT" in cols:
        put("mult", multiplicity_limit(seq, spec.M))
    if "VOL" in cols:
        put("vol", volume_limsup(seq, spec.M))
    if "LCT" in cols and "BRACKET" not in cols:
        put("lct", lct_limit(seq, spec.M))
    if "BRACKET" in cols:
        br = lct_bracket(seq, spec.M, spec.p_budget, asym=asym)
        put("lct", br.lower)
        for m in rows:
            rows[m]["lct_b"] = None
        if br.upper is not None:
            put("lct_b", br.upper)
        else:
            envelopes.append(_envelope_record("lct_b", None))
        width = br.width
        envelopes.append(
            {"name": "bracket_width", "best_bound": None if width is None else format_rational(width),
             "decimal": None if width is None else decimal12(width), "direction": None}
        )
    if "ORD" in cols:
        put("ord", ord_limit(seq, None, spec.M))
    if "SATURATE" in cols:
        sat = saturate(seq, spec.r_budget)
        put("mult_sat", multiplicity_limit(sat, spec.M))
        for m in rows:
            rows[m]["witness_r"] = Fraction(sat.witness_r[m])
    if "COLON" in cols:
        for m in rows:
            c = colon(seq[m], asym[m])
            rows[m]["colon_vol"] = Fraction(math.factorial(n) * colength(c), m**n)
    meta = {
        "version": __version__,
        "descriptor": " ".join(spec.descriptor),
        "label": seq.label,
        "dim": n,
        "M": spec.M,
        "p_budget": spec.p_budget,
        "r_budget": spec.r_budget,
        "columns": list(cols),
        "order": None,
        "seed": None,
    }
    meta.update(spec.meta)
    return {"meta": meta, "rows": [{"m": m, **rows[m]} for m in sorted(rows)], "envelopes": envelopes}


def _cell(v) -> str:
    return "" if v is None else format_rational(v)


def render(report: dict, fmt: str) -> str:
    names = [k for k in report["rows"][0] if k != "m"] if report["rows"] else []
    if fmt == "json":
        rows = [
            {"m": r["m"], **{k: (None if r[k] is None else {"exact": format_rational(r[k]), "decimal": decimal12(r[k])}) for k in names}}
            for r in report["rows"]
        ]
        return json.dumps({"meta": report["meta"], "rows": rows, "envelopes": report["envelopes"]}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m"] + [c for k in names for c in (k, f"{k}_decimal")])
        for r in report["rows"]:
            w.writerow([r["m"]] + [c for k in names for c in (_cell(r[k]), "" if r[k] is None else decimal12(r[k]))])
        return buf.getvalue()
    lines = [f"# {report['meta']['label']}  (n={report['meta']['dim']}, M={report['meta']['M']}, "
             f"p_budget={report['meta']['p_budget']}, r_budget={report['meta']['r_budget']})"]
    header = ["m"] + names
    table = [header] + [[str(r["m"])] + [("-" if r[k] is None else f"{_cell(r[k])} ({decimal12(r[k])})") for k in names] for r in report["rows"]]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    for row in table:
        lines.append("  ".join(cell.rjust(wd) for cell, wd in zip(row, widths)))
    lines.append("")
    for env in report["envelopes"]:
        if env["best_bound"] is None:
            lines.append(f"{env['name']}: n/a")
            continue
        tags = [t for t in (env["direction"], env.get("window")) if t]
        suffix = f" [{', '.join(tags)}]" if tags else ""
        lines.append(f"{env['name']}: {env['best_bound']} ({env['decimal']}){suffix}")
    return "\n".join(lines) + "\n"


def read_csv_table(text: str) -> list[dict[str, Fraction | int | None]]:
    """Parse a table written by ``render(..., 'csv')`` back into exact values."""
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        row = {"m": int(rec.pop("m"))}
        for k, v in rec.items():
            if not k.endswith("_decimal"):
                row[k] = Fraction(v) if v else None
        rows.append(row)
    return rows


def invariants_report(ideal, lam=None, order: MonomialOrder | None = None, powers: int | None = None) -> tuple[list[str], bool]:
    """Human-readable invariants; the flag is False if a checked inequality fails."""
    order = order or MonomialOrder()
    lines, ok = [], True
    if isinstance(ideal, PolynomialIdeal):
        ini = initial_ideal(ideal, order)
        lines.append(f"ideal: {ideal}")
        lines.append(f"initial ideal ({order}): {ini}")
        if is_zero_dimensional(ini):
            lines.append(f"length: {colength_poly(ideal, order)}")
            lines.append(f"e(in): {multiplicity(ini)}")
        else:
            lines.append("length: infinite (not supported at a point)")
        if powers:
            est = samuel_multiplicity(ideal, order, powers)
            lines.append("m  e(in(I^m))/m^n")
            for m, v in est.samples:
                lines.append(f"{m}  {format_rational(v)} ({decimal12(v)})")
            lines.append(f"upper bound for e(I): {format_rational(est.best_bound)}")
        return lines, ok
    a: MonomialIdeal = ideal
    n = a.dim
    lines.append(f"ideal: {a}")
    if is_zero_dimensional(a):
        e = multiplicity(a)
        lines.append(f"e: {e}")
        lines.append(f"length: {colength(a)}")
    else:
        e = None
        lines.append("e: undefined (not zero-dimensional)")
    if not a.is_unit and not a.is_zero:
        c = lct(a)
        lines.append(f"lct: {format_rational(c)}")
        lines.append(f"nu: {order_at_max_ideal(a)}")
        if e is not None:
            bound = Fraction(n**n) / c**n
            holds = e >= bound
            ok = ok and holds
            lines.append(f"check e >= n^n/lct^n: {e} >= {format_rational(bound)} {'ok' if holds else 'FAILED'}")
    if lam is not None:
        lines.append(f"multiplier ideal at {format_rational(lam)}: {multiplier_ideal(a, lam)}")
    return lines, ok


# argparse --------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ai", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariants of a single ideal")
    p.add_argument("ideal", nargs="+", help="ideal text, e.g. 'x^2, y^3'")
    p.add_argument("--lambda", dest="lam", help="coefficient p/q for the multiplier ideal")
    p.add_argument("--order", default="grevlex", choices=["lex", "grlex", "grevlex"])
    p.add_argument("--powers", type=int, help="tabulate e(in(I^m))/m^n for m <= POWERS")
    p.add_argument("--dim", type=int)

    p = sub.add_parser("sequence", help="convergence table for a graded sequence")
    p.add_argument("descriptor", nargs="+", help="powers <ideal> | weighted w1..wn c | maxpow k | table <file>")
    p.add_argument("--M", type=int, default=DEFAULT_M)
    p.add_argument("--pbudget", type=int, default=DEFAULT_P_BUDGET)
    p.add_argument("--rbudget", type=int, default=DEFAULT_R_BUDGET)
    p.add_argument("--columns", nargs="+", default=list(DEFAULT_COLUMNS), type=str.upper)
    p.add_argument("--out")
    p.add_argument("--format", default="text", choices=["csv", "json", "text"])
    p.add_argument("--dim", type=int)

    p = sub.add_parser("verify", help="run a seeded property suite")
    p.add_argument("suite", type=str.upper, choices=list(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "invariants":
            ideal = parse_ideal(" ".join(args.ideal), args.dim)
            lam = parse_rational(args.lam) if args.lam else None
            lines, ok = invariants_report(ideal, lam, MonomialOrder.parse(args.order), args.powers)
            out.write("\n".join(lines) + "\n")
            return EXIT_OK if ok else EXIT_FAIL
        if args.command == "sequence":
            spec = ExperimentSpec(args.descriptor, args.M, args.pbudget, args.rbudget, tuple(args.columns),
                                  args.out, args.format, args.dim)
            text = render(sequence_report(spec), spec.format)
            if spec.out:
                Path(spec.out).write_text(text)
            else:
                out.write(text)
            return EXIT_OK
        if args.command == "verify":
            if args.count < 1:
                raise InputError("count must be at least 1")
            rep = run_suite(args.suite, args.seed, args.count)
            out.write(rep.summary() + "\n")
            for f in rep.failures:
                out.write(f"  failure: {f}\n")
            return EXIT_OK if rep.ok else EXIT_FAIL
    except WorkLimitExceeded as exc:
        print(f"work limit: {exc}", file=sys.stderr)
        return EXIT_WORK
    except (ParseError, InputError, NotZeroDimensionalError, UnitIdealError, ValueError, IndexError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
