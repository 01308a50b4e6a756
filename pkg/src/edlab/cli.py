"""Command-line front end: ``edlab info | degree | sweep | verify | oracle-compare``.

Exit status: 0 when everything checked passes, 2 on any failure, 3 when the
only non-passes are findings, 1 for unusable input (bad group spec, caps).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import config as config_mod
from . import corpus
from .config import Config
from .degrees import commutativity_degree
from .exterior import (
    build_cover,
    closed_form_dihedral,
    closed_form_quaternion,
    degree_via_classes,
    exterior_center,
    exterior_degree_m,
    exterior_square_order,
)
from .fp import EnumerationError, PresentationError
from .groups import GroupError, center, derived_subgroup, whole
from .groupspec import parse_group, parse_subgroup
from .tensor import pair_product
from .verify import SUITES, CheckReport, exit_status, run_suite, summarize

SPEC_HELP = """\
group specs:
  C(n)    cyclic group of order n
  D(n)    dihedral group of ORDER 2n: the argument is n, so D(4) has order 8
  Q(n)    generalized quaternion group of order 4n (n >= 2); Q(2) is Q8
  S(n)    symmetric group on n points
  perm:[(1 2 3),(1 2)]   group generated by permutations
  table:PATH             Cayley table in JSON: {"order": n, "table": [[...]], "labels": [...]}
  fp:<a,b | a^4, b^2, b a b a>   finite presentation, enumerated
  A x B   direct product, e.g. "D(4) x C(3)"

subgroup specs (--H, --K): whole, center, derived, trivial, gen:[i,j,...]
(closure of element indices; run `edlab info` to see the indices)

EDLAB_CONFIG may name a JSON file with caps and enumeration settings.
"""


def _frac(v) -> str:
    v = getattr(v, "value", v)
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def _range(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected A..B or A, got {text!r}")
    a = int(m.group(1))
    b = int(m.group(2)) if m.group(2) else a
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _elements(sub) -> str:
    return "{" + ", ".join(sub.parent.labels[x] for x in sub.elements) + "}"


# info ---------------------------------------------------------------------


def cmd_info(args, cfg: Config, out) -> int:
    g = parse_group(args.spec, cap=cfg.cayley)
    lines = [
        f"group: {g.name}",
        f"order: {g.order}",
        f"classes: {g.class_number}",
        f"exponent: {g.exponent}",
        f"center: order {center(g).order} {_elements(center(g))}",
        f"derived: order {derived_subgroup(g).order} {_elements(derived_subgroup(g))}",
        f"commutativity degree: {_frac(commutativity_degree(g))}",
    ]
    if g.order <= cfg.homology:
        cov = build_cover(g, cap=cfg.homology)
        z = exterior_center(cov)
        lines += [
            f"schur multiplier: {cov.kernel} (order {cov.kernel.order})",
            f"exterior center: order {z.order} {_elements(z)}",
            f"exterior square order: {exterior_square_order(cov)}",
        ]
    else:
        lines.append(f"schur multiplier: not computed, order above the homology cap {cfg.homology}")
    if args.elements:
        lines.append("elements:")
        lines += [f"  {i}: {lab} (order {g.element_orders[i]})" for i, lab in enumerate(g.labels)]
    print("\n".join(lines), file=out)
    return 0


# degree -------------------------------------------------------------------

_FAMILY = re.compile(r"\s*([DQ])\s*\(\s*(\d+)\s*\)\s*")


def _closed_form(spec: str, m: int):
    fm = _FAMILY.fullmatch(spec)
    if not fm:
        return None
    n = int(fm.group(2))
    if fm.group(1) == "D":
        return closed_form_dihedral(n, m)
    return closed_form_quaternion(n, m)


def degree_values(spec: str, m: int, h_spec: str | None, k_spec: str | None, method: str, cfg: Config) -> dict[str, str]:
    g = parse_group(spec, cap=cfg.cayley)
    h, k = parse_subgroup(g, h_spec), parse_subgroup(g, k_spec)
    if not (h.is_normal and k.is_normal):
        raise GroupError("H and K must be normal subgroups")
    full = h.order == g.order and k.order == g.order
    wanted = ("cover", "fp", "closed-form") if method == "all" else (method,)
    values: dict[str, str] = {}
    for meth in wanted:
        if meth == "cover":
            cov = build_cover(g, cap=cfg.homology)
            if full:
                values["cover"] = _frac(exterior_degree_m(cov, m))
            else:
                # wedges read in G ^ G, which need not equal H ^ K
                values["via-G^G"] = _frac(degree_via_classes(cov, h, k, m)[0])
        elif meth == "fp":
            p = pair_product(g, h, k, "exterior", cap=cfg.fp_pair, coset_cap=cfg.coset_rows, strategy=cfg.strategy)
            count = sum(1 for x in h.elements for y in k.elements if p.wedge_trivial(g.power(x, m), y))
            values["fp"] = _frac(Fraction(count, h.order * k.order))
        elif meth == "closed-form":
            cf = _closed_form(spec, m) if full else None
            if cf is None:
                if method == "closed-form":
                    raise GroupError("closed forms exist only for D(n) and Q(n) with H = K = G")
                continue
            values["closed-form"] = _frac(cf)
    return values


def cmd_degree(args, cfg: Config, out) -> int:
    values = degree_values(args.spec, args.m, args.H, args.K, args.method, cfg)
    for name, v in values.items():
        print(f"{name}: {v}", file=out)
    if len(values) > 1:
        agree = len(set(values.values())) == 1
        print(f"agreement: {'yes' if agree else 'no'}", file=out)
        if not agree:
            print("finding: methods disagree", file=out)
            return 3
    return 0


# sweep --------------------------------------------------------------------

SWEEP_COLUMNS = (
    "group",
    "n",
    "order",
    "m",
    "d",
    "ext_degree",
    "closed_form",
    "alpha_min",
    "alpha_max",
    "multiplier_order",
    "closed_form_agrees",
    "class_sum_agrees",
)


def _sweep_specs(family: str, ns: range) -> list[tuple[str, int]]:
    if family == "dihedral":
        return [(f"D({n})", n) for n in ns]
    if family == "quaternion":
        return [(f"Q({n})", n) for n in ns if n >= 2]
    if family == "cyclic":
        return [(f"C({n})", n) for n in ns]
    # all-small: n ranges over group orders
    return [(s, corpus.group(s).order) for s in corpus.small_specs(min(ns.stop - 1, 16)) if corpus.group(s).order in ns]


def _sweep_rows(task: tuple[str, int, tuple[int, ...], Config]) -> list[dict[str, str]]:
    spec, n, ms, cfg = task
    g = parse_group(spec, cap=cfg.cayley)
    cov = build_cover(g, cap=cfg.homology)
    d = _frac(commutativity_degree(g))
    w = whole(g)
    rows = []
    for m in ms:
        ext = exterior_degree_m(cov, m)
        via, table = degree_via_classes(cov, w, w, m)
        cf = _closed_form(spec, m)
        rows.append(
            {
                "group": g.name,
                "n": str(n),
                "order": str(g.order),
                "m": str(m),
                "d": d,
                "ext_degree": _frac(ext),
                "closed_form": _frac(cf) if cf is not None else "",
                "alpha_min": str(table.beta),
                "alpha_max": str(table.gamma),
                "multiplier_order": str(cov.kernel.order),
                "closed_form_agrees": "" if cf is None else ("yes" if cf == ext else "no"),
                "class_sum_agrees": "yes" if via == ext else "no",
            }
        )
    return rows


def sweep(family: str, ns: range, ms: range, cfg: Config) -> list[dict[str, str]]:
    tasks = [(spec, n, tuple(ms), cfg) for spec, n in _sweep_specs(family, ns)]
    if cfg.parallelism > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(cfg.parallelism) as pool:
            parts = list(pool.map(_sweep_rows, tasks))
    else:
        parts = [_sweep_rows(t) for t in tasks]
    return [r for part in parts for r in part]


def render_sweep(rows: list[dict[str, str]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"columns": list(SWEEP_COLUMNS), "rows": rows}, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_sweep(args, cfg: Config, out) -> int:
    rows = sweep(args.family, args.n, args.m, cfg)
    text = render_sweep(rows, args.format)
    if args.out == "-":
        out.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        print(f"wrote {len(rows)} rows to {args.out}", file=out)
    bad = any(r["closed_form_agrees"] == "no" or r["class_sum_agrees"] == "no" for r in rows)
    return 2 if bad else 0


# verify / oracle-compare --------------------------------------------------


def _print_reports(reports: list[CheckReport], out, show_all: bool, as_json: bool) -> None:
    if as_json:
        body = {"summary": summarize(reports), "reports": [r.to_json() for r in reports if show_all or r.verdict != "pass"]}
        print(json.dumps(body, indent=1), file=out)
        return
    for r in reports:
        if show_all or r.verdict != "pass":
            j = r.to_json()
            line = f"{r.verdict:7s} {r.check}: {r.instance} {json.dumps(j['values'], sort_keys=True)}"
            if j["witnesses"]:
                line += f" witnesses={json.dumps(j['witnesses'])}"
            print(line, file=out)
    c = summarize(reports)
    print(f"summary: {c['pass']} pass, {c['fail']} fail, {c['finding']} finding", file=out)


def cmd_verify(args, cfg: Config, out) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise GroupError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all")
    reports = run_suite(args.suite, args.max_order, cfg)
    _print_reports(reports, out, args.all_records, args.json)
    return exit_status(reports)


def oracle_compare(spec: str, cfg: Config) -> list[CheckReport]:
    g = parse_group(spec, cap=cfg.cayley)
    w = whole(g)
    cov = build_cover(g, cap=cfg.homology)
    p = pair_product(g, w, w, "exterior", cap=cfg.fp_pair, coset_cap=cfg.coset_rows, strategy=cfg.strategy)
    wt = cov.wedge_table
    mism = [[x, y] for x in range(g.order) for y in range(g.order) if wt[x][y] != p.wedge_trivial(x, y)]
    reports = [
        CheckReport("wedge-table", g.name, "fail" if mism else "pass", {"pairs": g.order**2, "mismatches": len(mism)}, mism[:10]),
        CheckReport(
            "multiplier",
            g.name,
            "pass" if cov.kernel == p.kernel else "fail",
            {"homology": str(cov.kernel), "kernel": str(p.kernel)},
        ),
        CheckReport(
            "exterior-order",
            g.name,
            "pass" if exterior_square_order(cov) == p.product.order else "fail",
            {"cover": exterior_square_order(cov), "fp": p.product.order},
        ),
    ]
    for m in range(1, g.exponent + 2):
        a = exterior_degree_m(cov, m).value
        b = Fraction(sum(1 for x in range(g.order) for y in range(g.order) if p.wedge_trivial(g.power(x, m), y)), g.order**2)
        reports.append(CheckReport("degree", f"{g.name}; m={m}", "pass" if a == b else "fail", {"cover": a, "fp": b}))
    return reports


def cmd_oracle_compare(args, cfg: Config, out) -> int:
    reports = oracle_compare(args.spec, cfg)
    _print_reports(reports, out, True, args.json)
    return exit_status(reports)


# parser -------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.RawDescriptionHelpFormatter
    top = _Parser(
        prog="edlab",
        description="Exterior and commutativity degrees of small finite groups.\n"
        "NOTE: D(n) is the dihedral group of order 2n.",
        epilog=SPEC_HELP,
        formatter_class=fmt,
    )
    top.add_argument("--config", help="JSON config file (default: $EDLAB_CONFIG)")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="basic invariants of a group", epilog=SPEC_HELP, formatter_class=fmt)
    p.add_argument("spec", help="group spec; D(n) has order 2n")
    p.add_argument("--elements", action="store_true", help="list element indices and labels")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("degree", help="m-th relative exterior degree d^_m(H,K)", epilog=SPEC_HELP, formatter_class=fmt)
    p.add_argument("spec", help="group spec; D(n) has order 2n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--H", default="whole", help="subgroup spec (default whole)")
    p.add_argument("--K", default="whole", help="subgroup spec (default whole)")
    p.add_argument("--method", choices=("cover", "fp", "closed-form", "all"), default="all")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser(
        "sweep",
        help="table of degrees over a family",
        description="One row per (group, m). For dihedral, D(n) has order 2n; "
        "for all-small, --n ranges over group orders (at most 16).",
        epilog="columns: " + ", ".join(SWEEP_COLUMNS) + "\nfractions are written num/den",
        formatter_class=fmt,
    )
    p.add_argument("--family", choices=("dihedral", "quaternion", "cyclic", "all-small"), required=True)
    p.add_argument("--n", type=_range, required=True, help="A..B")
    p.add_argument("--m", type=_range, required=True, help="A..B")
    p.add_argument("--out", default="-", help="output path, - for stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a property-check suite", epilog="suites: " + ", ".join(SUITES) + ", all")
    p.add_argument("--suite", required=True)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--all-records", action="store_true", help="print passing records too")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-compare", help="cover route against the enumerated G ^ G", epilog=SPEC_HELP, formatter_class=fmt)
    p.add_argument("spec", help="group spec; D(n) has order 2n")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle_compare)
    return top


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_mod.load(args.config)
        return args.func(args, cfg, out)
    except (GroupError, PresentationError, EnumerationError, ValueError, OSError) as e:
        print(f"edlab: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
