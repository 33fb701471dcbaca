"""Batch command line: compute Spin data, run verification suites, sweep.

Exit codes: 0 success, 1 assertion failure, 2 usage error, 3 budget
refusal. All output is deterministic at a fixed configuration; flags have
SPINCHAR_* environment-variable equivalents.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import BudgetExceeded, SpinCharError
from .charring import freudenthal_weights, decompose
from .gradings import OUTER_FAMILIES, grading_catalog, outer_grading, spin_g1
from .rootsys import build_root_system
from .spinmod import (
    classify_coprimary,
    extreme_weights,
    orthogonality_type,
    spin_scalar,
    spin0_character,
)
from . import verify as verify_mod

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _env_default(flag, fallback, cast):
    value = os.environ.get("SPINCHAR_" + flag.upper().replace("-", "_"))
    if value is None:
        return fallback
    return cast(value)


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--weyl-budget", type=int,
                        default=_env_default("weyl-budget", 10**6, int),
                        help="largest Weyl group order to enumerate")
    common.add_argument("--term-budget", type=int,
                        default=_env_default("term-budget", 5 * 10**6, int),
                        help="largest character support to hold")
    common.add_argument("--jobs", type=int, default=_env_default("jobs", 1, int),
                        help="parallel workers for suite fan-out")
    common.add_argument("--format", choices=["json", "markdown", "both"],
                        default=_env_default("format", "markdown", str))
    p = argparse.ArgumentParser(
        prog="spinchar",
        description="Exact Spin decompositions of orthogonal modules")
    sub = p.add_subparsers(dest="command", required=True)

    spin = sub.add_parser("spin", parents=[common],
                          help="orthogonality, Spin0 and extreme data")
    spin.add_argument("--type", required=True, help='descriptor, e.g. "B2", "A1xA1"')
    spin.add_argument("--rank", type=int, default=None,
                      help="rank when --type is a bare family letter")
    spin.add_argument("--weight", action="append", required=True,
                      help='fundamental-weight coefficients, e.g. "1,0"')

    ver = sub.add_parser("verify", parents=[common],
                         help="run a named verification suite")
    ver.add_argument("--suite", default="all",
                     choices=sorted(verify_mod.SUITES) + ["all"])

    cls = sub.add_parser("classify", parents=[common],
                         help="sweep for co-primary modules")
    cls.add_argument("--rank-bound", type=int,
                     default=_env_default("rank-bound", 3, int))
    cls.add_argument("--height-bound", type=int,
                     default=_env_default("height-bound", 6, int))

    show = sub.add_parser("show", parents=[common],
                          help="dump root-system or grading data")
    show.add_argument("--type", default=None, help="root-system descriptor")
    show.add_argument("--grading", default=None,
                      help='catalog name, e.g. "F4/B4", "E6/C4"')
    return p


# ---------------------------------------------------------------------------
# spin command


def _parse_weight(rs, text):
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != rs.rank:
        raise SpinCharError(
            f"weight {text!r} has {len(parts)} coefficients, rank is {rs.rank}")
    from fractions import Fraction
    return rs.weight(*[Fraction(s) for s in parts])


def cmd_spin(args):
    rs = build_root_system(args.type, args.rank)
    reports = []
    for text in args.weight:
        lam = _parse_weight(rs, text)
        kind = orthogonality_type(rs, lam, args.weyl_budget)
        report = {
            "type": rs.descriptor(),
            "weight": [str(c) for c in rs.fw_coefficients(lam)],
            "orthogonality": kind,
        }
        if kind == "orthogonal":
            ws = freudenthal_weights(rs, lam)
            dec = decompose(spin0_character(ws, term_budget=args.term_budget),
                            rs, args.weyl_budget)
            report["spin_scalar"] = spin_scalar(ws)
            report["spin0_decomposition"] = dec.to_json()
            report["coprimary"] = len(dec) == 1 and dec.is_multiplicity_free()
            report["extreme_weights"] = [
                [str(c) for c in w.coords]
                for w in extreme_weights(ws, check_coefficients=False)]
        reports.append(report)
    _emit(args, {"spin": reports}, _spin_markdown)
    return EXIT_OK


def _spin_markdown(payload):
    lines = ["| type | weight | orthogonality | Spin0 | co-primary |",
             "|---|---|---|---|---|"]
    for r in payload["spin"]:
        if r["orthogonality"] == "orthogonal":
            parts = " + ".join(
                f"{s['multiplicity']} V_({','.join(s['fw'])})"
                for s in r["spin0_decomposition"])
            cop = "yes" if r["coprimary"] else "no"
        else:
            parts, cop = "-", "-"
        lines.append(f"| {r['type']} | ({','.join(r['weight'])}) |"
                     f" {r['orthogonality']} | {parts} | {cop} |")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# verify command


def _run_one_suite(name, weyl_budget, term_budget):
    return verify_mod.SUITES[name](weyl_budget, term_budget)


def cmd_verify(args):
    names = sorted(verify_mod.SUITES) if args.suite == "all" else [args.suite]
    records = []
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(_run_one_suite, n, args.weyl_budget,
                                   args.term_budget) for n in names]
            for f in futures:
                records.extend(f.result())
    else:
        for n in names:
            records.extend(_run_one_suite(n, args.weyl_budget, args.term_budget))
    records.sort(key=lambda r: r["id"])
    payload = {"suite": args.suite, "checks": records}
    extra = None
    if args.suite == "table1":
        extra = table1_markdown()
    if args.suite == "outer":
        extra = table2_markdown()
    _emit(args, payload, lambda p: _verify_markdown(p, extra))
    failed = [r for r in records if r["status"] == "fail"]
    return EXIT_FAIL if failed else EXIT_OK


def _verify_markdown(payload, extra=None):
    lines = []
    for r in payload["checks"]:
        lines.append(f"{r['status'].upper():5s} {r['id']}"
                     + (f" :: {r['detail']}" if r["detail"] else ""))
    counts = {}
    for r in payload["checks"]:
        counts[r["status"]] = counts.get(r["status"], 0) + 1
    lines.append("summary: " + ", ".join(
        f"{counts.get(s, 0)} {s}" for s in ("pass", "fail", "skip")))
    if extra:
        lines.append("")
        lines.append(extra)
    return "\n".join(lines)


def table1_markdown():
    """The free skew-invariant table, in its two-column-plus-data layout."""
    from .charring import WeightSystem, invariant_poincare
    lines = ["| algebra | module | dim P | Poincare polynomial |",
             "|---|---|---|---|"]
    rs = build_root_system("A2")
    gp = invariant_poincare(WeightSystem.adjoint(rs))
    lines.append(f"| simple g (A2 shown) | adjoint | rk g | {gp} |")
    for desc, coeffs, label in [
        ("C2", (0, 1), "sp4: V_w2"),
        ("B2", (2, 0), "so5: V_2w1"),
        ("A1", (4,), "sl2: V_4w"),
        ("B2", (1, 0), "so5: V_w1"),
        ("A1xA1", (1, 1), "V_w x V_w'"),
        ("F4", (1, 0, 0, 0), "f4: V_w1"),
    ]:
        rs = build_root_system(desc)
        gp = invariant_poincare(freudenthal_weights(rs, rs.weight(*coeffs)))
        dim_p = len(gp.factored() or [])
        lines.append(f"| {desc} | {label} | {dim_p} | {gp} |")
    return "\n".join(lines)


def table2_markdown():
    """The outer-involution families with their coset-section counts."""
    from math import comb
    lines = ["| g | g0 | g1 | diagram g0 | diagram g1 | #W'/W0 |",
             "|---|---|---|---|---|---|"]
    specs = [("sl_even", (2,), 2), ("so_odd_odd", (1, 1), comb(2, 1)),
             ("e6_sp8", (), 3), ("sl_odd", (2,), 1)]
    for family, params, expected in specs:
        data = OUTER_FAMILIES[family](*params)
        grading = outer_grading(family, *params)
        sp = spin_g1(grading)
        lines.append(
            f"| {data['g']} | {data['g0']} | isotropy module |"
            f" {data['diagram']['g0bar']} | {data['diagram']['g1bar']} |"
            f" {len(sp)} |")
        assert len(sp) == expected
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# classify command


def cmd_classify(args):
    records = classify_coprimary(args.rank_bound, args.height_bound,
                                 args.weyl_budget, args.term_budget)
    payload = {"rank_bound": args.rank_bound, "height_bound": args.height_bound,
               "candidates": records}
    _emit(args, payload, _classify_markdown)
    return EXIT_OK


def _classify_markdown(payload):
    lines = [f"co-primary sweep: rank <= {payload['rank_bound']},"
             f" height <= {payload['height_bound']}",
             "| type | weight | co-primary | decided by |", "|---|---|---|---|"]
    for r in payload["candidates"]:
        if r["coprimary"]:
            mark = "yes"
        elif r["coprimary"] is None:
            mark = "skipped"
        else:
            mark = ""
        if r["coprimary"] or r["filter"] in ("spin0-reducible", "budget-skipped"):
            lines.append(f"| {r['type']} | ({','.join(r['weight'])}) |"
                         f" {mark} | {r['filter']} |")
    found = sum(1 for r in payload["candidates"] if r["coprimary"])
    lines.append(f"\n{found} co-primary modules among"
                 f" {len(payload['candidates'])} candidates")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# show command


def cmd_show(args):
    if args.type is None and args.grading is None:
        raise SpinCharError("show needs --type or --grading")
    payload = {}
    if args.type:
        payload["root_system"] = build_root_system(args.type).to_json()
    if args.grading:
        catalog = grading_catalog()
        if args.grading not in catalog:
            raise SpinCharError(
                f"unknown grading {args.grading!r}; known:"
                f" {', '.join(sorted(catalog))}")
        grading = catalog[args.grading]()
        sp = spin_g1(grading, args.weyl_budget, args.term_budget)
        from .gradings import casimir_check, verify_tau_identity
        d1p = [w for w, _ in grading.delta1.canonical_half()]
        identity_ok = verify_tau_identity(
            grading.ambient, grading.sub, d1p, args.weyl_budget,
            args.term_budget, rho=grading.rho_effective)
        payload["grading"] = {
            "label": grading.label,
            "kind": grading.kind,
            "g0": grading.g0.descriptor(),
            "summands": [s.to_json(grading) for s in sp.summands],
            "multiplicity_free": sp.is_multiplicity_free(),
            "identity_ok": identity_ok,
            "casimir_value": str(casimir_check(grading, sp)),
            "coset_section": [
                [[str(x) for x in row] for row in s.rep.matrix]
                for s in sp.summands],
        }
    _emit(args, payload, lambda p: json.dumps(p, indent=2, sort_keys=True))
    return EXIT_OK


# ---------------------------------------------------------------------------


def _emit(args, payload, markdown_fn):
    if args.format in ("json", "both"):
        print(json.dumps(payload, indent=2, sort_keys=True))
    if args.format in ("markdown", "both"):
        print(markdown_fn(payload))


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "spin":
            return cmd_spin(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "classify":
            return cmd_classify(args)
        if args.command == "show":
            return cmd_show(args)
        raise SpinCharError(f"unknown command {args.command}")
    except BudgetExceeded as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SpinCharError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"assertion failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
