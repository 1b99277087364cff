"""Command-line front end: ``mpoly <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 internal convention violation.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import families, suites
from .coeff import CoefficientError, RationalQT, render, render_latex
from .compositions import composition, format_composition, modulus, plan, plan_reduced
from .generator import INTERPOLATION, NONSYMMETRIC, CACHE_ENV, ConventionError, generate, set_cache_dir
from .operators import BlockError
from .pieri import pieri_coeff, pieri_row
from .polyring import MPoly, to_json, to_latex, to_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

# (eta, operators for E, operators for E*)
REFERENCE_COUNTS = (
    ((0, 4), 7, 7),
    ((1, 3), 3, 5),
    ((2, 2), 0, 4),
    ((3, 1), 4, 6),
    ((4, 0), 8, 8),
    ((0, 0, 4), 10, 10),
    ((1, 1, 2), 1, 4),
    ((2, 1, 1), 3, 6),
    ((4, 0, 0), 12, 12),
    ((1, 3, 0), 9, 9),
    ((0, 7), 13, 13),
    ((3, 4), 1, 7),
    ((4, 3), 2, 8),
    ((7, 0), 14, 14),
)
PRESETS = {"table1": tuple(row[0] for row in REFERENCE_COUNTS)}


class UsageError(ValueError):
    pass


def _generators(s):
    if not s:
        return set()
    try:
        return {int(x) for x in s.split(",") if x.strip()}
    except ValueError:
        raise UsageError(f"malformed generator list {s!r}; expected e.g. '1,2'") from None


def _with_n(eta, n):
    if n is None:
        return eta
    if n < len(eta):
        if any(eta[n:]):
            raise UsageError(f"--n {n} is smaller than the composition length {len(eta)}")
        return eta[:n]
    return eta + (0,) * (n - len(eta))


def _poly(family, eta, args) -> MPoly:
    if family == "ns":
        return generate(eta, NONSYMMETRIC)
    if family == "interp":
        return generate(eta, INTERPOLATION)
    if family == "sym":
        return families.sym_mac(eta)
    if family == "asym":
        return families.asym_mac(eta)
    if family == "symint":
        return families.sym_int_mac(eta)
    if family == "asymint":
        return families.asym_int_mac(eta)
    if family == "hl":
        return families.hall_littlewood(eta)
    if family == "schur":
        return families.schur(eta)
    fam = INTERPOLATION if args.interpolation else families.MACDONALD
    return families.prescribed(eta, _generators(args.sym), _generators(args.anti), fam).poly


def _render_poly(f: MPoly, fmt) -> str:
    if fmt == "json":
        return to_json(f)
    if fmt == "latex":
        return to_latex(f)
    return to_text(f)


def _render_coeff(c: RationalQT, fmt) -> str:
    return render_latex(c) if fmt == "latex" else render(c)


def cmd_generate(args) -> int:
    eta = _with_n(composition(args.composition), args.n)
    print(_render_poly(_poly(args.command, eta, args), args.format))
    return EXIT_OK


def cmd_plan(args) -> int:
    eta = _with_n(composition(args.composition), args.n)
    print((plan_reduced(eta) if args.reduced else plan(eta)).to_json())
    return EXIT_OK


def cmd_pieri(args) -> int:
    eta = _with_n(composition(args.eta), args.n)
    if args.r < 1:
        raise UsageError("r must be at least 1")
    if args.lam is not None:
        lam = _with_n(composition(args.lam), args.n)
        if modulus(lam) != modulus(eta) + args.r:
            raise UsageError(f"|lambda| = {modulus(lam)} but |eta| + r = {modulus(eta) + args.r}")
        c = pieri_coeff(eta, lam, args.r)
        if args.format == "json":
            print(json.dumps({"eta": list(eta), "lambda": list(lam), "r": args.r, "coeff": render(c)}))
        else:
            print(_render_coeff(c, args.format))
        return EXIT_OK
    row = pieri_row(eta, args.r)
    keys = sorted(row, reverse=True)
    if args.format == "json":
        print(json.dumps({"eta": list(eta), "r": args.r,
                          "row": [{"lambda": list(k), "coeff": render(row[k])} for k in keys]}))
    else:
        for k in keys:
            print(f"{format_composition(k)}\t{_render_coeff(row[k], args.format)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = suites.run_all(args.max_modulus, args.max_vars, args.seed)
    if args.format == "json":
        print(json.dumps({
            "passed": all(r.passed for r in results),
            "suites": [{"name": r.name, "passed": r.passed, "checks": r.checks, "failures": r.failures}
                       for r in results],
        }))
    else:
        for r in results:
            print(f"{r.name}\t{'PASS' if r.passed else 'FAIL'}\t{r.checks}")
            for label in r.failures[:10]:
                print(f"  failed: {label}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def bench_rows(comps, which=("E", "E*")):
    """(eta, family, #operators, seconds) per composition and family, cache bypassed."""
    rows = []
    for eta in comps:
        for fam in which:
            family = NONSYMMETRIC if fam == "E" else INTERPOLATION
            ops = len(plan_reduced(eta) if fam == "E" else plan(eta))
            start = time.perf_counter()
            generate(eta, family, use_cache=False)
            rows.append((eta, fam, ops, time.perf_counter() - start))
    return rows


def cmd_bench(args) -> int:
    comps = [composition(c) for c in args.compositions]
    if args.preset:
        comps.extend(PRESETS[args.preset])
    if not comps:
        comps = list(PRESETS["table1"])
    which = {"ns": ("E",), "interp": ("E*",), "both": ("E", "E*")}[args.family]
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["eta", "family", "operators", "seconds"])
    for eta, fam, ops, secs in bench_rows(comps, which):
        out.writerow([format_composition(eta), fam, ops, f"{secs:.4f}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--n", type=int, default=None, help="number of variables (pads with zeros)")
    common.add_argument("--cache-dir", default=None, help=f"persistent cache directory (or ${CACHE_ENV})")

    parser = argparse.ArgumentParser(prog="mpoly", description="Macdonald-type polynomials in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "ns": "nonsymmetric polynomial E_eta",
        "interp": "interpolation polynomial E*_eta",
        "sym": "symmetric P_kappa",
        "asym": "antisymmetric S_kappa (strict partition)",
        "symint": "symmetric interpolation polynomial",
        "asymint": "antisymmetric interpolation polynomial",
        "presym": "prescribed symmetry polynomial",
        "hl": "Hall-Littlewood P_kappa(z; t)",
        "schur": "Schur polynomial s_kappa",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("composition", help="comma-separated parts, e.g. 2,1")
        if name == "presym":
            p.add_argument("--sym", default="", help="symmetric generator indices, e.g. 1")
            p.add_argument("--anti", default="", help="antisymmetric generator indices, e.g. 3")
            p.add_argument("--interpolation", action="store_true", help="use E*_eta instead of E_eta")
        p.set_defaults(func=cmd_generate)

    p = sub.add_parser("plan", parents=[common], help="operator word generating a composition")
    p.add_argument("composition")
    p.add_argument("--reduced", action="store_true", help="start from (m,...,m), m = min part")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("pieri", parents=[common], help="Pieri-type coefficients A^(r)_{eta,lambda}")
    p.add_argument("eta")
    p.add_argument("r", type=int)
    p.add_argument("--lambda", dest="lam", default=None)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    p.add_argument("--max-modulus", type=int, default=3)
    p.add_argument("--max-vars", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="operator counts and timings as CSV")
    p.add_argument("compositions", nargs="*")
    p.add_argument("--preset", choices=sorted(PRESETS), default=None)
    p.add_argument("--family", choices=("ns", "interp", "both"), default="both")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        set_cache_dir(args.cache_dir)
    try:
        return args.func(args)
    except ConventionError as exc:
        print(f"mpoly: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, IndexError, ArithmeticError, BlockError, CoefficientError) as exc:
        print(f"mpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
