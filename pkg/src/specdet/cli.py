"""Command-line surface: spectra, zeta/determinant evaluations, the
quartic-well figure data, binomial closed forms, verification suites and the
reference-table reproduction.

Outputs are CSV with `# key=value` header comments or a JSON mirror; every
file embeds the tool version and the full configuration so a run can be
reproduced from its own output.  Exit codes: 0 success, 1 verification
failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import cmath
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from xml.etree import ElementTree as ET

import numpy as np

from . import __version__, closedform
from .backend import backend_name
from .potential import PolynomialPotential, parse_potential
from .qi import figure_row, qi_eval
from .recessive import determinant_pair
from .spectrum import eigenvalues, generalized_zeros
from .zetadet import determinant_spectral, zeta
from . import verify as verify_mod
from .verify import run_all, run_suite, SUITES, table1_report


class UsageError(Exception):
    pass


def _parse_grid(text: str) -> np.ndarray:
    try:
        a, b, h = (float(x) for x in text.split(":"))
    except ValueError as exc:
        raise UsageError(f"grid must be start:stop:step, got {text!r}") from exc
    if h <= 0 or b < a:
        raise UsageError("grid needs step > 0 and stop >= start")
    n = int(round((b - a) / h)) + 1
    return a + h * np.arange(n)


def _meta(args, extra: dict | None = None) -> dict:
    cfg = {k: v for k, v in vars(args).items() if k != "func" and v is not None}
    meta = {"tool": "specdet", "version": __version__,
            "backend": backend_name(), "config": cfg}
    meta.update(extra or {})
    return meta


def _emit(rows: list[dict], columns: list[str], meta: dict, fmt: str, out):
    fh = open(out, "w") if out else sys.stdout
    try:
        if fmt == "json":
            json.dump({"meta": meta, "rows": rows}, fh, indent=1, default=str)
            fh.write("\n")
        else:
            for k, v in meta.items():
                fh.write(f"# {k}={json.dumps(v, default=str)}\n")
            fh.write(",".join(columns) + "\n")
            for r in rows:
                fh.write(",".join(_csv_cell(r.get(c)) for c in columns) + "\n")
    finally:
        if out:
            fh.close()


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, complex):
        return f"{v.real!r}{v.imag:+}j"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _pot(args) -> PolynomialPotential:
    try:
        return parse_potential(args.potential)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad potential: {exc}") from exc


# -- subcommands ---------------------------------------------------------------


def cmd_spectrum(args) -> int:
    p = _pot(args)
    if args.count > 10000:
        raise UsageError("count capped at 10000")
    parities = {"even": ["+"], "odd": ["-"], "both": ["+", "-"]}[args.parity]
    rows = []
    for par in parities:
        spec = eigenvalues(p, par, args.count, tol=args.tol)
        for k, e in zip(spec.ks, spec.energies):
            rows.append({"k": int(k), "parity": par, "E_k": float(e),
                         "err": spec.tol})
    rows.sort(key=lambda r: r["k"])
    _emit(rows, ["k", "parity", "E_k", "err"], _meta(args), args.format, args.out)
    return 0


def cmd_zeta(args) -> int:
    p = _pot(args)
    parities = {"even": ["+"], "odd": ["-"], "both": ["+", "-"]}[args.parity]
    rows = []
    for par in parities:
        spec = eigenvalues(p, par, args.count, tol=min(args.tol, 1e-9))
        z = zeta(spec, args.s, args.lam, tol=args.tol)
        rows.append({"parity": par, "s": args.s, "lambda": args.lam,
                     "value": z.value.real if abs(z.value.imag) < 1e-14 else z.value,
                     "K_used": z.K_used, "err": z.error_estimate})
    _emit(rows, ["parity", "s", "lambda", "value", "K_used", "err"],
          _meta(args), args.format, args.out)
    return 0


def cmd_det(args) -> int:
    p = _pot(args)
    lams = _parse_grid(args.grid) if args.grid else [args.lam]

    def one(lam):
        if args.route == "recessive":
            d = determinant_pair(p, lam, rtol=max(args.tol * 1e-2, 1e-13))
            return {"lambda": lam, "d_plus": d.dplus, "d_minus": d.dminus,
                    "d": d.d, "err": d.error_estimate, "route": "recessive"}
        sp = eigenvalues(p, "+", args.count, tol=min(args.tol, 1e-9))
        sm = eigenvalues(p, "-", args.count, tol=min(args.tol, 1e-9))
        dp = determinant_spectral(sp, lam, tol=args.tol)
        dm = determinant_spectral(sm, lam, tol=args.tol)
        return {"lambda": lam, "d_plus": dp.value, "d_minus": dm.value,
                "d": dp.value * dm.value,
                "err": dp.error_estimate + dm.error_estimate, "route": "spectral"}

    with ThreadPoolExecutor(max_workers=args.threads) as ex:
        rows = list(ex.map(one, lams))
    _emit(rows, ["lambda", "d_plus", "d_minus", "d", "err", "route"],
          _meta(args), args.format, args.out)
    return 0


def cmd_qi(args) -> int:
    grid = _parse_grid(args.grid)
    if grid[0] < -15.0 or grid[-1] > 10.0:
        raise UsageError("qi grid supported on [-15, 10]")
    with ThreadPoolExecutor(max_workers=args.threads) as ex:
        rows = list(ex.map(lambda v: figure_row(float(v), tol=args.tol), grid))
    cols = ["v", "qi_plus", "qi_minus", "asym_plus", "asym_minus",
            "log10_abs_plus", "log10_abs_minus"]
    _emit(rows, cols, _meta(args), args.format, args.out)
    return 0


def cmd_binomial(args) -> int:
    if args.N % 2 or args.N < 2:
        raise UsageError("binomial family needs even N >= 2")
    vs = _parse_grid(args.grid) if args.grid else [args.v]
    rows = []
    for v in vs:
        dp, dm = closedform.binomial_determinants(args.N, float(v))
        row = {"v": float(v), "d_plus": dp, "d_minus": dm}
        gp, gm = closedform.binomial_gen_determinants(args.N, float(v))
        row["gen_plus"], row["gen_minus"] = gp, gm
        if args.N % 4 == 0:
            row["whole_line"] = closedform.binomial_whole_line(args.N, float(v))
        if args.check_ode:
            d = determinant_pair(
                PolynomialPotential(args.N, {args.N // 2 - 1: float(v)}), 0.0)
            row["ode_plus"], row["ode_minus"] = d.dplus.real, d.dminus.real
        rows.append(row)
    cols = ["v", "d_plus", "d_minus", "gen_plus", "gen_minus", "whole_line",
            "ode_plus", "ode_minus"]
    _emit(rows, cols, _meta(args), args.format, args.out)
    return 0


def cmd_verify(args) -> int:
    if args.suite == "all":
        reports = run_all()
    elif args.suite == "table1":
        rows = table1_report(fast=args.fast)
        return _finish_table1(rows, args)
    else:
        try:
            reports = run_suite(args.suite)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    rows = [r.to_json_dict() for r in reports]
    for r in reports:
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.identity:44s} "
              f"max-residual {r.max_residual:.3e}  tol {r.tolerance:.1e}")
    ok = all(r.passed for r in reports)
    if args.out:
        _emit(rows, ["identity", "samples", "max_residual", "tolerance", "passed"],
              _meta(args, {"passed": ok}), args.format, args.out)
    if args.junit:
        _write_junit(reports, args.junit)
    print(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return 0 if ok else 1


def _write_junit(reports, path) -> None:
    suite = ET.Element("testsuite", name="specdet-verify",
                       tests=str(len(reports)),
                       failures=str(sum(not r.passed for r in reports)))
    for r in reports:
        case = ET.SubElement(suite, "testcase", classname="specdet.verify",
                             name=r.identity)
        if not r.passed:
            ET.SubElement(case, "failure", message=(
                f"max residual {r.max_residual:.3e} exceeds {r.tolerance:.1e}"))
    ET.ElementTree(suite).write(path, xml_declaration=True, encoding="utf-8")


def _finish_table1(rows, args) -> int:
    width = max(len(r["quantity"]) for r in rows) + 2
    print(f"{'quantity':{width}s} {'computed':>16s} {'reference':>16s} "
          f"{'numeric':>16s}  status")
    ok = True
    for r in rows:
        ok &= r["passed"]
        num = "" if r["numeric"] is None else f"{r['numeric']:16.9f}"
        print(f"{r['quantity']:{width}s} {r['computed']:16.9f} "
              f"{r['reference']:16.9f} {num:>16s}  "
              f"{'ok' if r['passed'] else 'MISMATCH'}")
    if args.out:
        _emit(rows, ["quantity", "computed", "reference", "numeric",
                     "tolerance", "passed"], _meta(args, {"passed": ok}),
              args.format, args.out)
    print("table reproduction:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_table1(args) -> int:
    return _finish_table1(table1_report(fast=args.fast), args)


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="specdet",
        description="Spectral determinants and zeta functions of 1D "
                    "Schrodinger operators with polynomial potentials")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, potential=True):
        if potential:
            p.add_argument("--potential", required=True,
                           help="text form 'q^4 + 2*q^2' or JSON")
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None)
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("spectrum", help="eigenvalues per parity")
    common(p)
    p.add_argument("--parity", choices=("even", "odd", "both"), default="both")
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("zeta", help="zeta value of a computed spectrum")
    common(p)
    p.add_argument("--parity", choices=("even", "odd", "both"), default="both")
    p.add_argument("--count", type=int, default=48)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--lam", type=float, default=0.0)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("det", help="spectral determinants over a grid")
    common(p)
    p.add_argument("--lam", type=float, default=0.0)
    p.add_argument("--grid", default=None, help="lambda grid start:stop:step")
    p.add_argument("--route", choices=("recessive", "spectral"),
                   default="recessive")
    p.add_argument("--count", type=int, default=48)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("qi", help="quartic-well determinant figure data")
    common(p, potential=False)
    p.add_argument("--grid", default="-12:6:0.05", help="v grid start:stop:step")
    p.set_defaults(func=cmd_qi)

    p = sub.add_parser("binomial", help="binomial-family closed forms")
    common(p, potential=False)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--v", type=float, default=0.0)
    p.add_argument("--grid", default=None, help="v grid start:stop:step")
    p.add_argument("--check-ode", action="store_true",
                   help="cross-check against the integration route")
    p.set_defaults(func=cmd_binomial)

    p = sub.add_parser("verify", help="run identity-verification suites")
    common(p, potential=False)
    p.add_argument("suite", nargs="?", default="all",
                   help=f"one of: all, table1, {', '.join(SUITES)}")
    p.add_argument("--junit", default=None, help="JUnit XML output path")
    p.add_argument("--fast", action="store_true",
                   help="skip the slower numeric cross-checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table1", help="recompute the reference zeta table")
    common(p, potential=False)
    p.add_argument("--fast", action="store_true")
    p.set_defaults(func=cmd_table1)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
