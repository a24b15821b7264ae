"""Command-line interface: spectra, convergence tables, fits, wavefunctions.

Subcommands
-----------
spectrum      bound energies for one or a sweep of angular momenta
converge      Laguerre spectra across a list of basis sizes at fixed lambda
fit           least-squares fit of E(n, ell) = C2(n) ell^2 - C0(n)
wavefunction  sampled bound-state wavefunctions on a radial grid

All numeric output is written with 12 significant digits in a fixed column
order, so repeated runs produce byte-identical files. Exit codes: 0 success,
2 invalid arguments, 3 solver failure, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import fdm, laguerre, tra
from .errors import (
    DegenerateParameterError,
    DomainError,
    InvariantViolationError,
    NoPlateauError,
    NotPositiveDefiniteError,
    NumericalFailureError,
    UnsupportedRegimeError,
)
from .model import PotentialParams
from .tra import SpectrumResult

SPECTRUM_FIELDS = ("method", "a", "b", "ell", "n", "energy")
WAVEFUNCTION_FIELDS = ("method", "a", "b", "ell", "level", "r", "psi")
FIT_FIELDS = ("n", "c2", "c0", "residual_rms", "n_ell")

_SOLVER_ERRORS = (
    UnsupportedRegimeError,
    NotPositiveDefiniteError,
    NumericalFailureError,
    NoPlateauError,
    InvariantViolationError,
    DegenerateParameterError,
)


def _fmt(value) -> str:
    """Locale-independent, 12-significant-digit float formatting."""
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".12g")
    return str(value)


@dataclass(frozen=True)
class FitResult:
    """Per-level coefficients of E(n, ell) = C2(n) ell^2 - C0(n)."""

    levels: list
    c2: np.ndarray
    c0: np.ndarray
    residual_rms: np.ndarray
    n_ell: list


def fit_spectrum_formula(spectra: dict[int, SpectrumResult]) -> FitResult:
    """Ordinary least squares of E against ell^2, one fit per level index.

    Levels observed for fewer than 3 distinct ell are skipped with a warning.
    """
    if not spectra:
        raise DomainError("no spectra supplied")
    n_max = max(len(s) for s in spectra.values())
    levels, c2s, c0s, resids, counts = [], [], [], [], []
    for n in range(n_max):
        ells = np.array(sorted(l for l, s in spectra.items() if len(s) > n))
        if ells.size < 3:
            warnings.warn(f"level {n}: only {ells.size} ell values, skipped")
            continue
        e = np.array([spectra[l].energies[n] for l in ells])
        design = np.column_stack([ells.astype(float) ** 2, np.ones(ells.size)])
        coef, *_ = np.linalg.lstsq(design, e, rcond=None)
        levels.append(n)
        c2s.append(coef[0])
        c0s.append(-coef[1])
        resids.append(float(np.sqrt(np.mean((design @ coef - e) ** 2))))
        counts.append(int(ells.size))
    return FitResult(
        levels=levels,
        c2=np.array(c2s),
        c0=np.array(c0s),
        residual_rms=np.array(resids),
        n_ell=counts,
    )


def _max_workers() -> int:
    env = os.environ.get("SPECTRA_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise DomainError(f"SPECTRA_THREADS must be an integer, got {env!r}") from exc
    return min(4, os.cpu_count() or 1)


def _solve_one(method: str, p: PotentialParams, args) -> SpectrumResult:
    if method == "tra":
        return tra.tra_spectrum(p)
    if method == "laguerre":
        lam = args.lambda_scale
        if lam is None or args.auto_lambda:
            result = laguerre.lag_plateau(p, args.size, (0.05, 1.0), steps=40)
            return result.spectrum
        basis = laguerre.LaguerreBasis(lam, args.size, p.ell)
        return laguerre.lag_spectrum(p, basis, args.quad_order)
    if method == "fd":
        cfg = fdm.FdConfig(m_interior=args.grid_m, half_width=args.stencil_k)
        return fdm.fd_spectrum(p, cfg, args.max_states)
    raise DomainError(f"unknown method {method!r}")


def run_spectrum(args) -> list[SpectrumResult]:
    """Compute spectra for the requested methods and angular momenta."""
    methods = ["tra", "laguerre", "fd"] if args.method == "all" else [args.method]
    ells = list(range(args.ell_max + 1)) if args.ell_max is not None else [args.ell]
    jobs = [
        (m, PotentialParams(a=args.a, b=args.b, ell=ell))
        for m in methods
        for ell in ells
    ]
    with ThreadPoolExecutor(max_workers=_max_workers()) as pool:
        results = list(pool.map(lambda job: _solve_one(job[0], job[1], args), jobs))
    return results


def spectrum_rows(results: list[SpectrumResult]) -> list[dict]:
    rows = []
    for res in results:
        for n, e in enumerate(res.energies):
            rows.append(
                {
                    "method": res.method,
                    "a": res.params.a,
                    "b": res.params.b,
                    "ell": res.params.ell,
                    "n": n,
                    "energy": e,
                }
            )
    order = {"TRA": 0, "Laguerre": 1, "FD": 2}
    rows.sort(key=lambda r: (order.get(r["method"], 9), r["ell"], r["n"]))
    return rows


def _write_table(path: str, fields, rows: list[dict], fmt: str, diagnostics=None):
    try:
        if fmt == "csv":
            with open(path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(fields)
                for row in rows:
                    writer.writerow([_fmt(row[f]) for f in fields])
        else:
            payload = {
                "rows": [
                    {f: (float(_fmt(row[f])) if isinstance(row[f], (float, np.floating)) else row[f]) for f in fields}
                    for row in rows
                ],
                "diagnostics": diagnostics or {},
            }
            with open(path, "w") as fh:
                json.dump(payload, fh, indent=2, sort_keys=True)
                fh.write("\n")
    except OSError as exc:
        raise _IoFailure(str(exc)) from exc


class _IoFailure(Exception):
    pass


def _diag_map(results: list[SpectrumResult]) -> dict:
    out = {}
    for res in results:
        key = f"{res.method}/ell={res.params.ell}"
        out[key] = {
            k: v for k, v in res.diagnostics.items() if not isinstance(v, np.ndarray)
        }
    return out


def cmd_spectrum(args) -> int:
    results = run_spectrum(args)
    rows = spectrum_rows(results)
    _write_table(args.out, SPECTRUM_FIELDS, rows, args.format, _diag_map(results))
    print(f"wrote {len(rows)} levels to {args.out}")
    return 0


def cmd_converge(args) -> int:
    sizes = args.sizes
    if sizes != sorted(sizes) or len(set(sizes)) != len(sizes):
        raise DomainError(f"sizes must be strictly ascending, got {sizes}")
    p = PotentialParams(a=args.a, b=args.b, ell=args.ell)
    lam = args.lambda_scale if args.lambda_scale is not None else 0.25
    rows = []
    diagnostics = {}
    for size in sizes:
        basis = laguerre.LaguerreBasis(lam, size, p.ell)
        res = laguerre.lag_spectrum(p, basis, args.quad_order)
        diagnostics[f"size={size}"] = _diag_map([res])
        for n, e in enumerate(res.energies):
            rows.append(
                {
                    "method": res.method,
                    "a": p.a,
                    "b": p.b,
                    "ell": p.ell,
                    "size": size,
                    "n": n,
                    "energy": e,
                }
            )
    fields = ("method", "a", "b", "ell", "size", "n", "energy")
    _write_table(args.out, fields, rows, args.format, diagnostics)
    print(f"wrote {len(rows)} levels ({len(sizes)} sizes) to {args.out}")
    return 0


def cmd_fit(args) -> int:
    ells = range(args.ell_max + 1)
    spectra = {}
    for ell in ells:
        try:
            res = _solve_one(args.method, PotentialParams(args.a, args.b, ell), args)
        except UnsupportedRegimeError:
            continue
        if len(res):
            spectra[ell] = res
    fit = fit_spectrum_formula(spectra)
    rows = [
        {
            "n": n,
            "c2": fit.c2[i],
            "c0": fit.c0[i],
            "residual_rms": fit.residual_rms[i],
            "n_ell": fit.n_ell[i],
        }
        for i, n in enumerate(fit.levels)
    ]
    _write_table(args.out, FIT_FIELDS, rows, args.format)
    print(f"wrote {len(rows)} level fits to {args.out}")
    return 0


def cmd_wavefunction(args) -> int:
    p = PotentialParams(a=args.a, b=args.b, ell=args.ell)
    spec = tra.tra_spectrum(p)
    levels = args.levels if args.levels is not None else list(range(len(spec)))
    for level in levels:
        if not 0 <= level < len(spec):
            raise DomainError(
                f"level {level} out of range: spectrum has {len(spec)} states"
            )
    r = np.linspace(args.r_min, args.r_max, args.r_points)
    rows = []
    for level in levels:
        table = tra.tra_wavefunction(p, spec.energies[level], r)
        for ri, pi in zip(table.r, table.psi):
            rows.append(
                {
                    "method": "TRA",
                    "a": p.a,
                    "b": p.b,
                    "ell": p.ell,
                    "level": level,
                    "r": ri,
                    "psi": pi,
                }
            )
    _write_table(args.out, WAVEFUNCTION_FIELDS, rows, args.format, _diag_map([spec]))
    print(f"wrote {len(levels)} wavefunctions to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invsextic",
        description="Bound states of the inverse quartic-sextic radial potential",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--a", type=float, default=2.0, help="sextic core length")
        sp.add_argument("--b", type=float, default=7.0, help="quartic well length")
        sp.add_argument("--out", required=True, help="output file path")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")

    def add_method_opts(sp):
        sp.add_argument("--lambda", dest="lambda_scale", type=float, default=None,
                        help="Laguerre scale parameter (default: auto plateau)")
        sp.add_argument("--auto-lambda", action="store_true",
                        help="pick lambda from the stability plateau")
        sp.add_argument("--size", type=int, default=100, help="Laguerre basis size")
        sp.add_argument("--quad-order", type=int, default=None,
                        help="overlap quadrature order (default: basis size)")
        sp.add_argument("--grid-M", dest="grid_m", type=int, default=1000,
                        help="FD interior grid points")
        sp.add_argument("--stencil-k", type=int, default=8, help="FD scheme half-width")
        sp.add_argument("--max-states", type=int, default=8,
                        help="FD eigenvalue indices to target")

    sp = sub.add_parser("spectrum", help="bound-state energies")
    add_common(sp)
    sp.add_argument("--method", choices=("tra", "laguerre", "fd", "all"), default="tra")
    sp.add_argument("--ell", type=int, default=0)
    sp.add_argument("--ell-max", dest="ell_max", type=int, default=None,
                    help="sweep ell = 0..ell_max instead of a single ell")
    add_method_opts(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("converge", help="Laguerre convergence across basis sizes")
    add_common(sp)
    sp.add_argument("--ell", type=int, default=0)
    sp.add_argument("--lambda", dest="lambda_scale", type=float, default=0.25)
    sp.add_argument("--quad-order", type=int, default=None)
    sp.add_argument("--sizes", type=lambda s: [int(v) for v in s.split(",")],
                    default=[30, 40, 50, 70, 100],
                    help="comma-separated ascending matrix sizes")
    sp.set_defaults(func=cmd_converge)

    sp = sub.add_parser("fit", help="fit E(n, ell) = C2(n) ell^2 - C0(n)")
    add_common(sp)
    sp.add_argument("--method", choices=("tra", "laguerre", "fd"), default="tra")
    sp.add_argument("--ell-max", dest="ell_max", type=int, default=50)
    add_method_opts(sp)
    sp.set_defaults(func=cmd_fit)

    sp = sub.add_parser("wavefunction", help="sampled bound-state wavefunctions")
    add_common(sp)
    sp.add_argument("--ell", type=int, default=0)
    sp.add_argument("--levels", type=lambda s: [int(v) for v in s.split(",")],
                    default=None, help="comma-separated level indices (default: all)")
    sp.add_argument("--r-min", dest="r_min", type=float, default=None,
                    help="grid start (default 0.05 a)")
    sp.add_argument("--r-max", dest="r_max", type=float, default=None,
                    help="grid end (default 20 a)")
    sp.add_argument("--r-points", dest="r_points", type=int, default=800)
    sp.set_defaults(func=cmd_wavefunction)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "r_min", None) is None and args.command == "wavefunction":
        args.r_min = 0.05 * args.a
    if getattr(args, "r_max", None) is None and args.command == "wavefunction":
        args.r_max = 20.0 * args.a
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _SOLVER_ERRORS as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return 3
    except _IoFailure as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
