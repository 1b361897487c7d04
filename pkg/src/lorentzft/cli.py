"""Command-line front end.

    lorentzft transform --n 1 --profile builtin:gauss_oscillatory \
        --char timelike --kmin 0.25 --kmax 1 --kcount 3
    lorentzft validate --suite angular
    lorentzft chi --n 2 --k 1.0 --rmin 0 --rmax 5 --rcount 51

`transform` writes a spectrum CSV (header char,l,re,im,err,converged) to
standard output; `validate` runs a named check suite and reports one line
per check; `chi` samples the radial Hankel weight.  Exit codes: 0 success,
1 failed checks or non-converged points, 2 bad usage.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .kernels import MomentumChar, MomentumMagnitude, chi, chi_small_argument_limit
from .profiles import builtin_profile, profile_from_csv
from .quadrature import QuadConfig
from .transform import spectrum
from .validation import SUITES, run_suite


def _parse_profile(text: str):
    if text.startswith("builtin:"):
        return builtin_profile(text[len("builtin:"):])
    if text.startswith("csv:"):
        return profile_from_csv(text[len("csv:"):])
    raise ValueError(f"profile must be builtin:<name> or csv:<path>, got {text!r}")


def _quad_config(tol: float, epsilon0: float) -> QuadConfig:
    return QuadConfig(abs_tol=tol, rel_tol=tol,
                      epsilon_schedule=tuple(epsilon0 * 2.0 ** (-j) for j in range(6)))


def _momentum_grid(kmin, kmax, kcount, spacing, char):
    if kcount == 1:
        vals = [kmin]
    elif spacing == "log":
        vals = list(np.geomspace(kmin, kmax, kcount))
    else:
        vals = list(np.linspace(kmin, kmax, kcount))
    return [MomentumMagnitude(float(v), char) for v in vals]


def cmd_transform(args) -> int:
    try:
        profile = _parse_profile(args.profile)
        char = MomentumChar(args.char)
        if args.kcount < 1 or args.kmin <= 0 or (args.kcount > 1 and args.kmax <= args.kmin):
            raise ValueError("need kmin > 0 and kmax > kmin (for kcount > 1)")
        grid = _momentum_grid(args.kmin, args.kmax, args.kcount, args.grid, char)
        cfg = _quad_config(args.tol, args.epsilon0)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    table = spectrum(args.n, profile, grid, cfg)
    sys.stdout.write(table.to_csv())
    return 0 if table.all_converged else 1


def cmd_validate(args) -> int:
    try:
        checks = run_suite(args.suite)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    n_fail = 0
    print(f"{'check':44s} {'expected':>24s} {'actual':>24s} {'gap':>12s} pass")
    for c in checks:
        ok = c.passed
        n_fail += 0 if ok else 1
        print(f"{c.name:44s} {_fmt(c.expected):>24s} {_fmt(c.actual):>24s} "
              f"{c.gap:12.3e} {'PASS' if ok else 'FAIL'}")
    print(f"{len(checks) - n_fail}/{len(checks)} checks passed")
    return 0 if n_fail == 0 else 1


def _fmt(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real:.10g}"
    return f"{z.real:.6g}{z.imag:+.6g}j"


def cmd_chi(args) -> int:
    try:
        if args.rcount < 0 or args.rmin < 0 or args.k <= 0:
            raise ValueError("need rmin >= 0, k > 0, rcount >= 0")
        if args.rcount > 1 and args.rmax < args.rmin:
            raise ValueError("need rmax >= rmin")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("r,chi")
    if args.rcount == 0:
        return 0
    rr = np.linspace(args.rmin, args.rmax, args.rcount) if args.rcount > 1 \
        else np.array([args.rmin])
    # tabulates chi_n(k, r); the r = 0 row is the small-argument limit
    vals = np.array([chi_small_argument_limit(args.n, args.k) if r == 0
                     else chi(args.n, args.k, r) for r in rr])
    for r, v in zip(rr, vals):
        print(f"{r:.17g},{v:.17g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lorentzft",
                                description="Fourier transforms of Lorentz-"
                                            "invariant functions")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transform", help="spectrum of a profile over a momentum grid")
    t.add_argument("--n", type=int, required=True, help="spatial dimension (1..10)")
    t.add_argument("--profile", required=True,
                   help="builtin:<name> or csv:<path>; builtins: "
                        "gauss_oscillatory, gauss_decay_timelike, compact_bump, zero")
    t.add_argument("--char", choices=["timelike", "spacelike"], required=True)
    t.add_argument("--kmin", type=float, required=True)
    t.add_argument("--kmax", type=float, default=None)
    t.add_argument("--kcount", type=int, default=1)
    t.add_argument("--grid", choices=["linear", "log"], default="linear")
    t.add_argument("--tol", type=float, default=1e-4,
                   help="absolute and relative tolerance for the per-point "
                        "convergence flag")
    t.add_argument("--epsilon0", type=float, default=0.1,
                   help="largest damping parameter of the schedule")
    t.set_defaults(func=cmd_transform)

    v = sub.add_parser("validate", help="run a validation suite")
    v.add_argument("--suite", required=True,
                   help=f"one of {sorted(SUITES)} or 'all'")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("chi", help="sample the radial Hankel weight chi_n(r, k)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=float, required=True)
    c.add_argument("--rmin", type=float, required=True)
    c.add_argument("--rmax", type=float, default=None)
    c.add_argument("--rcount", type=int, required=True)
    c.set_defaults(func=cmd_chi)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "kmax", None) is None and getattr(args, "kcount", 1) > 1:
        print("error: --kmax required when --kcount > 1", file=sys.stderr)
        return 2
    if getattr(args, "rmax", None) is None and getattr(args, "rcount", 0) > 1:
        print("error: --rmax required when --rcount > 1", file=sys.stderr)
        return 2
    if getattr(args, "kmax", None) is None:
        args.kmax = getattr(args, "kmin", None)
    if getattr(args, "rmax", None) is None:
        args.rmax = getattr(args, "rmin", None)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
