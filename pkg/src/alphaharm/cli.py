"""Command-line interface.

Subcommands: ``eval`` (map values on a polar grid), ``solve`` (boundary-value
solver samples), ``bounds`` (injectivity/convexity constants), ``certify``
(full certification of a two-mode map), ``area`` (closed-form vs quadrature
areas, optional weight sweep), ``verify`` (the cross-module invariant
suites). Inputs are JSON config documents; outputs are CSV or JSON with
17-significant-digit floats. Diagnostics go to stderr only.

Exit codes: 0 success, 1 a certification/verification check failed,
2 configuration error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import area as area_mod
from . import field, poisson, represent, univalence, verify
from .backend import BACKEND
from .errors import AlphaHarmError, ConfigError, ConvergenceError, DomainError
from .field import AlphaHarmonicMap, CoefficientSequence, DiskPoint

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3

MAX_GRID = 4096
MAX_NODES = 1 << 20


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config root must be a JSON object")
    return cfg


def _coeffs_from_config(items, label="coefficients") -> CoefficientSequence:
    if not isinstance(items, list):
        raise ConfigError(f"{label} must be a list of objects")
    seen = set()
    pairs = []
    for entry in items:
        try:
            k = int(entry["k"])
            val = complex(float(entry.get("re", 0.0)), float(entry.get("im", 0.0)))
        except (TypeError, KeyError, ValueError) as exc:
            raise ConfigError(f"bad {label} entry {entry!r}") from exc
        if k in seen:
            raise ConfigError(f"duplicate index k={k} in {label}")
        seen.add(k)
        pairs.append((k, val))
    return CoefficientSequence.from_pairs(pairs)


def _alpha_from_config(cfg: dict) -> float:
    try:
        alpha = float(cfg["alpha"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError("config needs a numeric 'alpha'") from exc
    if alpha <= -1.0:
        raise ConfigError(
            f"alpha={alpha} rejected: admissible maps require alpha > -1 "
            "(at or below -1 every solution with boundary limits vanishes "
            "identically)")
    return alpha


def _parse_grid(spec, cap=MAX_GRID) -> tuple[int, int]:
    if isinstance(spec, str):
        parts = spec.lower().split("x")
        if len(parts) != 2:
            raise ConfigError(f"grid spec {spec!r} must look like '64x128'")
        spec = parts
    try:
        nr, nt = int(spec[0]), int(spec[1])
    except (TypeError, ValueError, IndexError) as exc:
        raise ConfigError(f"bad grid spec {spec!r}") from exc
    if not (1 <= nr <= cap and 1 <= nt <= cap):
        raise ConfigError(f"grid {nr}x{nt} outside [1, {cap}]^2")
    return nr, nt


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _emit(path, text: str) -> None:
    stream, close = _open_out(path)
    try:
        stream.write(text)
    finally:
        if close:
            stream.close()


def _polar_grid(nr, nt, r_max):
    r = (np.arange(nr) + 0.5) * (r_max / nr)
    theta = 2.0 * np.pi * np.arange(nt) / nt
    return r, theta


def cmd_eval(args) -> int:
    cfg = _load_config(args.config)
    alpha = _alpha_from_config(cfg)
    coeffs = _coeffs_from_config(cfg.get("coefficients", []))
    nr, nt = _parse_grid(args.grid or cfg.get("grid", "8x16"))
    r_max = float(cfg.get("r_max", 0.9))
    if not (0.0 < r_max < 1.0):
        raise ConfigError(f"r_max={r_max} must be in (0, 1)")
    method = cfg.get("method", "series")
    if method not in ("series", "layers"):
        raise ConfigError("method must be 'series' or 'layers'")
    m = AlphaHarmonicMap(alpha, coeffs)
    r, theta = _polar_grid(nr, nt, r_max)
    if method == "layers":
        rep = represent.build_rep(m)
        vals = np.array([[represent.eval_rep(rep, DiskPoint(float(ri), float(tj)))
                          for tj in theta] for ri in r])
    else:
        vals = field.eval_u_grid(m, r, theta)
    jac = field.jacobian_grid(m, r, theta)
    lines = ["r,theta,re_u,im_u,jacobian"]
    for i, ri in enumerate(r):
        for j, tj in enumerate(theta):
            v = vals[i, j]
            lines.append(",".join([_fmt(ri), _fmt(tj), _fmt(v.real),
                                   _fmt(v.imag), _fmt(jac[i, j])]))
    _emit(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_solve(args) -> int:
    cfg = _load_config(args.config)
    alpha = _alpha_from_config(cfg)
    modes = _coeffs_from_config(cfg.get("boundary_modes", []), "boundary_modes")
    bc = poisson.BoundaryCurve.from_modes(modes)
    nr, nt = _parse_grid(args.grid or cfg.get("grid", "4x8"))
    r_max = float(cfg.get("r_max", 0.9))
    if not (0.0 < r_max <= poisson.SOLVE_R_MAX):
        raise ConfigError(f"r_max={r_max} outside (0, {poisson.SOLVE_R_MAX}]")
    n_nodes = int(args.nodes or cfg.get("nodes", 2048))
    if not (poisson.MIN_NODES <= n_nodes <= MAX_NODES):
        raise ConfigError(f"nodes={n_nodes} outside "
                          f"[{poisson.MIN_NODES}, {MAX_NODES}]")
    check = bool(cfg.get("check", False))
    series = poisson.map_of_boundary(alpha, bc) if check else None
    r, theta = _polar_grid(nr, nt, r_max)
    header = "r,theta,re_u,im_u" + (",residual" if check else "")
    lines = [header]
    for ri in r:
        for tj in theta:
            pt = DiskPoint(float(ri), float(tj))
            val = poisson.solve_dirichlet(alpha, bc, pt, n_nodes)
            row = [_fmt(ri), _fmt(tj), _fmt(val.real), _fmt(val.imag)]
            if check:
                row.append(_fmt(abs(val - field.eval_u(series, pt))))
            lines.append(",".join(row))
    _emit(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_bounds(args) -> int:
    alpha = args.alpha
    k = args.k
    if not (0.0 < alpha <= 2.0):
        raise ConfigError(f"alpha={alpha} outside (0, 2], where the "
                          "injectivity constant is defined")
    if k < 1:
        raise ConfigError(f"k={k} must be >= 1")
    b = univalence.bounds(alpha, k)
    doc = {"alpha": alpha, "k": k, "N": b.n_bound, "M": b.m_bound,
           "L": b.l_bound}
    _emit(args.out, json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_certify(args) -> int:
    cfg = _load_config(args.config)
    alpha = _alpha_from_config(cfg)
    try:
        k = int(cfg["k"])
        c = float(cfg["c"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError("certify config needs integer 'k' and real 'c'") from exc
    if not (0.0 < alpha <= 2.0):
        raise ConfigError(f"alpha={alpha} outside (0, 2]; the certified "
                          "family needs the injectivity constant")
    if k < 1:
        raise ConfigError(f"k={k} must be >= 1")
    grid = _parse_grid(args.grid or cfg.get("grid", "200x256"))
    report = univalence.rkc_certificate(univalence.SpecialMap(alpha, k, c),
                                        grid=grid)
    doc = {
        "alpha": alpha, "k": k, "c": c,
        "passed": report.passed,
        "jacobian_min": report.jacobian_min,
        "convex": report.convex,
        "boundary_homeomorphic": report.boundary_homeomorphic,
        "circle_injectivity": [[r, flag] for r, flag in report.arg_monotone],
        "grid": list(report.grid_spec),
        "failure": report.failure,
    }
    _emit(args.out, json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_area(args) -> int:
    cfg = _load_config(args.config)
    alpha = _alpha_from_config(cfg)
    coeffs = _coeffs_from_config(cfg.get("coefficients", []))
    if coeffs.coeff(0) != 0:
        raise ConfigError("area formulas need c_0 = 0")
    quad = cfg.get("quad", [128, 256])
    nr, nt = _parse_grid(quad)
    m = AlphaHarmonicMap(alpha, coeffs)
    report = area_mod.area_report(m, nr, nt)
    doc = {
        "alpha": report.alpha,
        "s_u_closed": report.s_u_closed,
        "s_v_closed": report.s_v_closed,
        "s_u_quadrature": report.s_u_quadrature,
        "quad_rel_err": report.quad_rel_err,
        "quad_agrees": report.quad_rel_err <= 1e-6,
        "r_cutoff": report.r_cutoff,
        "hypothesis_ok": report.hypothesis_ok,
        "coeffs_digest": report.coeffs_digest,
    }
    sweep_alphas = cfg.get("sweep_alphas")
    if sweep_alphas is not None:
        if not isinstance(sweep_alphas, list):
            raise ConfigError("sweep_alphas must be a list of numbers")
        try:
            sweep = area_mod.area_sweep(coeffs, [float(a) for a in sweep_alphas])
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc
        doc["sweep"] = [[a, s] for a, s in sweep]
    _emit(args.out, json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = args.suite or None
    try:
        results = verify.run(suites=suites, seed=args.seed, fault=args.fault)
    except KeyError as exc:
        raise ConfigError(str(exc)) from exc
    lines = [res.line() for res in results]
    n_fail = sum(not res.passed for res in results)
    lines.append(f"{len(results) - n_fail}/{len(results)} checks passed "
                 f"(seed {args.seed}, backend {BACKEND})")
    _emit(args.out, "\n".join(lines) + "\n")
    return EXIT_OK if n_fail == 0 else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphaharm",
        description="Weighted-Laplacian disk mappings: evaluate, solve, "
                    "certify, and verify.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="map values on a polar grid (CSV)")
    p_eval.add_argument("--config", required=True)
    p_eval.add_argument("--out", default=None)
    p_eval.add_argument("--grid", default=None, metavar="NRxNT")
    p_eval.set_defaults(func=cmd_eval)

    p_solve = sub.add_parser("solve", help="boundary-value solver samples (CSV)")
    p_solve.add_argument("--config", required=True)
    p_solve.add_argument("--out", default=None)
    p_solve.add_argument("--grid", default=None, metavar="NRxNT")
    p_solve.add_argument("--nodes", type=int, default=None)
    p_solve.set_defaults(func=cmd_solve)

    p_bounds = sub.add_parser("bounds", help="injectivity/convexity constants (JSON)")
    p_bounds.add_argument("--alpha", type=float, required=True)
    p_bounds.add_argument("--k", type=int, required=True)
    p_bounds.add_argument("--out", default=None)
    p_bounds.set_defaults(func=cmd_bounds)

    p_cert = sub.add_parser("certify", help="certify a two-mode map (JSON)")
    p_cert.add_argument("--config", required=True)
    p_cert.add_argument("--out", default=None)
    p_cert.add_argument("--grid", default=None, metavar="NRxNT")
    p_cert.set_defaults(func=cmd_certify)

    p_area = sub.add_parser("area", help="areas and optional weight sweep (JSON)")
    p_area.add_argument("--config", required=True)
    p_area.add_argument("--out", default=None)
    p_area.set_defaults(func=cmd_area)

    p_verify = sub.add_parser("verify", help="run the invariant suites")
    p_verify.add_argument("--suite", action="append", default=None,
                          help="restrict to a named suite (repeatable)")
    p_verify.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p_verify.add_argument("--out", default=None)
    p_verify.add_argument("--fault", default=None,
                          help="inject a named fault (self-test aid)")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ConvergenceError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except AlphaHarmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OverflowError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
