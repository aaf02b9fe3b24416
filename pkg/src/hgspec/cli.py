"""Command-line surface.

Subcommands: ``radius``, ``lambda2``, ``bounds``, ``verify``, ``gen``,
``sweep``.  JSON reports go to standard output; exit status is 0 on
success, 1 when a verification or computation fails, 2 on usage or
parse errors.  The default seed comes from ``--seed``, then the
``HGSPEC_SEED`` environment variable, then 0; identical inputs, flags,
and seed produce byte-identical output (timing is only emitted behind
``--timings``).
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import bounds as bounds_mod
from .constructions import (lambda2_lower_certificate, mu_lower_certificate,
                            multi_center_vector, verify_radial_inequality)
from .eigensolver import SolverConfig, lambda2_estimate, spectral_radius
from .errors import Error, ParseError
from .generators import complete_uniform, hypertree_ball, random_regular_linear
from .hypergraph import (Hypergraph, degree_sequence, is_acyclic,
                         min_eccentricity_vertex, regular_degree)
from .io import emit_hypergraph, parse_hypergraph
from .reports import (SpectralReport, certificate_entry, dumps_json,
                      emit_sweep_csv, text_sha256)

SEED_ENV_VAR = "HGSPEC_SEED"


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise Error(f"{SEED_ENV_VAR}={env!r} is not an integer")
    return 0


def _solver_config(args) -> SolverConfig:
    return SolverConfig(
        tol=args.tol,
        max_iters=args.max_iters,
        restarts=args.restarts,
        seed=_resolve_seed(args),
        shift=args.shift,
        complex_search=getattr(args, "complex_search", False),
    )


def _load_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise Error(f"cannot read {path}: {exc}")
    h = parse_hypergraph(text)
    descriptor = {"kind": "file", "path": path, "sha256": text_sha256(text)}
    return h, descriptor


def _base_report(h: Hypergraph, descriptor: dict) -> SpectralReport:
    k = regular_degree(h)
    return SpectralReport(
        input=descriptor,
        t=h.t,
        n=h.n,
        m=h.m,
        regular_k=k,
        threshold=bounds_mod.threshold(h.t, k) if k is not None else None,
    )


def _solver_stanza(cfg: SolverConfig, result) -> dict:
    return {
        "tol": cfg.tol,
        "max_iters": cfg.max_iters,
        "restarts": cfg.restarts,
        "seed": cfg.seed,
        "shift": cfg.shift,
        "iterations": result.iterations,
        "residual": result.residual,
    }


def cmd_radius(args, out) -> int:
    h, descriptor = _load_file(args.file)
    cfg = _solver_config(args)
    start = time.perf_counter()
    result = spectral_radius(h, cfg)
    elapsed = time.perf_counter() - start
    report = _base_report(h, descriptor)
    report.rho = result.value
    report.solver = _solver_stanza(cfg, result)
    if args.timings:
        report.wall_time_seconds = elapsed
    out.write(report.to_json())
    return 0


def cmd_lambda2(args, out) -> int:
    h, descriptor = _load_file(args.file)
    cfg = _solver_config(args)
    start = time.perf_counter()
    result = lambda2_estimate(h, cfg)
    elapsed = time.perf_counter() - start
    report = _base_report(h, descriptor)
    report.lambda2_estimate = result.value
    report.solver = _solver_stanza(cfg, result)
    if args.timings:
        report.wall_time_seconds = elapsed
    out.write(report.to_json())
    return 0


def cmd_bounds(args, out) -> int:
    t, k = args.t, args.k
    thr = bounds_mod.threshold(t, k)
    alt = bounds_mod.friedman_alternate(t, k)
    rel = abs(thr - alt) / thr if thr else 0.0
    payload = {
        "t": t,
        "k": k,
        "threshold": thr,
        "friedman_alternate": alt,
        "relative_difference": rel,
    }
    if k >= 2:
        ok, first = bounds_mod.verify_g_monotone(t, k, args.n_max)
        payload["g_monotone"] = {"n_max": args.n_max, "ok": ok,
                                 "first_violation": first}
    else:
        payload["g_monotone"] = None
    out.write(dumps_json(payload))
    return 0


def _check_radial(h, args) -> dict:
    origin = args.origin if args.origin is not None else \
        min_eccentricity_vertex(h)
    res = verify_radial_inequality(h, origin)
    return {
        "check": "radial",
        "passed": res.passed,
        "origin": origin,
        "min_slack": res.min_slack,
        "worst_vertex": res.worst_vertex,
    }


def _check_g_monotone(h, args) -> dict:
    k = regular_degree(h)
    if k is None:
        return {"check": "g-monotone", "passed": False,
                "reason": "input is not regular"}
    if k == 1:
        return {"check": "g-monotone", "passed": True,
                "reason": "k = 1: g undefined, bound trivial"}
    ok, first = bounds_mod.verify_g_monotone(h.t, k, args.n_max)
    return {"check": "g-monotone", "passed": ok, "t": h.t, "k": k,
            "n_max": args.n_max, "first_violation": first}


def _check_acyclic_bound(h, args, cfg) -> dict:
    if not is_acyclic(h):
        return {"check": "acyclic-bound", "passed": False,
                "reason": "input is not acyclic"}
    max_deg = max(degree_sequence(h))
    cap = bounds_mod.threshold(h.t, max_deg)
    result = spectral_radius(h, cfg)
    passed = result.value <= cap + 1e-8
    return {"check": "acyclic-bound", "passed": bool(passed),
            "rho": result.value, "max_degree": max_deg, "bound": cap,
            "gap": cap - result.value}


def _check_alon_boppana(h, args, cfg) -> dict:
    cert = lambda2_lower_certificate(h, k=args.k)
    estimate = lambda2_estimate(h, cfg)
    floor = cert.metadata["analytic_floor"]
    floor_ok = cert.quotient >= floor - 1e-9
    dominated = estimate.value >= cert.quotient - 1e-6
    return {
        "check": "alon-boppana",
        "passed": bool(floor_ok and dominated),
        "certificate": certificate_entry(cert),
        "lambda2_estimate": estimate.value,
        "threshold": cert.metadata["threshold"],
    }


def _check_mu(h, args, cfg) -> dict:
    cert = mu_lower_certificate(h, args.j, k=args.k)
    rho = spectral_radius(h, cfg)
    chain_ok = cert.quotient <= rho.value + 1e-8
    return {
        "check": "mu",
        "passed": bool(chain_ok),
        "j": args.j,
        "certificate": certificate_entry(cert),
        "rho": rho.value,
    }


def cmd_verify(args, out) -> int:
    if args.check == "mu" and args.j is None:
        print("hgspec: --check mu requires --j", file=sys.stderr)
        return 2
    h, descriptor = _load_file(args.file)
    cfg = _solver_config(args)
    if args.check == "radial":
        payload = _check_radial(h, args)
    elif args.check == "g-monotone":
        payload = _check_g_monotone(h, args)
    elif args.check == "acyclic-bound":
        payload = _check_acyclic_bound(h, args, cfg)
    elif args.check == "alon-boppana":
        payload = _check_alon_boppana(h, args, cfg)
    else:
        payload = _check_mu(h, args, cfg)
    payload["input"] = descriptor
    out.write(dumps_json(payload))
    return 0 if payload["passed"] else 1


def cmd_gen(args, out) -> int:
    seed = _resolve_seed(args)
    if args.family == "hypertree":
        h = hypertree_ball(args.t, args.k, args.radius)
        params = {"family": "hypertree", "t": args.t, "k": args.k,
                  "radius": args.radius}
    elif args.family == "complete":
        h = complete_uniform(args.n, args.t)
        params = {"family": "complete", "t": args.t, "n": args.n}
    else:
        h = random_regular_linear(args.t, args.k, args.n, seed,
                                  args.max_attempts)
        params = {"family": "random-regular", "t": args.t, "k": args.k,
                  "n": args.n, "seed": seed}
    text = emit_hypergraph(h)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        params.update({"n": h.n, "m": h.m, "path": args.output,
                       "sha256": text_sha256(text)})
        out.write(dumps_json(params))
    else:
        out.write(text)
    return 0


def _parse_range(spec: str) -> list[int]:
    """'A:B' inclusive unit steps; 'A:B:S' adds a stride; 'A:B:*S' doubles."""
    parts = spec.split(":")
    if len(parts) == 2:
        lo, hi = int(parts[0]), int(parts[1])
        return list(range(lo, hi + 1))
    if len(parts) == 3:
        lo, hi = int(parts[0]), int(parts[1])
        if parts[2].startswith("*"):
            factor = int(parts[2][1:])
            vals = []
            cur = lo
            while cur <= hi:
                vals.append(cur)
                cur *= factor
            return vals
        return list(range(lo, hi + 1, int(parts[2])))
    raise Error(f"bad range {spec!r}; expected A:B, A:B:S, or A:B:*S")


def _sweep_row(family, t, k, param, h, cfg, timings) -> dict:
    start = time.perf_counter()
    rho = spectral_radius(h, cfg).value
    thr = bounds_mod.threshold(t, k) if k is not None else None
    try:
        cert = multi_center_vector(h, k=k).quotient
    except Error:
        cert = None
    elapsed = time.perf_counter() - start
    return {
        "family": family,
        "t": t,
        "k": k if k is not None else "",
        "param": param,
        "n": h.n,
        "m": h.m,
        "rho": rho,
        "threshold": thr,
        "gap": (thr - rho) if thr is not None else None,
        "lambda2_cert": cert,
        "seconds": elapsed if timings else 0,
    }


def cmd_sweep(args, out) -> int:
    cfg = _solver_config(args)
    rows = []
    if args.family == "hypertree":
        for radius in _parse_range(args.radii):
            h = hypertree_ball(args.t, args.k, radius)
            rows.append(_sweep_row("hypertree", args.t, args.k, radius, h,
                                   cfg, args.timings))
    elif args.family == "complete":
        for n in _parse_range(args.ns):
            h = complete_uniform(n, args.t)
            rows.append(_sweep_row("complete", args.t, regular_degree(h), n,
                                   h, cfg, args.timings))
    else:
        seed = _resolve_seed(args)
        for n in _parse_range(args.ns):
            h = random_regular_linear(args.t, args.k, n, seed,
                                      args.max_attempts)
            rows.append(_sweep_row("random-regular", args.t, args.k, n, h,
                                   cfg, args.timings))
    out.write(emit_sweep_csv(rows))
    return 0


def _add_solver_flags(parser, restarts_default=32):
    parser.add_argument("--tol", type=float, default=1e-10,
                        help="residual tolerance (default 1e-10)")
    parser.add_argument("--max-iters", type=int, default=100_000)
    parser.add_argument("--restarts", type=int, default=restarts_default)
    parser.add_argument("--seed", type=int, default=None,
                        help=f"RNG seed (default ${SEED_ENV_VAR} or 0)")
    parser.add_argument("--shift", type=float, default=1.0)
    parser.add_argument("--timings", action="store_true",
                        help="include wall-clock timing in the output "
                             "(breaks byte-for-byte determinism)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgspec",
        description="Spectral radii, second eigenvalues, and Alon-Boppana "
                    "certificates of uniform hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_radius = sub.add_parser("radius", help="largest adjacency eigenvalue")
    p_radius.add_argument("file")
    _add_solver_flags(p_radius)
    p_radius.set_defaults(func=cmd_radius)

    p_l2 = sub.add_parser("lambda2", help="shifted spectral norm estimate")
    p_l2.add_argument("file")
    _add_solver_flags(p_l2)
    p_l2.add_argument("--complex-search", action="store_true",
                      help="ascend over complex vectors (off by default)")
    p_l2.set_defaults(func=cmd_lambda2)

    p_bounds = sub.add_parser("bounds", help="closed-form threshold values")
    p_bounds.add_argument("--t", type=int, required=True)
    p_bounds.add_argument("--k", type=int, required=True)
    p_bounds.add_argument("--n-max", type=int, default=200)
    p_bounds.set_defaults(func=cmd_bounds)

    p_verify = sub.add_parser("verify", help="check a paper inequality")
    p_verify.add_argument("file")
    p_verify.add_argument("--check", required=True,
                          choices=["radial", "g-monotone", "acyclic-bound",
                                   "alon-boppana", "mu"])
    p_verify.add_argument("--j", type=int, default=None,
                          help="family size for --check mu")
    p_verify.add_argument("--origin", type=int, default=None,
                          help="reference vertex (default: a center)")
    p_verify.add_argument("--k", type=int, default=None,
                          help="override the inferred degree")
    p_verify.add_argument("--n-max", type=int, default=200)
    _add_solver_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="generate an instance")
    gen_sub = p_gen.add_subparsers(dest="family", required=True)
    g_tree = gen_sub.add_parser("hypertree")
    g_tree.add_argument("--t", type=int, required=True)
    g_tree.add_argument("--k", type=int, required=True)
    g_tree.add_argument("--radius", type=int, required=True)
    g_comp = gen_sub.add_parser("complete")
    g_comp.add_argument("--t", type=int, required=True)
    g_comp.add_argument("--n", type=int, required=True)
    g_rand = gen_sub.add_parser("random-regular")
    g_rand.add_argument("--t", type=int, required=True)
    g_rand.add_argument("--k", type=int, required=True)
    g_rand.add_argument("--n", type=int, required=True)
    g_rand.add_argument("--max-attempts", type=int, default=10_000)
    for sp in (g_tree, g_comp, g_rand):
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("-o", "--output", default=None)
        sp.set_defaults(func=cmd_gen)

    p_sweep = sub.add_parser("sweep", help="CSV sweep over a family")
    sweep_sub = p_sweep.add_subparsers(dest="family", required=True)
    s_tree = sweep_sub.add_parser("hypertree")
    s_tree.add_argument("--t", type=int, required=True)
    s_tree.add_argument("--k", type=int, required=True)
    s_tree.add_argument("--radii", required=True, help="range A:B")
    s_comp = sweep_sub.add_parser("complete")
    s_comp.add_argument("--t", type=int, required=True)
    s_comp.add_argument("--ns", required=True, help="range A:B[:S|:*S]")
    s_rand = sweep_sub.add_parser("random-regular")
    s_rand.add_argument("--t", type=int, required=True)
    s_rand.add_argument("--k", type=int, required=True)
    s_rand.add_argument("--ns", required=True, help="range A:B[:S|:*S]")
    s_rand.add_argument("--max-attempts", type=int, default=10_000)
    for sp in (s_tree, s_comp, s_rand):
        _add_solver_flags(sp)
        sp.set_defaults(func=cmd_sweep)

    return parser


def run_command(argv, out=None) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"hgspec: parse error: {exc}", file=sys.stderr)
        return 2
    except Error as exc:
        print(f"hgspec: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"hgspec: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
