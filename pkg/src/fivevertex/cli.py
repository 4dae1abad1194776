"""Command-line front end.

Subcommands mirror the library surface: ``groth eval``, ``vertex
rll-check|ybe-check|commutation-check``, ``scalar check``, ``wavefunction
eval``, ``identity cauchy|orthogonality|sum``, ``tasep
bethe|green|oracle|relax`` and ``verify-all``.  Results are printed as one
JSON object on stdout (``tasep relax`` emits its time series as CSV, per its
interface), with fields command/inputs/result/provenance; ``--timing`` adds
elapsed_ms, which is omitted by default so that identical seeds give
byte-identical output.

Exit codes: 0 success, 2 identity-check failure, 1 usage error.

Exact rationals serialize as "p/q" strings, complex numbers as [re, im]
pairs.  BETHE_GROTH_THREADS caps internal parallelism.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction
from math import comb
from random import Random

import numpy as np

from . import acceptance
from .identities import (cauchy_lhs, cauchy_rhs, grothendieck_sum_check, orthogonality_check)
from .partitions import ParticleConfiguration, Partition, enumerate_box
from .sampling import distinct_square_fractions, rand_fraction
from .scalarprod import (IntermediateSpec, domain_wall_value, intermediate_scalar_det,
                         norm_det, recursion_check, scalar_product_det)
from .sector import ModelParameters, commutation_checks, transfer_matrix
from .symfunc import dual_grothendieck_eval, grothendieck_eval, schur_eval
from .tasep import (GreenQuery, bethe_solve, current_terms, density_terms,
                    expectation_via_form_factors, green_function, master_oracle)
from .vertex import rll_check, rtilde_check, ybe_check
from .wavefunc import dual_wavefunction_det, wavefunction_det


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # admit negative rationals like -1/2, and lists like -1/2,1/3, as values
        token = r"(\d+(/\d+)?|\d*\.\d+)"
        self._negative_number_matcher = re.compile(rf"^-{token}(,-?{token})*$")

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, (np.floating, float)):
        return float(x)
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, Partition):
        return list(x.parts)
    if isinstance(x, ParticleConfiguration):
        return list(x.positions)
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _parse_fraction_list(text: str):
    return [Fraction(part) for part in text.split(",") if part]


def _parse_int_list(text: str):
    return [int(part) for part in text.split(",") if part]


def _emit(command, inputs, result, provenance, t0, timing, extra=None):
    payload = {"command": command, "inputs": _jsonable(inputs), "result": _jsonable(result),
               "provenance": provenance}
    if extra:
        payload.update(_jsonable(extra))
    if timing:
        payload["elapsed_ms"] = int((time.time() - t0) * 1000)
    print(json.dumps(payload))


def _build_parser() -> _Parser:
    parser = _Parser(prog="fivevertex",
                     description="Five-vertex model / Grothendieck / TASEP engine")
    parser.add_argument("--timing", action="store_true", help="include elapsed_ms in output")
    sub = parser.add_subparsers(dest="command", required=True)

    groth = sub.add_parser("groth", help="symmetric-function evaluation").add_subparsers(
        dest="action", required=True)
    g_eval = groth.add_parser("eval")
    g_eval.add_argument("--lam", type=_parse_int_list, required=True)
    g_eval.add_argument("--z", type=_parse_fraction_list, required=True)
    g_eval.add_argument("--beta", type=_parse_fraction, default=Fraction(0))
    g_eval.add_argument("--kind", choices=["grothendieck", "dual", "schur"],
                        default="grothendieck")

    vertex = sub.add_parser("vertex", help="integrability checks").add_subparsers(
        dest="action", required=True)
    for name in ("rll-check", "ybe-check"):
        v_cmd = vertex.add_parser(name)
        v_cmd.add_argument("--seed", type=int, default=1)
        v_cmd.add_argument("--draws", type=int, default=10)
    v_comm = vertex.add_parser("commutation-check")
    v_comm.add_argument("--M", type=int, default=4)
    v_comm.add_argument("--seed", type=int, default=1)

    scalar = sub.add_parser("scalar", help="scalar-product invariants").add_subparsers(
        dest="action", required=True)
    s_check = scalar.add_parser("check")
    s_check.add_argument("--seed", type=int, default=1)
    s_check.add_argument("--M", type=int, default=4)
    s_check.add_argument("--N", type=int, default=2)

    wave = sub.add_parser("wavefunction", help="overlap evaluation").add_subparsers(
        dest="action", required=True)
    w_eval = wave.add_parser("eval")
    w_eval.add_argument("--config", type=_parse_int_list, required=True)
    w_eval.add_argument("--params", type=_parse_fraction_list, required=True)
    w_eval.add_argument("--alpha", type=_parse_fraction, required=True)
    w_eval.add_argument("--M", type=int, required=True)
    w_eval.add_argument("--dual", action="store_true")

    ident = sub.add_parser("identity", help="identity checks").add_subparsers(
        dest="action", required=True)
    i_cauchy = ident.add_parser("cauchy")
    i_cauchy.add_argument("--M", type=int, required=True)
    i_cauchy.add_argument("--N", type=int, required=True)
    i_cauchy.add_argument("--beta", type=_parse_fraction, default=None)
    i_cauchy.add_argument("--seed", type=int, default=1)
    i_orth = ident.add_parser("orthogonality")
    i_orth.add_argument("--M", type=int, required=True)
    i_orth.add_argument("--N", type=int, required=True)
    i_orth.add_argument("--beta", type=float, default=-1.0)
    i_orth.add_argument("--seed", type=int, default=1)
    i_sum = ident.add_parser("sum")
    i_sum.add_argument("--M", type=int, required=True)
    i_sum.add_argument("--N", type=int, required=True)
    i_sum.add_argument("--beta", type=_parse_fraction, default=None)
    i_sum.add_argument("--seed", type=int, default=1)

    tasep = sub.add_parser("tasep", help="TASEP dynamics").add_subparsers(
        dest="action", required=True)
    t_bethe = tasep.add_parser("bethe")
    t_bethe.add_argument("--M", type=int, required=True)
    t_bethe.add_argument("--N", type=int, required=True)
    t_bethe.add_argument("--beta", type=float, default=-1.0)
    t_green = tasep.add_parser("green")
    t_green.add_argument("--M", type=int, required=True)
    t_green.add_argument("--N", type=int, required=True)
    t_green.add_argument("--from", dest="initial", type=_parse_int_list, required=True)
    t_green.add_argument("--to", dest="final", type=_parse_int_list, required=True)
    t_green.add_argument("--t", type=float, required=True)
    t_oracle = tasep.add_parser("oracle")
    t_oracle.add_argument("--M", type=int, required=True)
    t_oracle.add_argument("--N", type=int, required=True)
    t_oracle.add_argument("--from", dest="initial", type=_parse_int_list, required=True)
    t_oracle.add_argument("--t", type=float, required=True)
    t_relax = tasep.add_parser("relax")
    t_relax.add_argument("--M", type=int, required=True)
    t_relax.add_argument("--N", type=int, required=True)
    t_relax.add_argument("--from", dest="initial", type=_parse_int_list, required=True)
    t_relax.add_argument("--observable", required=True,
                         help="density:<site> or current:<site>")
    t_relax.add_argument("--t-grid", dest="t_grid", default="0:10:0.5",
                         help="start:stop:step")

    verify = sub.add_parser("verify-all", help="run the acceptance suite")
    verify.add_argument("--level", default="desk", choices=["desk"])
    return parser


def _cmd_groth(args, t0, timing) -> int:
    fn = {"grothendieck": lambda: grothendieck_eval(args.lam, args.z, args.beta),
          "dual": lambda: dual_grothendieck_eval(args.lam, args.z, args.beta),
          "schur": lambda: schur_eval(args.lam, args.z)}[args.kind]
    lam = Partition(tuple(args.lam), (max(args.lam or [0]), len(args.lam)))
    _emit("groth eval",
          {"lam": args.lam, "z": args.z, "beta": args.beta, "kind": args.kind},
          fn(), "determinant", t0, timing, extra={"partition": lam.text()})
    return 0


def _cmd_vertex(args, t0, timing) -> int:
    rng = Random(args.seed)
    if args.action in ("rll-check", "ybe-check"):
        passed = True
        for _ in range(args.draws):
            u, v, w = distinct_square_fractions(rng, 3)
            alpha = rand_fraction(rng)
            ok = rll_check(u, v, alpha) if args.action == "rll-check" else ybe_check(u, v, w)
            passed = passed and ok and rtilde_check(u, v, w, alpha)
        _emit(f"vertex {args.action}", {"seed": args.seed, "draws": args.draws},
              {"passed": passed}, "determinant", t0, timing)
        return 0 if passed else 2
    u, v = distinct_square_fractions(rng, 2)
    alpha = rand_fraction(rng)
    params = ModelParameters(alpha=alpha, M=args.M)
    detail = {}
    passed = True
    for n in range(args.M + 1):
        checks = commutation_checks(u, v, params, n)
        t_u, t_v = transfer_matrix(u, params, n), transfer_matrix(v, params, n)
        checks["tau"] = t_u * t_v == t_v * t_u
        detail[f"sector {n}"] = checks
        passed = passed and all(checks.values())
    _emit("vertex commutation-check", {"M": args.M, "seed": args.seed},
          {"passed": passed, "relations": detail}, "oracle", t0, timing)
    return 0 if passed else 2


def _cmd_scalar(args, t0, timing) -> int:
    rng = Random(args.seed)
    M, N = args.M, args.N
    if not 1 <= N <= M - 1:
        print("error: need 1 <= N <= M-1", file=sys.stderr)
        return 1
    alpha = rand_fraction(rng) ** 2
    if alpha == 0:
        alpha = Fraction(9, 4)
    u = distinct_square_fractions(rng, N)
    v = distinct_square_fractions(rng, N)
    w = tuple(distinct_square_fractions(rng, M))
    checks = {}
    sp = scalar_product_det(u, v, alpha, M)
    perm = list(u)
    perm[0], perm[-1] = perm[-1], perm[0]
    checks["u-symmetry"] = scalar_product_det(perm, v, alpha, M) == sp
    perm_v = list(reversed(v))
    checks["v-symmetry"] = scalar_product_det(u, perm_v, alpha, M) == sp
    spec = IntermediateSpec(N, tuple(u), tuple(v), w, alpha, M, N)
    w_perm = list(w)
    w_perm[0], w_perm[1] = w_perm[1], w_perm[0]
    spec_p = IntermediateSpec(N, tuple(u), tuple(v), tuple(w_perm), alpha, M, N)
    checks["w-symmetry"] = intermediate_scalar_det(spec) == intermediate_scalar_det(spec_p)
    checks["recursion"] = recursion_check(spec)
    spec0 = IntermediateSpec(0, (), tuple(v), w, alpha, M, N)
    checks["domain-wall"] = intermediate_scalar_det(spec0) == domain_wall_value(spec0)
    hom = IntermediateSpec(N, tuple(u), tuple(v), (Fraction(1),) * M, alpha, M, N)
    checks["n=N homogeneous"] = intermediate_scalar_det(hom) == sp
    checks["norm-sylvester"] = norm_det(u, alpha, M, "det") == norm_det(u, alpha, M, "sylvester")
    passed = all(checks.values())
    _emit("scalar check", {"seed": args.seed, "M": M, "N": N},
          {"passed": passed, "checks": checks}, "determinant", t0, timing)
    return 0 if passed else 2


def _cmd_wavefunction(args, t0, timing) -> int:
    fn = dual_wavefunction_det if args.dual else wavefunction_det
    value = fn(tuple(args.config), args.params, args.alpha, args.M)
    _emit("wavefunction eval",
          {"config": args.config, "params": args.params, "alpha": args.alpha,
           "M": args.M, "dual": args.dual},
          value, "determinant", t0, timing)
    return 0


def _cmd_identity(args, t0, timing) -> int:
    rng = Random(args.seed)
    M, N = args.M, args.N
    if args.action == "cauchy":
        z = distinct_square_fractions(rng, N)
        y = distinct_square_fractions(rng, N)
        beta = rand_fraction(rng) if args.beta is None else args.beta
        equal = cauchy_lhs(M, N, z, y, beta) == cauchy_rhs(M, N, z, y, beta)
        _emit("identity cauchy", {"M": M, "N": N, "seed": args.seed,
                                  "z": z, "y": y, "beta": beta},
              {"equal": equal}, "determinant", t0, timing)
        return 0 if equal else 2
    if args.action == "orthogonality":
        sols = bethe_solve(M, N, beta=args.beta)
        box = list(enumerate_box(M - N, N))
        worst = 0.0
        for lam in box:
            for mu in box:
                val = orthogonality_check(M, N, args.beta, lam, mu, sols)
                want = 1.0 if lam.parts == mu.parts else 0.0
                worst = max(worst, abs(val - want))
        passed = worst <= 1e-8
        _emit("identity orthogonality",
              {"M": M, "N": N, "beta": args.beta, "seed": args.seed},
              {"passed": passed, "max_deviation": worst, "solution_sets": len(sols)},
              "determinant", t0, timing)
        return 0 if passed else 2
    z = distinct_square_fractions(rng, N)
    beta = args.beta
    if beta is not None:
        if beta == 0:
            print("error: the summation determinants need beta != 0", file=sys.stderr)
            return 1
        while any(1 + beta * zj == 0 or 1 + beta / zj == 0 for zj in z):
            z = distinct_square_fractions(rng, N)
    else:
        beta = rand_fraction(rng)
        while any(1 + beta * zj == 0 or 1 + beta / zj == 0 for zj in z) or beta == 0:
            beta = rand_fraction(rng)
    primal = grothendieck_sum_check(M, N, z, beta)
    dual = grothendieck_sum_check(M, N, z, beta, dual=True)
    _emit("identity sum", {"M": M, "N": N, "beta": beta, "seed": args.seed, "z": z},
          {"primal": primal, "dual": dual}, "determinant", t0, timing)
    return 0 if primal and dual else 2


def _cmd_tasep(args, t0, timing) -> int:
    if args.action == "bethe":
        sols = bethe_solve(args.M, args.N, beta=args.beta)
        payload = [{"roots": list(s.roots), "Y": s.Y, "energy": s.energy,
                    "residuals": list(s.residuals), "choice_id": s.choice_id,
                    "stationary": s.stationary} for s in sols]
        _emit("tasep bethe", {"M": args.M, "N": args.N, "beta": args.beta},
              {"solutions": payload, "count": len(sols), "expected": comb(args.M, args.N)},
              "determinant", t0, timing)
        return 0
    if args.action == "green":
        query = GreenQuery(ParticleConfiguration(tuple(args.initial), args.M),
                           ParticleConfiguration(tuple(args.final), args.M), args.t)
        value = green_function(query)
        _emit("tasep green", {"M": args.M, "N": args.N, "from": args.initial,
                              "to": args.final, "t": args.t},
              value, "determinant", t0, timing)
        return 0
    if args.action == "oracle":
        state = master_oracle(ParticleConfiguration(tuple(args.initial), args.M), args.t)
        _emit("tasep oracle", {"M": args.M, "N": args.N, "from": args.initial, "t": args.t},
              {"basis": [list(c) for c in state.basis], "amplitudes": state.amplitudes},
              "oracle", t0, timing)
        return 0
    # relax: CSV time series
    kind, _, site_text = args.observable.partition(":")
    site = int(site_text) if site_text else 1
    if kind == "density":
        terms = density_terms(site)
    elif kind == "current":
        terms = current_terms(site)
    else:
        print(f"error: unknown observable {args.observable!r}", file=sys.stderr)
        return 1
    try:
        start_s, stop_s, step_s = args.t_grid.split(":")
        start, stop, step = float(start_s), float(stop_s), float(step_s)
    except ValueError:
        print(f"error: bad t-grid {args.t_grid!r}, expected start:stop:step", file=sys.stderr)
        return 1
    x0 = ParticleConfiguration(tuple(args.initial), args.M)
    sols = bethe_solve(args.M, args.N)
    print("t,value")
    k = 0
    while (t := start + k * step) <= stop + 1e-12:
        print(f"{t},{expectation_via_form_factors(terms, x0, t, sols)}")
        k += 1
    return 0


def _cmd_verify_all(args, t0, timing) -> int:
    results = acceptance.run_all(level=args.level)
    passed = all(r["passed"] for r in results)
    _emit("verify-all", {"level": args.level},
          {"passed": passed, "criteria": results}, "determinant", t0, timing)
    return 0 if passed else 2


def run(argv) -> int:
    """Entry point; returns the process exit code."""
    t0 = time.time()
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    timing = args.timing
    try:
        if args.command == "groth":
            return _cmd_groth(args, t0, timing)
        if args.command == "vertex":
            return _cmd_vertex(args, t0, timing)
        if args.command == "scalar":
            return _cmd_scalar(args, t0, timing)
        if args.command == "wavefunction":
            return _cmd_wavefunction(args, t0, timing)
        if args.command == "identity":
            return _cmd_identity(args, t0, timing)
        if args.command == "tasep":
            return _cmd_tasep(args, t0, timing)
        if args.command == "verify-all":
            return _cmd_verify_all(args, t0, timing)
    except (ValueError, ZeroDivisionError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
