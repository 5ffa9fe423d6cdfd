"""Command-line front end.

Exit codes: 0 = pass, 1 = verification failure (a scientific assertion did
not hold), 2 = usage or parse error.
"""
from __future__ import annotations

import argparse
import math
import sys

from . import report
from .asymptotics import check_nikiforov, eval_lag_expansion, expansion_input_for
from .degsq import verify_ak_counterexample
from .hypergraph import clique, colex_segment, from_text, lex_segment, to_text
from .search import ff_verify, resolve_threads
from .solver import SolverConfig, maximize_lagrangian, motzkin_straus_exact


def _solver_config(args) -> SolverConfig:
    return SolverConfig(starts=args.starts, max_iters=args.max_iters,
                        tol=args.tol, seed=args.seed)


def _add_solver_flags(p):
    p.add_argument("--starts", type=int, default=64)
    p.add_argument("--max-iters", type=int, default=100_000)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=0,
                   help="0 = auto (or LAGLAB_THREADS)")
    p.add_argument("--output", default="-", help="output path, - for stdout")


def _emit(args, text: str) -> None:
    if getattr(args, "output", "-") in ("-", ""):
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="laglab")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("colex", help="print the colex segment with m edges")
    p.add_argument("m", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("lex", help="print the lex segment with m edges on [t]")
    p.add_argument("m", type=int)
    p.add_argument("t", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("clique", help="print the complete r-graph on [t]")
    p.add_argument("t", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("lagrangian", help="maximize the Lagrangian of an edge list")
    p.add_argument("input", help="edge-list file, - for stdin")
    _add_solver_flags(p)

    p = sub.add_parser("verify", help="run a verification suite")
    vsub = p.add_subparsers(dest="check", required=True)

    v = vsub.add_parser("ff", help="colex-is-best over left-compressed families")
    v.add_argument("--r", type=int, default=3)
    v.add_argument("--m-max", type=int, default=20)
    v.add_argument("--t", type=int, default=6)
    v.add_argument("--mode", default="left_compressed",
                   choices=["left_compressed", "all_iso"])
    _add_solver_flags(v)

    v = vsub.add_parser("ak", help="Ahlswede-Katona counterexample (211 vs 209)")
    v.add_argument("--t-min", type=int, default=6)
    v.add_argument("--t-max", type=int, default=7,
                   help="scan stops at the counterexample's own vertex count; "
                        "for t >= 8 the lex graph exceeds the 209 budget")
    v.add_argument("--output", default="-")

    v = vsub.add_parser("nikiforov", help="real-binomial-root upper bound")
    v.add_argument("--r", type=int, default=3)
    v.add_argument("--m-max", type=int, default=20)
    _add_solver_flags(v)

    v = vsub.add_parser("expansion", help="four-term Lagrangian expansion check")
    v.add_argument("--t", type=int, default=30)
    v.add_argument("--a-max", type=int, default=5)
    v.add_argument("--constant", type=float, default=50.0,
                   help="fitted constant multiplying the error scale")
    _add_solver_flags(v)

    return parser


def _cmd_segment(args) -> int:
    if args.command == "colex":
        G = colex_segment(args.m, args.r)
    elif args.command == "lex":
        G = lex_segment(args.m, args.t, args.r)
    else:
        G = clique(args.t, args.r)
    sys.stdout.write(to_text(G))
    return 0


def _cmd_lagrangian(args) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    G = from_text(text)
    cert = maximize_lagrangian(G, _solver_config(args))
    out = {"r": G.r, "t": G.t, "m": G.m}
    out.update(cert.to_dict())
    _emit(args, report.dumps(out))
    return 0


def _cmd_verify_ff(args) -> int:
    config = _solver_config(args)
    results = []
    failure = None
    for m in range(1, args.m_max + 1):
        sr = ff_verify(args.r, m, args.t, mode=args.mode, config=config,
                       threads=args.threads)
        row = sr.to_dict(include_candidates=False)
        if args.r == 2:
            exact = motzkin_straus_exact(colex_segment(m, 2).with_t(args.t))
            row["motzkin_straus"] = exact
            if abs(sr.colex_value - exact) > 1e-7:
                failure = failure or f"m={m}: colex value differs from Motzkin-Straus"
        results.append(row)
        if not sr.colex_is_max and failure is None:
            failure = f"m={m}: best value {sr.best_value} beats colex {sr.colex_value}"
    verdict = {"check": "ff", "r": args.r, "t": args.t, "m_max": args.m_max,
               "mode": args.mode, "pass": failure is None,
               "failure": failure, "results": results}
    _emit(args, report.dumps(verdict))
    return 0 if failure is None else 1


def _cmd_verify_ak(args) -> int:
    try:
        res = verify_ak_counterexample(range(args.t_min, args.t_max + 1))
    except AssertionError as exc:
        _emit(args, report.dumps({"check": "ak", "pass": False,
                                  "failure": str(exc)}))
        return 1
    _emit(args, report.dumps({"check": "ak", "pass": True, **res}))
    return 0


def _cmd_verify_nikiforov(args) -> int:
    config = _solver_config(args)
    results = []
    failure = None
    for m in range(1, args.m_max + 1):
        cert = maximize_lagrangian(colex_segment(m, args.r), config)
        verdict = check_nikiforov(cert.value, m, args.r)
        results.append(verdict)
        if not verdict["holds"] and failure is None:
            failure = f"m={m}: lambda {cert.value} exceeds bound {verdict['bound']}"
    out = {"check": "nikiforov", "r": args.r, "m_max": args.m_max,
           "pass": failure is None, "failure": failure, "results": results}
    _emit(args, report.dumps(out))
    return 0 if failure is None else 1


def _cmd_verify_expansion(args) -> int:
    config = _solver_config(args)
    t, r = args.t, 3
    results = []
    failure = None
    for a in range(1, args.a_max + 1):
        G = colex_segment(math.comb(t, r) - a, r).with_t(t)
        cert = maximize_lagrangian(G, config)
        value, scale = eval_lag_expansion(expansion_input_for(G))
        err = abs(cert.value - value)
        ok = err <= args.constant * scale
        results.append({"t": t, "a": a, "lambda": cert.value,
                        "expansion": value, "error": err,
                        "error_scale": scale, "holds": ok})
        if not ok and failure is None:
            failure = f"a={a}: error {err} exceeds {args.constant} * {scale}"
    out = {"check": "expansion", "t": t, "a_max": args.a_max,
           "constant": args.constant, "pass": failure is None,
           "failure": failure, "results": results}
    _emit(args, report.dumps(out))
    return 0 if failure is None else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("colex", "lex", "clique"):
            return _cmd_segment(args)
        if args.command == "lagrangian":
            return _cmd_lagrangian(args)
        if args.command == "verify":
            if args.check == "ff":
                return _cmd_verify_ff(args)
            if args.check == "ak":
                return _cmd_verify_ak(args)
            if args.check == "nikiforov":
                return _cmd_verify_nikiforov(args)
            if args.check == "expansion":
                return _cmd_verify_expansion(args)
        parser.error(f"unknown command {args.command}")
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
