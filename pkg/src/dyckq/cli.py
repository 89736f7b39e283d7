"""Command-line front end.

Subcommands: ``solve`` (recognize one instance), ``gen`` (emit an instance),
``bench`` (query-count scaling sweep to CSV), ``validate`` (self-check
suites).  Exit codes: 0 accept/pass, 2 reject, 1 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .ledger import SubroutineModel
from .model import (
    CORRUPT_MODES,
    DyckParams,
    ParseError,
    classical_check,
    corrupt,
    gen_balanced,
    parse_text,
    to_text,
)
from .solver import STEP1_MODES, solve_boosted
from .validate import SUITES, run_suite

CSV_HEADER = ("n,k,t,seed,verdict,expected,queries_total,"
              "queries_step1,queries_step2,queries_step3,wall_ms")


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the exit-code contract reserves 2
    for rejection, so remap usage errors to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="base random seed")
    p.add_argument("--reps", type=int, default=15,
                   help="majority-vote repetitions (odd)")
    p.add_argument("--epsilon-inject", type=float, default=0.0,
                   help="error rate injected into the idealized subroutines")
    p.add_argument("--step1-mode", choices=STEP1_MODES, default="bounded")
    p.add_argument("--c-grover", type=float, default=2.25)
    p.add_argument("--c-aa", type=float, default=float(np.pi / 4))
    p.add_argument("--grover-cap-factor", type=float, default=9.0)


def _model(args, seed: int | None = None) -> SubroutineModel:
    return SubroutineModel(
        epsilon_inject=args.epsilon_inject,
        c_grover=args.c_grover,
        c_aa=args.c_aa,
        grover_cap_factor=args.grover_cap_factor,
        rng_seed=args.seed if seed is None else seed,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dyckq", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p_solve = sub.add_parser("solve", help="recognize one instance from a file")
    p_solve.add_argument("input", help="instance file, or - for stdin")
    p_solve.add_argument("--k", type=int, required=True, help="height bound")
    p_solve.add_argument("--t", type=int, required=True, help="type bound")
    _add_model_flags(p_solve)

    p_gen = sub.add_parser("gen", help="emit one instance line")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--k", type=int, required=True)
    p_gen.add_argument("--t", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--corrupt", choices=CORRUPT_MODES, default=None,
                       help="emit a damaged variant instead")

    p_bench = sub.add_parser("bench", help="query-count scaling sweep to CSV")
    p_bench.add_argument("--n-min", type=int, required=True)
    p_bench.add_argument("--n-max", type=int, required=True)
    p_bench.add_argument("--k", type=int, default=2)
    p_bench.add_argument("--t", type=int, default=2)
    p_bench.add_argument("--trials", type=int, default=10)
    p_bench.add_argument("--out", required=True, help="CSV output path")
    p_bench.add_argument("--jobs", type=int, default=1,
                         help="worker processes for the trials")
    p_bench.add_argument("--measure-wall", action="store_true",
                         help="record real wall time per trial "
                              "(breaks byte-for-byte determinism)")
    _add_model_flags(p_bench)

    p_val = sub.add_parser("validate", help="run a self-check suite")
    p_val.add_argument("--suite", required=True,
                       help="one of: " + ", ".join(SUITES))
    p_val.add_argument("--seed", type=int, default=0)
    return parser


def cmd_solve(args) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
            return 1
    try:
        S = parse_text(text)
        params = DyckParams(args.k, args.t, S.n)
        if args.reps < 1 or args.reps % 2 == 0:
            raise ValueError(f"--reps must be odd and >= 1, got {args.reps}")
        model = _model(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    result = solve_boosted(S, params, model, reps=args.reps,
                           step1_mode=args.step1_mode)
    b = result.breakdown
    print("accept" if result.verdict else "reject")
    print(f"verdict={result.verdict} queries_total={result.queries_total} "
          f"step1={b['step1']} step2={b['step2']} step3={b['step3']} "
          f"runs={result.runs} votes={result.votes_accept}:{result.votes_reject}")
    return 0 if result.verdict else 2


def cmd_gen(args) -> int:
    try:
        S = gen_balanced(args.n, args.k, args.t, args.seed)
        if args.corrupt is not None:
            S = corrupt(S, args.corrupt, args.seed + 1,
                        DyckParams(args.k, args.t, args.n))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(to_text(S))
    return 0


def _bench_trial(work) -> tuple:
    (n, k, t, trial, gen_seed, run_seed, reps, eps, step1_mode,
     c_grover, c_aa, cap, measure_wall) = work
    S = gen_balanced(n, k, t, gen_seed)
    params = DyckParams(k, t, S.n)
    model = SubroutineModel(epsilon_inject=eps, c_grover=c_grover, c_aa=c_aa,
                            grover_cap_factor=cap, rng_seed=run_seed)
    start = time.perf_counter()
    result = solve_boosted(S, params, model, reps=reps, step1_mode=step1_mode)
    wall_ms = int(round((time.perf_counter() - start) * 1000)) if measure_wall else 0
    expected = classical_check(S, params)
    b = result.breakdown
    return (n, trial, k, t, gen_seed, result.verdict, expected,
            result.queries_total, b["step1"], b["step2"], b["step3"], wall_ms)


def cmd_bench(args) -> int:
    if args.n_min < 1 or args.n_max < args.n_min:
        print("error: need 1 <= n-min <= n-max", file=sys.stderr)
        return 1
    for label, value in (("n-min", args.n_min), ("n-max", args.n_max)):
        if value & (value - 1):
            print(f"error: --{label} must be a power of two, got {value}",
                  file=sys.stderr)
            return 1
    if args.trials < 1:
        print("error: --trials must be >= 1", file=sys.stderr)
        return 1
    if args.reps < 1 or args.reps % 2 == 0:
        print(f"error: --reps must be odd and >= 1, got {args.reps}",
              file=sys.stderr)
        return 1

    sizes = []
    n = args.n_min
    while n <= args.n_max:
        sizes.append(n)
        n *= 2
    work = []
    for n in sizes:
        for trial in range(args.trials):
            ss = np.random.SeedSequence([args.seed, n, trial])
            gen_seed, run_seed = (int(x) for x in ss.generate_state(2))
            work.append((n, args.k, args.t, trial, gen_seed, run_seed,
                         args.reps, args.epsilon_inject, args.step1_mode,
                         args.c_grover, args.c_aa, args.grover_cap_factor,
                         args.measure_wall))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_trial, work, chunksize=1))
    else:
        rows = [_bench_trial(w) for w in work]
    rows.sort(key=lambda r: (r[0], r[1]))
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(CSV_HEADER + "\n")
            for (n, _trial, k, t, seed, verdict, expected,
                 q_total, q1, q2, q3, wall_ms) in rows:
                fh.write(f"{n},{k},{t},{seed},{verdict},{expected},"
                         f"{q_total},{q1},{q2},{q3},{wall_ms}\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_validate(args) -> int:
    if args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; choose from "
              f"{', '.join(SUITES)}", file=sys.stderr)
        return 1
    results = run_suite(args.suite, seed=args.seed)
    width = max(len(name) for name, _, _ in results)
    passed = 0
    for name, ok, detail in results:
        print(f"{name:<{width}}  {'PASS' if ok else 'FAIL'}  {detail}")
        passed += ok
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "solve": cmd_solve,
        "gen": cmd_gen,
        "bench": cmd_bench,
        "validate": cmd_validate,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
