"""``wp`` command-line front end.

Exit codes: 0 when a command completes (whatever the answer), 2 for bad
input (missing files, malformed generators or words), 3 when a modulus is
inadmissible or a budget is exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench, chain
from .errors import BudgetExceeded, PreconditionViolation, WPError
from .exact import is_identity
from .modular import mod_is_identity
from .solvers import compute_q, evaluate_dc, evaluate_dc_mod, evaluate_naive, quick_wp_report
from .words import parse_word, read_generator_file

EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers: {text!r}")


def _algo_list(text: str) -> list[str]:
    algos = [a.strip() for a in text.split(",") if a.strip()]
    for a in algos:
        if a not in bench.ALGORITHMS:
            raise argparse.ArgumentTypeError(
                f"unknown algorithm {a!r}; choose from {', '.join(bench.ALGORITHMS)}")
    return algos


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    gens = read_generator_file(args.generators)
    if args.word_file:
        text = Path(args.word_file).read_text()
    elif args.word is not None:
        text = args.word
    else:
        raise WPError("one of --word or --word-file is required")
    w = parse_word(gens, text)
    algos = args.algo or ["quickwp"]
    lines = []
    for algo in algos:
        prefix = f"{algo}: " if len(algos) > 1 else ""
        matrix = None
        if algo == "quickwp":
            r = quick_wp_report(gens, w)
            lines.append(prefix + ("trivial" if r.is_identity else "nontrivial"))
            lines.append(f"decided: {r.stage} stage, q = {r.q}")
            if args.show_matrix:
                matrix = evaluate_dc(gens, w).rows()
        elif algo == "dc_mod":
            m = args.modulus if args.modulus is not None else compute_q(len(w)).value
            if m < 2:
                raise WPError(f"q({len(w)}) = 1; pass --modulus >= 2 for dc_mod")
            x = evaluate_dc_mod(gens, w, m)
            lines.append(prefix + ("trivial" if mod_is_identity(x) else "nontrivial")
                         + f" (mod {m})")
            if args.show_matrix:
                matrix = x.rows()
        else:
            x = evaluate_naive(gens, w) if algo == "naive" else evaluate_dc(gens, w)
            lines.append(prefix + ("trivial" if is_identity(x) else "nontrivial"))
            if args.show_matrix:
                matrix = x.rows()
        if matrix is not None:
            lines.append(json.dumps(matrix))
    print("\n".join(lines))
    return 0


def cmd_bench(args) -> int:
    gens = read_generator_file(args.generators)
    if not args.lengths:
        raise WPError("--lengths is required")
    records = bench.run_bench(gens, args.algo or ["dc"], args.lengths, args.trials, args.seed,
                              args.modulus)
    if args.format == "json":
        payload = [{**r.csv_row(), "times_ns": r.times_ns, "rng": r.rng} for r in records]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(bench.bench_csv(records), args.out)
    return 0


def cmd_pn(args) -> int:
    gens = read_generator_file(args.generators)
    if not args.lengths:
        raise WPError("--lengths is required")
    rows = [bench.estimate_pn(gens, n, args.trials, args.seed, args.exhaustive).to_dict()
            for n in args.lengths]
    if args.format == "csv":
        cols = ["n", "trials", "hits", "fraction", "q_bits", "seed", "exhaustive", "rng"]
        text = ",".join(cols) + "\n" + "".join(
            ",".join(str(r[c]) for c in cols) + "\n" for r in rows)
    else:
        text = json.dumps(rows, indent=2) + "\n"
    _emit(text, args.out)
    return 0


def cmd_q(args) -> int:
    q = compute_q(args.n)
    primes = list(q.primes)
    if args.format == "json":
        print(json.dumps({"n": args.n, "q": str(q.value), "primes": primes, "bits": q.bits}))
    else:
        print(f"q = {q.value}, primes = [{','.join(map(str, primes))}], bits = {q.bits}")
    return 0


def chain_report(gens, m: int, cap: int, max_steps: int = 200) -> dict:
    base = chain.build_chain(gens, m, cap)
    lazy = chain.build_lazy_chain(base)
    try:
        analysis = chain.spectral_report(lazy)
    except BudgetExceeded:
        # too large for a dense eigensolve: report the decay table only
        analysis = chain.ChainAnalysis(m, gens.k, len(base), len(lazy), lazy.period,
                                       None, None, None,
                                       1.0 - 1.0 / (4 * gens.k ** 2 * len(lazy) ** 2))
    analysis.tv_decay = chain.tv_decay_table(lazy, max_steps)
    return analysis.to_dict()


def cmd_chain(args) -> int:
    gens = read_generator_file(args.generators)
    if args.modulus is None:
        raise WPError("--modulus is required")
    report = chain_report(gens, args.modulus, args.cap)
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wp", description="Word problem tools for subgroups of GL_d(Z)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *, gens=True):
        if gens:
            sp.add_argument("--generators", required=True, help="generator JSON file")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--format", choices=("csv", "json"), default=None)

    s = sub.add_parser("solve", help="decide whether a word is the identity")
    common(s)
    s.add_argument("--word", help="signed 1-based generator indices, e.g. '1 -2 2'")
    s.add_argument("--word-file")
    s.add_argument("--algo", type=_algo_list)
    s.add_argument("--modulus", type=int)
    s.add_argument("--show-matrix", action="store_true")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", help="time solvers on random words")
    common(b)
    b.add_argument("--algo", type=_algo_list)
    b.add_argument("--lengths", type=_int_list)
    b.add_argument("--trials", type=int, default=10)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--modulus", type=int)
    b.set_defaults(func=cmd_bench)

    e = sub.add_parser("pn", help="estimate P(M(w) = Id mod q(n))")
    common(e)
    e.add_argument("--lengths", type=_int_list)
    e.add_argument("--trials", type=int, default=10_000)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--exhaustive", action="store_true")
    e.set_defaults(func=cmd_pn)

    q = sub.add_parser("q", help="print q(n) and its prime factors")
    q.add_argument("n", type=int)
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_q)

    c = sub.add_parser("chain", help="Markov-chain analysis of the subgroup mod m")
    common(c)
    c.add_argument("--modulus", type=int)
    c.add_argument("--cap", type=int, default=chain.DEFAULT_CAP)
    c.set_defaults(func=cmd_chain)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionViolation, BudgetExceeded) as exc:
        print(f"wp: error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (WPError, OSError, ValueError) as exc:
        print(f"wp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
