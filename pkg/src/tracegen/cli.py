"""Command line front end.

Four subcommands: analyze prints the polynomial data of a model, sample
draws finite traces, stream runs the boundary block generator, verify
runs the statistical suites.  Randomised subcommands default to a fixed
documented seed and always echo the seed they used in a header record,
so every run is reproducible by construction.
"""

from __future__ import annotations

import argparse
import json
import sys

from .mobius import (
    NotIrreducibleError,
    is_irreducible,
    mobius_polynomial,
    smallest_root,
)
from .monoid import (
    cliques,
    format_trace,
    load_model,
    trace_to_lists,
)
from .oracle import MAX_ORACLE_LENGTH  # noqa: F401  (re-exported limit for --help text)
from .sampler import SamplerParams, sample_many
from .verify import DEFAULT_SEED, run_suite
from . import boundary

_PIVOT_CHOICES = {"lowindex": "lowindex", "maxdeg": "maxdeg"}


def _add_model_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--model", required=True, metavar="FILE",
        help="JSON model file with keys 'letters' and 'dependence'",
    )


def _cmd_analyze(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    result = {
        "letters": list(model.letters),
        "clique_count": len(cliques(model)),
        "mobius_coefficients": list(mobius_polynomial(model).coefficients),
        "p_sigma": round(smallest_root(model), 12),
        "irreducible": is_irreducible(model),
    }
    if args.subset:
        subsets = {}
        for spec in args.subset:
            names = [s for s in spec.split(",") if s]
            mask = model.subset(names)
            subsets[",".join(names)] = {
                "mobius_coefficients": list(
                    mobius_polynomial(model, mask).coefficients
                ),
                "smallest_root": round(smallest_root(model, mask), 12)
                if mask else None,
            }
        result["subsets"] = subsets
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    root = smallest_root(model)
    if not 0.0 < args.p < root:
        sys.stderr.write(
            f"error: p={args.p} is out of range; the multiplicative law needs "
            f"0 < p < {root:.12f} (smallest Mobius root of this alphabet)\n"
        )
        return 2
    params = SamplerParams(p=args.p, seed=args.seed, pivot=args.pivot)
    if args.format == "json":
        print(json.dumps({"seed": args.seed, "p": args.p, "n": args.n}))
        for x in sample_many(model, params, args.n):
            print(json.dumps(trace_to_lists(model, x)))
    else:
        print(f"# seed={args.seed} p={args.p} n={args.n}")
        for x in sample_many(model, params, args.n):
            print(format_trace(model, x))
    return 0


def _cmd_stream(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    pivot = args.pivot_letter or model.letters[0]
    if args.workers > 1 and not args.blocks:
        sys.stderr.write("error: --workers needs a finite --blocks count\n")
        return 2
    try:
        stream = boundary.open_stream(
            model, pivot, args.seed, allow_trivial=args.allow_trivial
        )
    except (NotIrreducibleError, boundary.GapViolationError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    # the header is the same whatever the worker count: the output of a
    # stream is a function of (model, pivot, seed) only
    print(json.dumps({"seed": args.seed, "pivot": pivot, "p_star": stream.p_star}))
    if args.workers > 1:
        xi = boundary.parallel_run(
            model, pivot, args.seed, args.blocks, workers=args.workers,
            allow_trivial=args.allow_trivial,
        )
        print(json.dumps({
            "k": args.blocks, "final": trace_to_lists(model, xi),
            "length": xi.length,
        }))
        return 0
    emit_each = args.emit == "each-block"
    try:
        while True:
            if args.blocks and stream.blocks_done >= args.blocks:
                break
            if args.min_length and stream.length >= args.min_length:
                break
            block = stream.next_block()
            if emit_each:
                print(json.dumps({
                    "k": stream.blocks_done,
                    "block": trace_to_lists(model, block),
                    "length": stream.length,
                }), flush=not args.blocks)
    except KeyboardInterrupt:
        pass
    if not emit_each:
        xi = stream.accumulated
        print(json.dumps({
            "k": stream.blocks_done, "final": trace_to_lists(model, xi),
            "length": xi.length,
        }))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    reports = run_suite(args.suite, model, args.seed, args.pivot_letter)
    payload = [r.to_dict() for r in reports]
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
    else:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    for r in reports:
        flag = "pass" if r.passed else "FAIL"
        sys.stderr.write(f"{flag} {r.name}: statistic={r.statistic:.6g} "
                         f"threshold={r.threshold:.6g}\n")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracegen",
        description="Uniform random generation of finite and infinite traces "
                    "in trace monoids (heaps of pieces).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser(
        "analyze", help="clique polynomial, smallest root, irreducibility"
    )
    _add_model_argument(p_analyze)
    p_analyze.add_argument(
        "--subset", action="append", metavar="LETTERS",
        help="comma separated letters; repeatable; adds per subset data",
    )
    p_analyze.set_defaults(func=_cmd_analyze)

    p_sample = sub.add_parser(
        "sample", help="draw finite traces from the multiplicative law"
    )
    _add_model_argument(p_sample)
    p_sample.add_argument("--p", type=float, required=True,
                          help="law parameter, 0 < p < smallest root")
    p_sample.add_argument("--n", type=int, default=1, help="number of traces")
    p_sample.add_argument("--seed", type=int, default=DEFAULT_SEED,
                          help=f"random seed (default {DEFAULT_SEED})")
    p_sample.add_argument("--pivot", choices=sorted(_PIVOT_CHOICES),
                          default="lowindex", help="pivot selection rule")
    p_sample.add_argument("--format", choices=("brackets", "json"),
                          default="brackets", help="output format")
    p_sample.set_defaults(func=_cmd_sample)

    p_stream = sub.add_parser(
        "stream", help="run the boundary block generator"
    )
    _add_model_argument(p_stream)
    p_stream.add_argument("--pivot-letter", metavar="LETTER", default=None,
                          help="block apex letter (default: first letter)")
    stop = p_stream.add_mutually_exclusive_group()
    stop.add_argument("--blocks", type=int, default=0,
                      help="stop after this many blocks; 0 means endless")
    stop.add_argument("--min-length", type=int, default=0,
                      help="stop once the accumulated trace reaches this length")
    p_stream.add_argument("--seed", type=int, default=DEFAULT_SEED,
                          help=f"random seed (default {DEFAULT_SEED})")
    p_stream.add_argument("--workers", type=int, default=1,
                          help="worker processes (needs --blocks)")
    p_stream.add_argument("--emit", choices=("each-block", "final"),
                          default="each-block",
                          help="emit one record per block, or only the final trace")
    p_stream.add_argument("--allow-trivial", action="store_true",
                          help="permit the degenerate one letter alphabet")
    p_stream.set_defaults(func=_cmd_stream)

    p_verify = sub.add_parser(
        "verify", help="run the verification suites against the oracle"
    )
    _add_model_argument(p_verify)
    p_verify.add_argument("--suite", choices=("mobius", "finite", "boundary", "all"),
                          default="all")
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED,
                          help=f"random seed (default {DEFAULT_SEED})")
    p_verify.add_argument("--pivot-letter", metavar="LETTER", default=None)
    p_verify.add_argument("--report", metavar="FILE", default=None,
                          help="write the JSON report here instead of stdout")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        # covers model schema problems and unreadable model files alike;
        # json decode errors are ValueErrors already
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
