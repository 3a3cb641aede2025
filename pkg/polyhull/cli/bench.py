from services.bench import SUITES, bench_suite, summarize, to_csv

from polyhull.cli.io import add_output, emit


def register(subparsers):
    bench_parser = subparsers.add_parser("bench", help="Run a benchmark suite")
    bench_parser.add_argument("suite", choices=SUITES)
    bench_parser.add_argument("--reps", type=int, default=1)
    bench_parser.add_argument(
        "--budget-seconds",
        type=float,
        help="Per-instance wall-time cap; slower instances are recorded as timeout",
    )
    bench_parser.add_argument("--seed", type=int, default=1)
    bench_parser.add_argument(
        "--no-timings",
        dest="timings",
        action="store_false",
        help="Write '-' for seconds so the CSV is reproducible",
    )
    bench_parser.add_argument(
        "--summary",
        action="store_true",
        help="Print statistics per instance and metric instead of raw records",
    )
    add_output(bench_parser)


def handle(args):
    records = bench_suite(
        args.suite,
        args.reps,
        args.budget_seconds,
        seed=args.seed,
        timings=args.timings,
    )
    if args.summary:
        lines = [
            f"{family} {params} {metric}: {summary}"
            for (family, params, metric), summary in summarize(records).items()
        ]
        emit(args, "\n".join(lines))
    else:
        emit(args, to_csv(records))
