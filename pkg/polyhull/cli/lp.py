from services.arith import format_scalar
from services.hull import facets
from services.lp import LinearProgram, LpStatus, parse_objective, solve_lp

from polyhull.cli.io import add_input, add_output, emit, load_input


def register(subparsers):
    lp_parser = subparsers.add_parser("lp", help="Solve a linear program exactly")
    lp_parser.add_argument(
        "--objective",
        required=True,
        help=(
            "Comma-separated c0,c1,...,cd "
            "(use --objective=-1,... for a leading minus)"
        ),
    )
    sense = lp_parser.add_mutually_exclusive_group()
    sense.add_argument("--max", dest="maximize", action="store_true", default=True)
    sense.add_argument("--min", dest="maximize", action="store_false")
    add_input(lp_parser)
    add_output(lp_parser)


def handle(args):
    p = load_input(args)
    c = parse_objective(args.objective)
    h = p.hrep if p.hrep is not None else facets(p)
    result = solve_lp(LinearProgram(h, c, args.maximize))
    if result.status is not LpStatus.OPTIMAL:
        emit(args, f"status {result.status}")
        return
    vertex = " ".join(format_scalar(x) for x in result.optimal_vertex)
    emit(
        args,
        f"status {result.status}\n"
        f"value {format_scalar(result.optimal_value)}\n"
        f"vertex {vertex}",
    )
