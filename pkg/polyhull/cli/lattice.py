from services.lattice import EnumerationMethod, count, enumerate_points, integer_hull
from services.polyfile import write_hrep, write_vrep

from polyhull.cli.io import add_input, add_output, emit, load_input

COMMANDS = ("points", "count", "integer-hull")
METHODS = tuple(str(m) for m in EnumerationMethod)


def register(subparsers):
    points_parser = subparsers.add_parser("points", help="List lattice points")
    count_parser = subparsers.add_parser("count", help="Count lattice points")
    hull_parser = subparsers.add_parser("integer-hull", help="Integer hull")
    hull_parser.add_argument(
        "--vertices",
        action="store_true",
        help="Write the vertices instead of the facets",
    )
    for p in (points_parser, count_parser, hull_parser):
        p.add_argument(
            "--method",
            choices=METHODS,
            default=str(EnumerationMethod.PROJECTION),
            help="Enumeration method (default: projection)",
        )
        p.add_argument(
            "--limit-points",
            type=int,
            help="Abort beyond this many points (default: POLYHULL_POINT_LIMIT)",
        )
        add_input(p)
        add_output(p)


def handle(args):
    p = load_input(args)
    match args.command:
        case "points":
            lattice = enumerate_points(p, args.method, limit=args.limit_points)
            lines = [" ".join(str(x) for x in row) for row in lattice.coordinates()]
            emit(args, "\n".join([str(lattice.count), *lines]))
        case "count":
            emit(args, str(count(p, args.method, limit=args.limit_points)))
        case "integer-hull":
            q = integer_hull(p, args.method, limit=args.limit_points)
            emit(args, write_vrep(q.vrep) if args.vertices else write_hrep(q.hrep))
