import json

from services.arith import format_scalar, parse_scalar
from services.hull import InsertionOrder, facets, vertices, volume
from services.polyfile import format_constraints, write_hrep, write_vrep
from services.polyhedron import Polytope, describe, specialize

from polyhull.cli.io import add_input, add_output, emit, load_input

COMMANDS = ("hull", "vertices", "volume", "info")


def _add_algo(parser):
    parser.add_argument(
        "--algo",
        choices=("dd", "bb"),
        help="Hull algorithm (default: POLYHULL_DEFAULT_ALGO)",
    )


def register(subparsers):
    hull_parser = subparsers.add_parser("hull", help="Facets of a polytope")
    _add_algo(hull_parser)
    hull_parser.add_argument(
        "--order",
        type=InsertionOrder.parse,
        default=InsertionOrder(),
        help="Insertion order for bb: given, lex, vertices-first, random:<seed>",
    )
    hull_parser.add_argument(
        "--pretty",
        action="store_true",
        help="Print the facets as numbered constraints",
    )
    hull_parser.add_argument(
        "--t",
        help="Substitute this rational value for t before computing",
    )

    vertices_parser = subparsers.add_parser("vertices", help="Vertices of a polytope")
    _add_algo(vertices_parser)
    vertices_parser.add_argument("--t", help="Substitute this value for t first")

    volume_parser = subparsers.add_parser("volume", help="Exact volume")
    volume_parser.add_argument("--t", help="Substitute this value for t first")

    info_parser = subparsers.add_parser(
        "info", help="Vertex, facet and dimension counts"
    )
    info_parser.add_argument(
        "--points",
        action="store_true",
        help="Also count the lattice points",
    )

    for p in (hull_parser, vertices_parser, volume_parser, info_parser):
        add_input(p)
        add_output(p)


def _load(args) -> Polytope:
    p = load_input(args)
    t = getattr(args, "t", None)
    if t is None:
        return p
    if p.hrep is None:
        raise ValueError("--t applies to H-representations only")
    return Polytope(hrep=specialize(p.hrep, parse_scalar(t)))


def handle(args):
    p = _load(args)
    match args.command:
        case "hull":
            h = facets(p, args.algo, args.order)
            emit(args, format_constraints(h) if args.pretty else write_hrep(h))
        case "vertices":
            emit(args, write_vrep(vertices(p, args.algo)))
        case "volume":
            emit(args, format_scalar(volume(p)))
        case "info":
            emit(args, json.dumps(describe(p, with_points=args.points)))
