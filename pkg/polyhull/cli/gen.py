from services import generators
from services.arith import parse_scalar
from services.polyfile import write

from polyhull.cli.io import add_output, emit


def register(subparsers):
    gen_parser = subparsers.add_parser("gen", help="Generate a benchmark polytope")
    gen_sub = gen_parser.add_subparsers(dest="family", required=True)

    knapsack = gen_sub.add_parser("knapsack-fib", help="Fibonacci knapsack F_d(b)")
    knapsack.add_argument("--d", type=int, required=True)
    knapsack.add_argument("--b", type=int, required=True)

    cut = gen_sub.add_parser("cut", help="Cut polytope of a graph")
    cut.add_argument(
        "--graph",
        required=True,
        help="P:k, C:k, K:k, Gk:k or file:<edge list>",
    )

    klee = gen_sub.add_parser("klee-minty", help="Perturbed cube")
    klee.add_argument("--d", type=int, required=True)
    klee.add_argument("--t", default="sym", help="Rational value or 'sym'")

    voronoi = gen_sub.add_parser("voronoi", help="Lifted Voronoi diagram")
    voronoi.add_argument("--d", type=int, required=True)
    voronoi.add_argument("--m", type=int, required=True)
    voronoi.add_argument("--seed", type=int, default=1)

    rbox = gen_sub.add_parser("rbox", help="Random lattice points in [0,5]^d")
    rbox.add_argument("--d", type=int, required=True)
    rbox.add_argument("--n", type=int, required=True)
    rbox.add_argument("--seed", type=int, default=1)

    matching = gen_sub.add_parser("matching", help="Matching polytope of K_n")
    matching.add_argument("--n", type=int, required=True)

    simplex = gen_sub.add_parser("hard-simplex", help="Simplex with few lattice points")
    simplex.add_argument("--a", type=int, required=True)
    simplex.add_argument("--b", type=int, required=True)
    simplex.add_argument("--c", type=int, required=True)

    for p in gen_sub.choices.values():
        add_output(p)


def build(args):
    match args.family:
        case "knapsack-fib":
            return generators.fibonacci_knapsack(args.d, args.b)
        case "cut":
            return generators.cut_polytope(generators.parse_graph(args.graph))
        case "klee-minty":
            t = None if args.t == "sym" else parse_scalar(args.t)
            return generators.klee_minty(args.d, t)
        case "voronoi":
            sites = generators.random_sites(args.d, args.m, args.seed)
            return generators.voronoi_lift(sites)
        case "rbox":
            return generators.random_box(args.d, args.n, args.seed)
        case "matching":
            graph = generators.graph_families("K", args.n)
            return generators.matching_polytope(graph)
        case "hard-simplex":
            return generators.hard_simplex(args.a, args.b, args.c)


def handle(args):
    emit(args, write(build(args)))
