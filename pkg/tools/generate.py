from typing import Annotated, Literal

from fastmcp.exceptions import ToolError
from pydantic import Field

from services import generators
from services.arith import ScalarParseError, parse_scalar
from services.polyfile import write

Family = Literal[
    "knapsack-fib",
    "cut",
    "klee-minty",
    "voronoi",
    "rbox",
    "matching",
    "hard-simplex",
]
GRAPH_PATTERN = r"^(P|C|K|Gk):\d+$"


def generate_polytope(
    family: Annotated[Family, Field(description="Polytope family to construct")],
    d: Annotated[
        int | None,
        Field(description="Dimension (knapsack-fib, klee-minty, voronoi, rbox)"),
    ] = None,
    b: Annotated[int | None, Field(description="Knapsack right-hand side")] = None,
    graph: Annotated[
        str | None,
        Field(
            description="Graph for cut: P:k, C:k, K:k or Gk:k", pattern=GRAPH_PATTERN
        ),
    ] = None,
    t: Annotated[
        str, Field(description="Klee-Minty parameter: a rational or 'sym'")
    ] = "sym",
    m: Annotated[int | None, Field(description="Number of Voronoi sites")] = None,
    n: Annotated[
        int | None, Field(description="Points for rbox, nodes of K_n for matching")
    ] = None,
    seed: Annotated[int, Field(description="Seed for random families", ge=0)] = 1,
    abc: Annotated[
        list[int] | None,
        Field(description="Pairwise coprime a, b, c for hard-simplex"),
    ] = None,
) -> dict:
    """Construct a benchmark polytope and return it in .poly format."""
    try:
        p = _build(family, d, b, graph, t, m, n, seed, abc)
    except (ValueError, TypeError, ScalarParseError) as e:
        raise ToolError(f"Cannot generate {family}: {e}")
    return {"family": family, "poly": write(p)}


def _require(value, name: str, family: str):
    if value is None:
        raise ValueError(f"{family} needs '{name}'")
    return value


def _build(family, d, b, graph, t, m, n, seed, abc):
    match family:
        case "knapsack-fib":
            return generators.fibonacci_knapsack(
                _require(d, "d", family), _require(b, "b", family)
            )
        case "cut":
            g = generators.parse_graph(_require(graph, "graph", family))
            return generators.cut_polytope(g)
        case "klee-minty":
            value = None if t == "sym" else parse_scalar(t)
            return generators.klee_minty(_require(d, "d", family), value)
        case "voronoi":
            sites = generators.random_sites(
                _require(d, "d", family), _require(m, "m", family), seed
            )
            return generators.voronoi_lift(sites)
        case "rbox":
            return generators.random_box(
                _require(d, "d", family), _require(n, "n", family), seed
            )
        case "matching":
            k = generators.graph_families("K", _require(n, "n", family))
            return generators.matching_polytope(k)
        case "hard-simplex":
            values = _require(abc, "abc", family)
            if len(values) != 3:
                raise ValueError("abc needs exactly three integers")
            return generators.hard_simplex(*values)
