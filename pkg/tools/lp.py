from typing import Annotated

from fastmcp.exceptions import ToolError
from pydantic import Field

from services.arith import ScalarParseError, format_scalar
from services.hull import facets
from services.lp import LinearProgram, LpStatus, parse_objective, solve_lp
from tools.common import POLY_DESCRIPTION, parse_poly


def solve_linear_program(
    poly: Annotated[str, Field(description=POLY_DESCRIPTION)],
    objective: Annotated[
        str,
        Field(description="Comma-separated coefficients c0,c1,...,cd of c0 + c.x"),
    ],
    maximize: Annotated[
        bool, Field(description="Maximize (true) or minimize (false)")
    ] = True,
) -> dict:
    """Solve a linear program exactly over the polytope.

    Returns the status and, when optimal, the value and an optimal vertex.
    """
    p = parse_poly(poly)
    try:
        c = parse_objective(objective)
    except ScalarParseError as e:
        raise ToolError(f"Invalid objective: {e}")
    try:
        h = p.hrep if p.hrep is not None else facets(p)
        result = solve_lp(LinearProgram(h, c, maximize))
    except ValueError as e:
        raise ToolError(f"Linear program failed: {e}")
    if result.status is not LpStatus.OPTIMAL:
        return {"status": str(result.status)}
    return {
        "status": str(result.status),
        "value": format_scalar(result.optimal_value),
        "vertex": [format_scalar(x) for x in result.optimal_vertex],
    }
