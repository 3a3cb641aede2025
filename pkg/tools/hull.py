from typing import Annotated, Literal

from fastmcp.exceptions import ToolError
from pydantic import Field

from services.arith import format_scalar
from services.hull import InsertionOrder, facets, vertices, volume
from services.polyfile import write_hrep, write_vrep
from tools.common import POLY_DESCRIPTION, parse_poly

ORDER_PATTERN = r"^(given|lex|vertices-first|random:\d+)$"


def convex_hull(
    poly: Annotated[str, Field(description=POLY_DESCRIPTION)],
    output: Annotated[
        Literal["facets", "vertices"],
        Field(description="Which representation to compute"),
    ] = "facets",
    algorithm: Annotated[
        Literal["dd", "bb"] | None,
        Field(
            description=(
                "dd = double description, bb = beneath-and-beyond. "
                "Defaults to POLYHULL_DEFAULT_ALGO"
            )
        ),
    ] = None,
    order: Annotated[
        str,
        Field(
            description="Point insertion order for bb: given, lex, vertices-first "
            "or random:<seed>",
            pattern=ORDER_PATTERN,
        ),
    ] = "given",
) -> dict:
    """Convert between the inequality and the point description of a polytope.

    Returns the irredundant, canonically sorted result in .poly format.
    """
    p = parse_poly(poly)
    try:
        if output == "facets":
            h = facets(p, algorithm, InsertionOrder.parse(order))
            return {
                "poly": write_hrep(h),
                "facets": len(h.inequalities),
                "equations": len(h.equations),
            }
        v = vertices(p, algorithm)
        return {
            "poly": write_vrep(v),
            "vertices": len(v.points),
            "rays": len(v.rays),
            "lineality": len(v.lineality),
        }
    except ValueError as e:
        raise ToolError(f"Hull computation failed: {e}")


def polytope_volume(
    poly: Annotated[str, Field(description=POLY_DESCRIPTION)],
) -> dict:
    """Exact volume of a bounded polytope (in its affine hull).

    Puiseux coefficients give the volume as a function of t.
    """
    p = parse_poly(poly)
    try:
        value = volume(p)
    except ValueError as e:
        raise ToolError(f"Volume computation failed: {e}")
    return {"volume": format_scalar(value)}
