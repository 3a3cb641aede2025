from typing import Annotated, Literal

from fastmcp.exceptions import ToolError
from pydantic import Field

from services.lattice import PointLimitExceeded, enumerate_points, integer_hull
from services.polyfile import write_hrep, write_vrep
from tools.common import POLY_DESCRIPTION, parse_poly

Method = Literal["bbox", "projection", "hilbert", "zero-one"]
METHOD_DESCRIPTION = (
    "Enumeration method: bbox (filter the bounding box), projection "
    "(Fourier-Motzkin fibers), hilbert (degree-1 Hilbert basis) or zero-one "
    "(0/1 points only)"
)


def count_lattice_points(
    poly: Annotated[str, Field(description=POLY_DESCRIPTION)],
    method: Annotated[Method, Field(description=METHOD_DESCRIPTION)] = "projection",
    include_points: Annotated[
        bool, Field(description="Also return the sorted list of points")
    ] = False,
    limit: Annotated[
        int | None, Field(description="Abort beyond this many points", ge=1)
    ] = None,
) -> dict:
    """Count the integer points of a bounded polytope."""
    p = parse_poly(poly)
    try:
        points = enumerate_points(p, method, limit=limit)
    except PointLimitExceeded as e:
        raise ToolError(f"Too many lattice points: {e}")
    except ValueError as e:
        raise ToolError(f"Enumeration failed: {e}")
    result = {"count": points.count, "method": points.method}
    if include_points:
        result["points"] = [list(x) for x in points.coordinates()]
    return result


def compute_integer_hull(
    poly: Annotated[str, Field(description=POLY_DESCRIPTION)],
    method: Annotated[Method, Field(description=METHOD_DESCRIPTION)] = "projection",
) -> dict:
    """Convex hull of the integer points of a bounded polytope.

    Returns both its vertices and its facets in .poly format.
    """
    p = parse_poly(poly)
    try:
        q = integer_hull(p, method)
    except ValueError as e:
        raise ToolError(f"Integer hull failed: {e}")
    return {
        "vertices": write_vrep(q.vrep),
        "facets": write_hrep(q.hrep),
        "vertex_count": len(q.vrep.points),
        "facet_count": len(q.hrep.inequalities),
    }
