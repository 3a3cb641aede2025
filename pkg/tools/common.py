from fastmcp.exceptions import ToolError

from services.polyfile import PolyParseError, read
from services.polyhedron import Polytope

POLY_DESCRIPTION = (
    "Polytope in .poly text format: a header 'H d' or 'V d', then sections "
    "INEQ/EQ (H) or PTS/RAYS/LIN (V), each a 'rows cols' line followed by rows "
    "of scalars (integers, p/q, or Puiseux fractions in t)"
)


def parse_poly(text: str) -> Polytope:
    try:
        return read(text)
    except PolyParseError as e:
        raise ToolError(f"Invalid polytope: {e}")
