from dotenv import load_dotenv
from fastmcp import FastMCP

from config import configure_logging
from resources import get_cut_facets, get_knapsack_counts
from tools import (
    compute_integer_hull,
    convex_hull,
    count_lattice_points,
    generate_polytope,
    polytope_volume,
    solve_linear_program,
)

load_dotenv()
configure_logging()

mcp = FastMCP("Polyhull MCP")

mcp.tool(compute_integer_hull)
mcp.tool(convex_hull)
mcp.tool(count_lattice_points)
mcp.tool(generate_polytope)
mcp.tool(polytope_volume)
mcp.tool(solve_linear_program)

mcp.resource("tables://knapsack-counts")(get_knapsack_counts)
mcp.resource("tables://cut-facets")(get_cut_facets)

if __name__ == "__main__":
    mcp.run()
