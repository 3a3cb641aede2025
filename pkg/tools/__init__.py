from tools.generate import generate_polytope
from tools.hull import convex_hull, polytope_volume
from tools.lattice import compute_integer_hull, count_lattice_points
from tools.lp import solve_linear_program

__all__ = [
    "compute_integer_hull",
    "convex_hull",
    "count_lattice_points",
    "generate_polytope",
    "polytope_volume",
    "solve_linear_program",
]
