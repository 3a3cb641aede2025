from services.arith import PuiseuxFraction, Scalar
from services.polyhedron import Cone, HRep, Polytope, VRep

__all__ = ["Cone", "HRep", "Polytope", "PuiseuxFraction", "Scalar", "VRep"]
