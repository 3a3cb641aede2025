import pytest

from services import generators
from services.hilbert import (
    HilbertBasis,
    NotPointedError,
    enumerate_via_hilbert,
    hilbert_basis,
    hilbert_basis_simplicial,
)
from services.polyhedron import Cone

REEVE = [(1, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 1, 1, 2)]


class TestSimplicial:
    def test_segment_cone(self):
        basis = hilbert_basis_simplicial([(1, 0), (1, 2)])
        assert basis.elements == ((1, 0), (1, 1), (1, 2))

    def test_ungraded_cone(self):
        basis = hilbert_basis_simplicial([(1, 0), (-1, 2)])
        assert basis.elements == ((-1, 2), (0, 1), (1, 0))

    def test_generators_are_made_primitive(self):
        basis = hilbert_basis_simplicial([(2, 0), (3, 6)])
        assert basis.elements == ((1, 0), (1, 1), (1, 2))

    def test_unimodular_cone(self):
        gens = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        assert list(hilbert_basis_simplicial(gens).elements) == sorted(gens)

    def test_degree_two_element(self):
        basis = hilbert_basis_simplicial(REEVE)
        assert (2, 1, 1, 1) in basis.elements
        assert len(basis) == 5
        assert basis.degree(2) == [(2, 1, 1, 1)]

    def test_degree_bound(self):
        basis = hilbert_basis_simplicial(REEVE, max_degree=1)
        assert sorted(basis.elements) == sorted(REEVE)

    def test_dependent_generators(self):
        with pytest.raises(ValueError, match="linearly independent"):
            hilbert_basis_simplicial([(1, 0), (2, 0)])

    def test_degree_bound_needs_grading(self):
        with pytest.raises(ValueError, match="positive first coordinate"):
            hilbert_basis_simplicial([(1, 0), (-1, 2)], max_degree=1)


class TestHilbertBasis:
    def test_square_cone(self):
        gens = ((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1))
        basis = hilbert_basis(Cone(3, generators=gens))
        assert basis.elements == tuple(sorted(gens))

    def test_matches_simplicial(self):
        cone = Cone(4, generators=tuple(REEVE))
        assert hilbert_basis(cone).elements == hilbert_basis_simplicial(REEVE).elements

    def test_from_inequalities(self):
        # 0 <= y <= 2x
        cone = Cone(2, inequalities=((0, 1), (2, -1)))
        assert hilbert_basis(cone).elements == ((1, 0), (1, 1), (1, 2))

    def test_not_pointed(self):
        with pytest.raises(NotPointedError) as info:
            hilbert_basis(Cone(2, inequalities=((1, 0),)))
        assert len(info.value.lineality) == 1

    def test_lower_dimensional(self):
        basis = hilbert_basis(Cone(3, generators=((1, 1, 0), (1, -1, 0))))
        assert basis.elements == ((1, -1, 0), (1, 0, 0), (1, 1, 0))

    def test_lower_dimensional_uses_the_saturated_lattice(self):
        # (1, 0, 1) is half the sum of the generators
        cone = Cone(3, generators=((1, 1, 1), (1, -1, 1)))
        assert hilbert_basis(cone).elements == ((1, -1, 1), (1, 0, 1), (1, 1, 1))

    def test_lower_dimensional_degree_bound(self):
        cone = Cone(4, generators=((1, 0, 0, 0), (1, 0, 0, 4), (2, 2, 2, 1)))
        full = hilbert_basis(cone)
        bounded = hilbert_basis(cone, max_degree=1)
        assert bounded.elements == tuple(e for e in full.elements if e[0] <= 1)
        assert bounded.degree(1) == [(1, 0, 0, k) for k in range(5)]

    def test_lower_dimensional_from_inequalities(self):
        # x1 = x3, 0 <= x2 <= 2 x1
        cone = Cone(3, inequalities=((0, 1, 0), (2, -1, 0)), equations=((1, 0, -1),))
        assert hilbert_basis(cone).elements == ((1, 0, 1), (1, 1, 1), (1, 2, 1))

    def test_worker_count_does_not_matter(self):
        gens = ((1, 0, 0), (1, 3, 0), (1, 0, 3), (1, 3, 3))
        cone = Cone(3, generators=gens)
        assert hilbert_basis(cone, workers=2) == hilbert_basis(cone, workers=1)

    def test_degree_filter(self):
        basis = HilbertBasis(((1, 0), (2, 1), (1, 1)))
        assert basis.degree(1) == [(1, 0), (1, 1)]


class TestLatticePoints:
    def test_square(self):
        p = generators.random_box(2, 1, 0)
        assert enumerate_via_hilbert(p).count == 1

    def test_knapsack(self):
        lattice = enumerate_via_hilbert(generators.fibonacci_knapsack(3, 10))
        assert lattice.method == "hilbert"
        assert all(2 * x + 3 * y + 5 * z <= 10 for x, y, z in lattice.coordinates())
        assert (0, 0, 2) in lattice.coordinates()

    def test_hard_simplex(self):
        lattice = enumerate_via_hilbert(generators.hard_simplex(7, 9, 11))
        assert lattice.coordinates() == [
            (0, 0, 0, 0, 0),
            (0, 1, 0, 0, 0),
            (1, 0, 0, 0, 0),
            (1, 1, 0, 0, 11),
            (1, 1, 0, 9, 0),
            (1, 1, 7, 0, 0),
        ]
