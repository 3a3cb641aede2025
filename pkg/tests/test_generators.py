from fractions import Fraction

import pytest

from services import generators
from services.generators import Graph, InvalidParameter
from services.hull import facets, vertices
from services.polyhedron import contains, dimension
from services.rng import XorShift64Star, splitmix64


class TestRng:
    def test_deterministic(self):
        a, b = XorShift64Star(42), XorShift64Star(42)
        assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]

    def test_zero_seed_has_state(self):
        assert XorShift64Star(0).state != 0

    def test_splitmix_mixes(self):
        assert splitmix64(0) != splitmix64(1)

    def test_ranges(self):
        rng = XorShift64Star(7)
        assert all(0 <= rng.integer(0, 5) <= 5 for _ in range(200))
        for _ in range(200):
            x = rng.dyadic()
            assert -1 <= x < 1
            assert x.denominator <= 2**31

    def test_below_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            XorShift64Star(1).below(0)

    def test_shuffle_is_permutation(self):
        items = list(range(20))
        assert sorted(XorShift64Star(3).shuffle(items)) == list(range(20))


class TestKnapsack:
    def test_weights(self):
        assert generators.fibonacci_weights(6) == [2, 3, 5, 8, 13, 21]
        assert generators.fibonacci_weights(1) == [2]

    def test_rows(self):
        h = generators.fibonacci_knapsack(3, 10).hrep
        assert (10, -2, -3, -5) in h.inequalities
        assert (0, 1, 0, 0) in h.inequalities
        assert len(h.inequalities) == 4

    def test_invalid(self):
        with pytest.raises(InvalidParameter):
            generators.fibonacci_knapsack(0, 10)

    def test_nonpositive_weight_warns(self, caplog):
        generators.fractional_knapsack([5, 1])
        assert "should be positive" in caplog.text


class TestGraphs:
    def test_asymmetric_graph_size(self):
        for k in range(4):
            g = generators.graph_families("Gk", k)
            assert g.node_count == k + 6
            assert len(g.edges) == k + 6

    def test_families(self):
        assert len(generators.graph_families("P", 9).edges) == 8
        assert len(generators.graph_families("C", 9).edges) == 9
        assert len(generators.graph_families("K", 6).edges) == 15

    def test_unknown_family(self):
        with pytest.raises(InvalidParameter, match="unknown graph family"):
            generators.graph_families("Q", 3)

    def test_parse_graph(self):
        assert generators.parse_graph("C:5").name == "C5"
        with pytest.raises(InvalidParameter):
            generators.parse_graph("C5")
        with pytest.raises(InvalidParameter):
            generators.parse_graph("C:five")

    def test_edge_list(self, tmp_path):
        path = tmp_path / "square.txt"
        path.write_text("# a 4-cycle\n10 11\n11 12\n12 13\n13 10\n")
        g = generators.parse_graph(f"file:{path}")
        assert g.node_count == 4
        assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
        assert g.name == "square"

    def test_graph_validation(self):
        with pytest.raises(InvalidParameter, match="loop"):
            Graph(2, ((1, 1),))
        with pytest.raises(InvalidParameter, match="duplicate"):
            Graph(2, ((0, 1), (1, 0)))
        with pytest.raises(InvalidParameter, match="out of range"):
            Graph(2, ((0, 2),))

    def test_incident(self):
        g = Graph(3, ((0, 1), (1, 2)))
        assert g.incident(1) == [0, 1]
        assert g.to_networkx().number_of_edges() == 2


class TestCutPolytope:
    def test_triangle(self):
        p = generators.cut_polytope(generators.graph_families("C", 3))
        assert sorted(p.vrep.points) == [
            (1, 0, 0, 0),
            (1, 0, 1, 1),
            (1, 1, 0, 1),
            (1, 1, 1, 0),
        ]

    def test_g0_cut_count(self):
        p = generators.cut_polytope(generators.graph_families("Gk", 0))
        assert len(p.vrep.points) == 32
        assert p.ambient_dim == 6

    def test_path_is_cube(self):
        p = generators.cut_polytope(generators.graph_families("P", 4))
        assert len(facets(p).inequalities) == 6

    def test_node_limit(self, monkeypatch):
        monkeypatch.setenv("POLYHULL_CUT_NODE_LIMIT", "5")
        with pytest.raises(InvalidParameter, match="exceeds the limit"):
            generators.cut_polytope(generators.graph_families("K", 6))


class TestKleeMinty:
    def test_rows(self):
        h = generators.klee_minty(3).hrep
        assert len(h.inequalities) == 6
        assert not h.is_rational

    def test_numeric_parameter(self):
        p = generators.klee_minty(3, Fraction(1, 3))
        assert p.hrep.is_rational
        assert len(vertices(p).points) == 8

    def test_invalid(self):
        with pytest.raises(InvalidParameter):
            generators.klee_minty(0)


class TestVoronoi:
    def test_sites_deterministic(self):
        assert generators.random_sites(3, 5, 9) == generators.random_sites(3, 5, 9)
        assert generators.random_sites(3, 5, 9).dim == 2

    def test_lift_contains_paraboloid_points(self):
        sites = generators.random_sites(3, 6, 1)
        h = generators.voronoi_lift(sites).hrep
        for s in sites.sites:
            # (s, |s|^2) lies above every tangent plane
            assert contains(h, (*s, sum(x * x for x in s)))

    def test_every_site_gives_a_facet(self):
        sites = generators.random_sites(3, 8, 4)
        h = facets(generators.voronoi_lift(sites))
        assert len(h.inequalities) == 8

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(10))
    def test_random_instances(self, seed):
        sites = generators.random_sites(4, 50, seed)
        h = facets(generators.voronoi_lift(sites))
        assert len(h.inequalities) == 50

    def test_invalid(self):
        with pytest.raises(InvalidParameter):
            generators.random_sites(1, 3, 0)


class TestOtherFamilies:
    def test_random_box(self):
        p = generators.random_box(3, 12, 5)
        coords = [r[1:] for r in p.vrep.points]
        assert all(0 <= x <= generators.RANDOM_BOX_SIDE for c in coords for x in c)
        again = generators.random_box(3, 12, 5)
        assert again.vrep.points == p.vrep.points

    def test_matching_polytope(self):
        g = generators.graph_families("K", 3)
        h = generators.matching_polytope(g).hrep
        assert len(h.inequalities) == 6
        assert contains(h, (Fraction(1, 2),) * 3)

    def test_matching_needs_edges(self):
        with pytest.raises(InvalidParameter):
            generators.matching_polytope(Graph(2, ()))

    def test_hard_simplex(self):
        p = generators.hard_simplex(7, 9, 11)
        assert dimension(p) == 5
        with pytest.raises(InvalidParameter, match="coprime"):
            generators.hard_simplex(6, 9, 11)
