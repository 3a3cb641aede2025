from fractions import Fraction

import pytest

from services import generators, hull, linalg
from services.arith import ScalarParseError
from services.lattice import integer_hull
from services.lp import (
    LinearProgram,
    LpStatus,
    coordinate_bounds,
    parse_objective,
    solve_lp,
)
from services.polyhedron import HRep, evaluate_row


def knapsack_hrep(d: int, b: int) -> HRep:
    return generators.fibonacci_knapsack(d, b).hrep


def tight_rank(h: HRep, x) -> int:
    rows = [
        list(row[1:])
        for row in h.inequalities + h.equations
        if evaluate_row(row, x) == 0
    ]
    return linalg.rank(rows)


class TestSolveLp:
    def test_knapsack_maximum(self):
        lp = LinearProgram(knapsack_hrep(5, 40), (0, 1, 2, 1, 2, 1))
        result = solve_lp(lp)
        assert result.status is LpStatus.OPTIMAL
        assert result.optimal_value == Fraction(80, 3)
        assert result.optimal_vertex == (0, Fraction(40, 3), 0, 0, 0)

    def test_minimum_at_origin(self):
        lp = LinearProgram(knapsack_hrep(3, 10), (5, 1, 1, 1), maximize=False)
        result = solve_lp(lp)
        assert result.status is LpStatus.OPTIMAL
        assert result.optimal_value == 5
        assert result.optimal_vertex == (0, 0, 0)

    def test_infeasible(self):
        h = HRep(((-1, 1), (0, -1)), (), 1)
        result = solve_lp(LinearProgram(h, (0, 1)))
        assert result.status is LpStatus.INFEASIBLE
        assert result.optimal_vertex is None

    def test_unbounded(self):
        h = HRep(((0, 1, 0), (0, 0, 1)), (), 2)
        result = solve_lp(LinearProgram(h, (0, 1, 1)))
        assert result.status is LpStatus.UNBOUNDED

    def test_free_variables(self):
        # -1 <= x <= 2, no sign constraint on x
        h = HRep(((1, 1), (2, -1)), (), 1)
        low = solve_lp(LinearProgram(h, (0, 1), maximize=False))
        assert low.optimal_vertex == (-1,)

    def test_equations(self):
        # x + y = 3, x, y >= 0, maximize x - y
        h = HRep(((0, 1, 0), (0, 0, 1)), ((-3, 1, 1),), 2)
        result = solve_lp(LinearProgram(h, (0, 1, -1)))
        assert result.optimal_value == 3
        assert result.optimal_vertex == (3, 0)

    def test_redundant_equation(self):
        h = HRep(((0, 1, 0), (0, 0, 1)), ((-3, 1, 1), (-6, 2, 2)), 2)
        result = solve_lp(LinearProgram(h, (0, 0, 1)))
        assert result.optimal_value == 3

    def test_objective_length_is_checked(self):
        with pytest.raises(ValueError, match="expected 3"):
            LinearProgram(HRep(((0, 1, 0),), (), 2), (0, 1))


class TestCoordinateBounds:
    def test_knapsack_box(self):
        bounds = coordinate_bounds(knapsack_hrep(5, 40))
        assert bounds.is_ok
        assert bounds.value == [
            (0, 20),
            (0, Fraction(40, 3)),
            (0, 8),
            (0, 5),
            (0, Fraction(40, 13)),
        ]

    def test_unbounded_side(self):
        bounds = coordinate_bounds(HRep(((0, 1),), (), 1))
        assert bounds.value == [(0, None)]

    def test_empty_region(self):
        bounds = coordinate_bounds(HRep(((-1, 1), (0, -1)), (), 1))
        assert bounds.is_err
        assert bounds.code == "infeasible"


class TestParseObjective:
    def test_rationals(self):
        assert parse_objective("0, 1/2, -3") == (0, Fraction(1, 2), -3)

    def test_rejects_garbage(self):
        with pytest.raises(ScalarParseError):
            parse_objective("1,abc")


class TestOptimalVertex:
    def test_free_variables_land_on_a_vertex(self):
        # [-1, 1] x [0, 1]; the whole top edge maximizes x2
        h = HRep(((1, 1, 0), (1, -1, 0), (0, 0, 1), (1, 0, -1)), (), 2)
        result = solve_lp(LinearProgram(h, (0, 0, 1)))
        assert result.optimal_value == 1
        assert tight_rank(h, result.optimal_vertex) == 2
        assert result.optimal_vertex in {(-1, 1), (1, 1)}

    def test_zero_objective_returns_a_vertex(self):
        h = HRep(((1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1)), (), 2)
        result = solve_lp(LinearProgram(h, (3, 0, 0)))
        assert result.optimal_value == 3
        assert tight_rank(h, result.optimal_vertex) == 2

    @pytest.mark.parametrize(
        "objective",
        [
            (0, 1, 2, 1, 2, 1),
            (0, 1, 1, 1, 1, 1),
            (0, -1, 0, 0, 0, 1),
            (0, 0, 0, 0, 0, 0),
        ],
    )
    def test_knapsack_optimum_is_tight(self, objective):
        h = knapsack_hrep(5, 40)
        result = solve_lp(LinearProgram(h, objective))
        assert tight_rank(h, result.optimal_vertex) == 5

    def test_line_in_region_keeps_optimum(self):
        # 0 <= x2 <= 1 with x1 free: no vertex exists
        h = HRep(((0, 0, 1), (1, 0, -1)), (), 2)
        result = solve_lp(LinearProgram(h, (0, 0, 1)))
        assert result.status is LpStatus.OPTIMAL
        assert result.optimal_value == 1


class TestAgainstVertices:
    @pytest.mark.parametrize("d,b", [(3, 10), (4, 20), (5, 40)])
    @pytest.mark.parametrize("maximize", [True, False])
    def test_knapsack_matches_best_vertex(self, d, b, maximize):
        p = generators.fibonacci_knapsack(d, b)
        objective = (0,) + tuple((-1) ** i * (i + 1) for i in range(d))
        values = [evaluate_row(objective, v[1:]) for v in hull.vertices(p).points]
        result = solve_lp(LinearProgram(p.hrep, objective, maximize))
        assert result.optimal_value == (max(values) if maximize else min(values))

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_random_box_matches_best_point(self, seed):
        p = generators.random_box(3, 10, seed)
        objective = (0, 3, -1, 2)
        best = max(evaluate_row(objective, v[1:]) for v in p.vrep.points)
        h = hull.facets(p)
        result = solve_lp(LinearProgram(h, objective))
        assert result.optimal_value == best
        assert tight_rank(h, result.optimal_vertex) == 3

    @pytest.mark.parametrize("factor", [Fraction(1, 3), 2, 7])
    def test_scaled_objective_keeps_vertex(self, factor):
        h = knapsack_hrep(5, 40)
        objective = (0, 1, 2, 1, 2, 1)
        base = solve_lp(LinearProgram(h, objective))
        scaled = solve_lp(LinearProgram(h, tuple(factor * c for c in objective)))
        assert scaled.optimal_value == factor * base.optimal_value
        assert scaled.optimal_vertex == base.optimal_vertex

    def test_integer_optimum_over_integer_hull(self):
        q = integer_hull(generators.fibonacci_knapsack(5, 40))
        result = solve_lp(LinearProgram(q.hrep, (0, 1, 2, 1, 2, 1)))
        assert result.optimal_value == 26
        assert result.optimal_vertex in {(2, 12, 0, 0, 0), (0, 13, 0, 0, 0)}
        assert tight_rank(q.hrep, result.optimal_vertex) == 5
