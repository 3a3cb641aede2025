import random
from fractions import Fraction

import pytest

from services import linalg
from services.arith import PuiseuxFraction
from services.linalg import DimensionMismatch

t = PuiseuxFraction.t()


def random_matrix(rng: random.Random, n: int, rational: bool) -> list[list]:
    def entry():
        num = rng.randint(-6, 6)
        return Fraction(num, rng.randint(1, 4)) if rational else num

    return [[entry() for _ in range(n)] for _ in range(n)]


class TestRank:
    def test_integer_matrix(self):
        assert linalg.rank([[1, 2, 3], [2, 4, 6], [1, 0, 1]]) == 2

    def test_rational_matrix(self):
        a = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1)]]
        assert linalg.rank(a) == 1

    def test_puiseux_matrix(self):
        assert linalg.rank([[1, t], [t, t**2]]) == 1
        assert linalg.rank([[1, t], [t, t]]) == 2

    def test_empty(self):
        assert linalg.rank([]) == 0


class TestDeterminant:
    def test_integer(self):
        assert linalg.det([[2, 0, 1], [1, 3, 2], [1, 1, 2]]) == 6

    def test_needs_row_swap(self):
        assert linalg.det([[0, 1], [1, 0]]) == -1

    def test_puiseux(self):
        assert linalg.det([[1, t], [t, 1]]) == 1 - t**2

    def test_non_square_raises(self):
        with pytest.raises(DimensionMismatch):
            linalg.det([[1, 2, 3], [4, 5, 6]])


class TestSolveAndInverse:
    def test_inverse_of_integer_matrix_is_exact(self):
        inv = linalg.inverse([[2, 1], [1, 1]])
        assert inv == [[1, -1], [-1, 2]]
        assert all(isinstance(x, Fraction) for row in inv for x in row)

    def test_singular_inverse_raises(self):
        with pytest.raises(ZeroDivisionError):
            linalg.inverse([[1, 2], [2, 4]])

    def test_solve(self):
        assert linalg.solve([[1, 1], [1, -1]], [3, 1]) == [2, 1]

    def test_solve_inconsistent(self):
        assert linalg.solve([[1, 1], [2, 2]], [1, 3]) is None

    def test_mismatched_right_side_raises(self):
        with pytest.raises(DimensionMismatch):
            linalg.solve([[1, 1]], [1, 2])


class TestKernel:
    def test_kernel_vectors_are_annihilated(self):
        a = [[1, 2, 3], [0, 1, 1]]
        basis = linalg.kernel(a)
        assert len(basis) == 1
        for v in basis:
            assert linalg.mat_vec(a, v) == [0, 0]

    def test_kernel_of_no_rows_is_identity(self):
        assert linalg.kernel([], 3) == linalg.identity(3)

    def test_independent_rows_greedy(self):
        rows = [[1, 0, 0], [2, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 5]]
        assert linalg.independent_rows(rows) == [0, 2, 4]

    def test_rref_pivots(self):
        r, pivots = linalg.rref([[0, 2, 4], [0, 1, 2], [1, 0, 0]])
        assert pivots == [0, 1]
        assert r == [[1, 0, 0], [0, 1, 2]]

    def test_integer_kernel_is_a_lattice_basis(self):
        a = [[2, 4, 6]]
        basis = linalg.integer_kernel(a)
        assert len(basis) == 2
        for v in basis:
            assert linalg.mat_vec(a, v) == [0]
        coeffs = linalg.solve(linalg.transpose([list(v) for v in basis]), [-1, -1, 1])
        assert coeffs is not None
        assert all(Fraction(c).denominator == 1 for c in coeffs)

    def test_integer_kernel_of_full_rank_is_empty(self):
        assert linalg.integer_kernel([[1, 0], [0, 1]]) == []


class TestPuiseuxInverse:
    def test_inverse_times_matrix_is_identity(self):
        a = [[1, t], [t, 1 + t**2]]
        inv = linalg.inverse(a)
        assert linalg.mat_mul(a, inv) == linalg.identity(2)
        assert linalg.det(a) == 1

    def test_triangular_determinant(self):
        a = [[1 - t, 2, 3], [0, t, 5], [0, 0, 1 + t]]
        assert linalg.det(a) == (1 - t) * t * (1 + t)


class TestInvariants:
    @pytest.mark.parametrize("rational", [False, True])
    def test_determinant_is_multiplicative(self, rational):
        rng = random.Random(30 + rational)
        for _ in range(200):
            n = rng.randint(1, 5)
            a = random_matrix(rng, n, rational)
            b = random_matrix(rng, n, rational)
            assert linalg.det(a) * linalg.det(b) == linalg.det(linalg.mat_mul(a, b))

    def test_rank_ignores_transpose_and_row_operations(self):
        rng = random.Random(32)
        for _ in range(200):
            n = rng.randint(1, 5)
            a = random_matrix(rng, n, rng.random() < 0.5)
            if n > 1:
                if rng.random() < 0.5:
                    a[-1] = [x + y for x, y in zip(a[0], a[-1])]
                else:
                    a[-1] = list(a[0])
            r = linalg.rank(a)
            assert linalg.rank(linalg.transpose(a)) == r
            i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
            moved = [list(row) for row in a]
            moved[i], moved[j] = moved[j], moved[i]
            assert linalg.rank(moved) == r
            k = Fraction(rng.randint(1, 5), rng.randint(1, 3))
            moved[0] = [k * x for x in moved[0]]
            if n > 1:
                moved[1] = [x + k * y for x, y in zip(moved[1], moved[0])]
            assert linalg.rank(moved) == r
