"""Exact linear programming over an H-representation.

Primal simplex on a dense tableau with Bland's rule (smallest index enters,
smallest basic index leaves on ratio ties), so every run is deterministic and
terminates.  Free variables are split as ``x = u - v``; the optimum of the split
problem is then moved along the optimal face until d independent constraints
are tight, so the returned point is a vertex of the region.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from services import linalg
from services.arith import Scalar, parse_scalar
from services.polyhedron import HRep, evaluate_row
from services.result import Err, Ok, Result

logger = logging.getLogger(__name__)


class LpStatus(StrEnum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    feasible_region: HRep
    objective: tuple
    maximize: bool = True

    def __post_init__(self):
        objective = tuple(
            Fraction(x) if isinstance(x, int) else x for x in self.objective
        )
        object.__setattr__(self, "objective", objective)
        if len(objective) != self.feasible_region.ambient_dim + 1:
            raise ValueError(
                f"objective has {len(objective)} entries, expected "
                f"{self.feasible_region.ambient_dim + 1}"
            )


@dataclass(frozen=True)
class LpResult:
    status: LpStatus
    optimal_vertex: tuple | None = None
    optimal_value: Scalar | None = None


class _Tableau:
    """Rows ``[coefficients..., rhs]`` with an explicit basis list."""

    def __init__(self, rows: list[list], basis: list[int]):
        self.rows = rows
        self.basis = basis

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else 0

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        inv = 1 / row[c]
        row = [x * inv if x else x for x in row]
        self.rows[r] = row
        for i, other in enumerate(self.rows):
            if i != r and other[c] != 0:
                f = other[c]
                self.rows[i] = [x - f * y if y else x for x, y in zip(other, row)]
        self.basis[r] = c

    def reduced_costs(self, cost: list) -> list:
        reduced = list(cost)
        for r, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[r]
                for j in range(self.width):
                    if row[j]:
                        reduced[j] -= cb * row[j]
        return reduced

    def minimize(self, cost: list, allowed: int) -> bool:
        """Run Bland-rule pivots; False when unbounded.

        Columns >= ``allowed`` never enter the basis.
        """
        iterations = 0
        while True:
            reduced = self.reduced_costs(cost)
            entering = next((j for j in range(allowed) if reduced[j] < 0), None)
            if entering is None:
                logger.debug("simplex: optimal after %d pivots", iterations)
                return True
            best = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return False
            self.pivot(best[1], entering)
            iterations += 1

    def value(self, cost: list):
        total = Fraction(0)
        for r, b in enumerate(self.basis):
            if cost[b]:
                total += cost[b] * self.rows[r][-1]
        return total

    def solution(self, n: int) -> list:
        x = [Fraction(0)] * n
        for r, b in enumerate(self.basis):
            if b < n:
                x[b] = self.rows[r][-1]
        return x


def solve_lp(lp: LinearProgram) -> LpResult:
    """Optimize ``c0 + <c, x>`` over the region; see ``LpStatus`` for outcomes."""
    h = lp.feasible_region
    d = h.ambient_dim
    ineqs = list(h.inequalities)
    eqs = list(h.equations)
    m = len(ineqs) + len(eqs)

    # columns: u (d) | v (d) | slack per inequality | artificials
    n_struct = 2 * d + len(ineqs)
    rows: list[list] = []
    basis: list[int] = []
    needs_artificial: list[int] = []
    for i, row in enumerate(ineqs):
        a, rhs = list(row[1:]), -row[0]
        coeffs = a + [-x for x in a] + [Fraction(0)] * len(ineqs)
        coeffs[2 * d + i] = Fraction(-1)
        if rhs <= 0:
            coeffs = [-x for x in coeffs]
            rhs = -rhs
            basis.append(2 * d + i)
        else:
            basis.append(-1)
            needs_artificial.append(len(rows))
        rows.append(coeffs + [rhs])
    for row in eqs:
        a, rhs = list(row[1:]), -row[0]
        coeffs = a + [-x for x in a] + [Fraction(0)] * len(ineqs)
        if rhs < 0:
            coeffs = [-x for x in coeffs]
            rhs = -rhs
        basis.append(-1)
        needs_artificial.append(len(rows))
        rows.append(coeffs + [rhs])

    n_art = len(needs_artificial)
    width = n_struct + n_art
    for r, row in enumerate(rows):
        rhs = row.pop()
        row.extend([Fraction(0)] * n_art)
        row.append(rhs)
    for k, r in enumerate(needs_artificial):
        rows[r][n_struct + k] = Fraction(1)
        basis[r] = n_struct + k

    tableau = _Tableau(rows, basis)

    if n_art:
        phase1 = [Fraction(0)] * n_struct + [Fraction(1)] * n_art
        tableau.minimize(phase1, width)
        if tableau.value(phase1) > 0:
            logger.debug("solve_lp: infeasible (%d rows, d=%d)", m, d)
            return LpResult(LpStatus.INFEASIBLE)
        _drive_out_artificials(tableau, n_struct)

    c = list(lp.objective[1:])
    sense = -1 if lp.maximize else 1
    cost = [sense * x for x in c] + [-sense * x for x in c] + [Fraction(0)] * (
        tableau.width - 2 * d
    )
    if not tableau.minimize(cost, n_struct):
        return LpResult(LpStatus.UNBOUNDED)

    uv = tableau.solution(2 * d)
    x = _vertex_of_optimal_face(h, [uv[i] - uv[d + i] for i in range(d)])
    value = evaluate_row(lp.objective, x)
    return LpResult(LpStatus.OPTIMAL, x, value)


def _vertex_of_optimal_face(h: HRep, x: list) -> tuple:
    """Walk from the optimum ``x`` to a vertex of the face it lies on.

    Directions come from the kernel of the tight rows, so the objective is
    constant along them at an optimum. Each step makes a new, independent row
    tight. A face containing a line has no vertex and ``x`` is returned.
    """
    d = h.ambient_dim
    ineqs = h.inequalities
    while True:
        tight = [list(row[1:]) for row in h.equations] + [
            list(row[1:]) for row in ineqs if evaluate_row(row, x) == 0
        ]
        directions = linalg.kernel(tight, d)
        if not directions:
            return tuple(x)
        y = directions[0]
        for direction in (y, [-v for v in y]):
            step = None
            for row in ineqs:
                rate = linalg.dot(row[1:], direction)
                if rate < 0:
                    s = evaluate_row(row, x) / -rate
                    if step is None or s < step:
                        step = s
            if step is not None:
                break
        else:
            logger.debug("solve_lp: optimal face contains a line")
            return tuple(x)
        x = [xi + step * yi for xi, yi in zip(x, direction)]


def _drive_out_artificials(tableau: _Tableau, n_struct: int) -> None:
    r = 0
    while r < len(tableau.rows):
        if tableau.basis[r] >= n_struct:
            row = tableau.rows[r]
            col = next((j for j in range(n_struct) if row[j] != 0), None)
            if col is None:
                # redundant equation
                del tableau.rows[r]
                del tableau.basis[r]
                continue
            tableau.pivot(r, col)
        r += 1


def coordinate_bounds(h: HRep) -> Result[list[tuple[Scalar | None, Scalar | None]]]:
    """Per-coordinate (min, max) over the region; None where unbounded."""
    d = h.ambient_dim
    bounds = []
    for i in range(1, d + 1):
        objective = [Fraction(0)] * (d + 1)
        objective[i] = Fraction(1)
        low = solve_lp(LinearProgram(h, tuple(objective), maximize=False))
        if low.status is LpStatus.INFEASIBLE:
            return Err("infeasible", "the region is empty")
        high = solve_lp(LinearProgram(h, tuple(objective), maximize=True))
        bounds.append(
            (
                low.optimal_value if low.status is LpStatus.OPTIMAL else None,
                high.optimal_value if high.status is LpStatus.OPTIMAL else None,
            )
        )
    return Ok(bounds)


def parse_objective(text: str) -> tuple:
    """``"c0,c1,...,cd"`` as scalars; raises ScalarParseError."""
    return tuple(parse_scalar(x.strip()) for x in text.split(","))
