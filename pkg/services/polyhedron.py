"""Polyhedron representations and the operations shared by both hull algorithms.

Conventions (polymake style): every row is homogeneous.  An inequality row
``(a0, a1, ..., ad)`` means ``a0 + a1*x1 + ... + ad*xd >= 0``; an equation row
means the same expression ``= 0``.  Points are rows ``(1, x)``, rays and
lineality generators are rows ``(0, v)``.
"""

from __future__ import annotations

import logging
import math
import threading
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from services import linalg
from services.arith import PuiseuxFraction, Scalar, evaluate, is_rational, to_scalar

logger = logging.getLogger(__name__)

type Row = tuple[Scalar, ...]
type Rows = tuple[Row, ...]


class ZeroRowError(ValueError):
    pass


class UnboundedError(ValueError):
    pass


def _rows(rows: Iterable[Sequence]) -> Rows:
    return tuple(tuple(to_scalar(x) for x in row) for row in rows)


def _check_width(rows: Rows, width: int, what: str) -> None:
    for row in rows:
        if len(row) != width:
            raise linalg.DimensionMismatch(
                f"{what} row has length {len(row)}, expected {width}"
            )


@dataclass(frozen=True)
class HRep:
    inequalities: Rows
    equations: Rows
    ambient_dim: int

    def __post_init__(self):
        object.__setattr__(self, "inequalities", _rows(self.inequalities))
        object.__setattr__(self, "equations", _rows(self.equations))
        _check_width(self.inequalities, self.ambient_dim + 1, "inequality")
        _check_width(self.equations, self.ambient_dim + 1, "equation")

    @classmethod
    def infeasible(cls, ambient_dim: int) -> HRep:
        """The canonical marker for an empty polyhedron: ``-1 >= 0``."""
        row = (Fraction(-1),) + (Fraction(0),) * ambient_dim
        return cls((row,), (), ambient_dim)

    @property
    def is_infeasible_marker(self) -> bool:
        return (
            len(self.inequalities) == 1
            and not self.equations
            and self.inequalities[0][0] < 0
            and all(x == 0 for x in self.inequalities[0][1:])
        )

    @property
    def is_rational(self) -> bool:
        return all(is_rational(x) for row in self.inequalities for x in row) and all(
            is_rational(x) for row in self.equations for x in row
        )


@dataclass(frozen=True)
class VRep:
    points: Rows
    rays: Rows = ()
    lineality: Rows = ()
    ambient_dim: int = -1

    def __post_init__(self):
        points = _rows(self.points)
        dim = self.ambient_dim
        if dim < 0:
            sample = next(iter(points + _rows(self.rays) + _rows(self.lineality)), None)
            if sample is None:
                raise ValueError("ambient dimension needed for an empty VRep")
            dim = len(sample) - 1
            object.__setattr__(self, "ambient_dim", dim)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "rays", _rows(self.rays))
        object.__setattr__(self, "lineality", _rows(self.lineality))
        _check_width(self.points, dim + 1, "point")
        _check_width(self.rays, dim + 1, "ray")
        _check_width(self.lineality, dim + 1, "lineality")
        for row in self.points:
            if row[0] != 1:
                raise ValueError(f"point row must start with 1: {row}")
        for row in self.rays + self.lineality:
            if row[0] != 0:
                raise ValueError(f"ray row must start with 0: {row}")

    @classmethod
    def from_coordinates(cls, coords: Iterable[Sequence], ambient_dim: int = -1):
        return cls(tuple((1, *c) for c in coords), ambient_dim=ambient_dim)

    @property
    def is_empty(self) -> bool:
        return not self.points

    @property
    def is_bounded(self) -> bool:
        return not self.rays and not self.lineality


@dataclass(frozen=True)
class Cone:
    """A homogeneous cone, given by generators or by inequality rows."""

    ambient_dim: int
    generators: Rows = ()
    lineality: Rows = ()
    inequalities: Rows = ()
    equations: Rows = ()

    def __post_init__(self):
        for name in ("generators", "lineality", "inequalities", "equations"):
            rows = _rows(getattr(self, name))
            _check_width(rows, self.ambient_dim, name)
            object.__setattr__(self, name, rows)

    @property
    def is_generated(self) -> bool:
        return bool(self.generators or self.lineality) or not (
            self.inequalities or self.equations
        )


class Polytope:
    """Paired, lazily completed H/V views of one polyhedron.

    Derived data is cached with ``cached``; each key is computed at most once
    even with concurrent readers.
    """

    def __init__(self, hrep: HRep | None = None, vrep: VRep | None = None):
        if hrep is None and vrep is None:
            raise ValueError("a polytope needs an H- or V-representation")
        if hrep is not None and vrep is not None:
            if hrep.ambient_dim != vrep.ambient_dim:
                raise linalg.DimensionMismatch("H and V data of different dimension")
        self._hrep = hrep
        self._vrep = vrep
        self._lock = threading.RLock()
        self._cache: dict[str, object] = {}

    @classmethod
    def from_inequalities(cls, inequalities, equations=(), ambient_dim=None):
        inequalities = _rows(inequalities)
        equations = _rows(equations)
        if ambient_dim is None:
            sample = next(iter(inequalities + equations))
            ambient_dim = len(sample) - 1
        return cls(hrep=HRep(inequalities, equations, ambient_dim))

    @classmethod
    def from_points(cls, coords, ambient_dim: int = -1):
        return cls(vrep=VRep.from_coordinates(coords, ambient_dim))

    @property
    def ambient_dim(self) -> int:
        rep = self._hrep if self._hrep is not None else self._vrep
        return rep.ambient_dim

    @property
    def hrep(self) -> HRep | None:
        with self._lock:
            return self._hrep

    @property
    def vrep(self) -> VRep | None:
        with self._lock:
            return self._vrep

    def set_hrep(self, hrep: HRep) -> None:
        with self._lock:
            if self._hrep is None:
                self._hrep = hrep

    def set_vrep(self, vrep: VRep) -> None:
        with self._lock:
            if self._vrep is None:
                self._vrep = vrep

    def cached(self, key: str, compute: Callable[[], object]):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = compute()
            return self._cache[key]

    def __repr__(self):
        parts = []
        if self._hrep is not None:
            parts.append(
                f"{len(self._hrep.inequalities)} inequalities, "
                f"{len(self._hrep.equations)} equations"
            )
        if self._vrep is not None:
            parts.append(
                f"{len(self._vrep.points)} points, {len(self._vrep.rays)} rays"
            )
        return f"Polytope(d={self.ambient_dim}; {'; '.join(parts)})"


# ---------------------------------------------------------------------------
# canonical rows


def _primitive(row: Sequence[Fraction]) -> Row:
    lcm = 1
    for x in row:
        lcm = math.lcm(lcm, Fraction(x).denominator)
    ints = [int(Fraction(x) * lcm) for x in row]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return tuple(Fraction(v // g) for v in ints)


def canonicalize_row(row: Sequence, equation: bool = False) -> Row:
    """Scale a homogeneous row to its canonical representative.

    Rational rows become primitive integer vectors.  Inequalities and rays are
    only rescaled by positive factors; equations additionally get the first
    nonzero entry of their normal part (or of the row) made positive.
    """
    row = tuple(to_scalar(x) for x in row)
    if all(x == 0 for x in row):
        raise ZeroRowError("cannot canonicalize a zero row")

    if all(is_rational(x) for x in row):
        out = _primitive(row)
    else:
        lead = next(x for x in row if x != 0)
        scale = abs(lead)
        out = tuple(_simplify(x / scale) for x in row)

    if equation:
        normal = out[1:] if any(x != 0 for x in out[1:]) else out
        first = next(x for x in normal if x != 0)
        if first < 0:
            out = tuple(-x for x in out)
    return out


def _simplify(x: Scalar) -> Scalar:
    if isinstance(x, PuiseuxFraction) and x.is_constant:
        return x.constant_value()
    return x


def _sort_key(row: Row):
    return tuple(row)


def equation_basis(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced echelon basis of equation rows, pivoting on x1..xd before x0.

    A pivot in column 0 therefore only occurs for a contradictory row.
    """
    if not rows:
        return [], []
    n = len(rows[0])
    rotated = [list(r[1:]) + [r[0]] for r in rows]
    basis, pivots = linalg.rref(rotated)
    basis = [[r[-1]] + r[:-1] for r in basis]
    return basis, [0 if p == n - 1 else p + 1 for p in pivots]


def _reduce_against(row: Sequence, basis: Rows, pivots: Sequence[int]) -> list:
    v = list(row)
    for b, p in zip(basis, pivots):
        if v[p] != 0:
            f = v[p] / b[p]
            v = [x - f * y if y else x for x, y in zip(v, b)]
    return v


def canonical_hrep(h: HRep) -> HRep:
    """Deduplicated, sorted H-representation in canonical form.

    Equations are replaced by their reduced row echelon basis; inequalities
    are reduced modulo the equations so that they vanish on the equation pivot
    columns.  Returns the infeasible marker when the rows are contradictory.
    """
    d = h.ambient_dim
    basis, pivots = equation_basis(h.equations)
    if 0 in pivots:
        return HRep.infeasible(d)

    ineqs = set()
    for row in h.inequalities:
        v = _reduce_against(row, basis, pivots)
        if all(x == 0 for x in v[1:]):
            if v[0] < 0:
                return HRep.infeasible(d)
            continue
        ineqs.add(canonicalize_row(v))

    eqs = {canonicalize_row(row, equation=True) for row in basis}
    return HRep(
        tuple(sorted(ineqs, key=_sort_key)),
        tuple(sorted(eqs, key=_sort_key)),
        d,
    )


def canonical_vrep(v: VRep) -> VRep:
    lin_basis, lin_pivots = linalg.rref(v.lineality) if v.lineality else ([], [])
    points = set()
    for row in v.points:
        r = _reduce_against(row, lin_basis, lin_pivots)
        points.add(tuple(_simplify(x) for x in r))
    rays = set()
    for row in v.rays:
        r = _reduce_against(row, lin_basis, lin_pivots)
        if any(x != 0 for x in r):
            rays.add(canonicalize_row(r))
    lineality = {canonicalize_row(r, equation=True) for r in lin_basis}
    return VRep(
        tuple(sorted(points, key=_sort_key)),
        tuple(sorted(rays, key=_sort_key)),
        tuple(sorted(lineality, key=_sort_key)),
        v.ambient_dim,
    )


# ---------------------------------------------------------------------------
# homogenization


def homogenize(p: Polytope) -> Cone:
    """The cone over ``p``: its V-data as generators or its H-data plus x0 >= 0."""
    d1 = p.ambient_dim + 1
    v = p.vrep
    if v is not None:
        return Cone(d1, generators=v.points + v.rays, lineality=v.lineality)
    h = p.hrep
    far = (Fraction(1),) + (Fraction(0),) * p.ambient_dim
    return Cone(d1, inequalities=h.inequalities + (far,), equations=h.equations)


def dehomogenize(c: Cone) -> Polytope:
    """Inverse of ``homogenize``: split generators by their x0 coordinate."""
    d = c.ambient_dim - 1
    if c.is_generated:
        points, rays = [], []
        for g in c.generators:
            if g[0] > 0:
                points.append(tuple(_simplify(x / g[0]) for x in g))
            elif g[0] == 0:
                rays.append(g)
            else:
                raise ValueError(f"generator {g} lies below the x0 = 0 hyperplane")
        return Polytope(vrep=VRep(tuple(points), tuple(rays), c.lineality, d))
    far = (Fraction(1),) + (Fraction(0),) * d
    ineqs = tuple(r for r in c.inequalities if canonicalize_row(r) != far)
    return Polytope(hrep=HRep(ineqs, c.equations, d))


# ---------------------------------------------------------------------------
# membership and dimension


def evaluate_row(row: Sequence, x: Sequence) -> Scalar:
    """Value of a homogeneous row at the affine point ``x``."""
    total = row[0]
    for a, xi in zip(row[1:], x):
        if a and xi:
            total = total + a * xi
    return total


def contains(h: HRep, x: Sequence) -> bool:
    if len(x) != h.ambient_dim:
        raise linalg.DimensionMismatch(
            f"point has {len(x)} coordinates, polyhedron lives in {h.ambient_dim}"
        )
    for row in h.inequalities:
        if evaluate_row(row, x) < 0:
            return False
    for row in h.equations:
        if evaluate_row(row, x) != 0:
            return False
    return True


def affine_hull(rows: Rows, ambient_dim: int) -> Rows:
    """Equations (canonical RREF basis) of the affine hull of homogeneous rows."""
    if not rows:
        return ()
    eqs = linalg.kernel([list(r) for r in rows], ambient_dim + 1)
    if not eqs:
        return ()
    basis, _ = equation_basis(eqs)
    return tuple(canonicalize_row(r, equation=True) for r in basis)


def dimension(p: Polytope) -> int:
    """Dimension of the affine hull; -1 for the empty polyhedron."""

    def compute() -> int:
        v = p.vrep
        if v is not None:
            if v.is_empty:
                return -1
            return linalg.rank([list(r) for r in v.points + v.rays + v.lineality]) - 1
        reduced = irredundant_inequalities(p.hrep)
        if reduced.is_infeasible_marker:
            return -1
        return p.ambient_dim - len(reduced.equations)

    return p.cached("dimension", compute)


def is_bounded(p: Polytope) -> bool:
    def compute() -> bool:
        v = p.vrep
        if v is not None:
            return v.is_bounded
        from services.lp import coordinate_bounds

        bounds = coordinate_bounds(p.hrep)
        if bounds.is_err:
            return True
        return all(lo is not None and hi is not None for lo, hi in bounds.value)

    return p.cached("bounded", compute)


def require_bounded(p: Polytope, what: str) -> None:
    if not is_bounded(p):
        raise UnboundedError(f"{what} needs a bounded polyhedron")


# ---------------------------------------------------------------------------
# redundancy


def _tight(row: Sequence, points: Rows) -> list[int]:
    return [i for i, pt in enumerate(points) if linalg.dot(row, pt) == 0]


def irredundant_points(points: Sequence[Sequence], method: str = "hull") -> list[int]:
    """Indices of the rows (homogeneous points) that are vertices of their hull.

    Duplicates keep their first occurrence.  ``method="lp"`` tests each point
    with a separation LP against the others; the default reads vertices off the
    beneath-and-beyond facets, which gives the same set much faster.
    """
    rows = _rows(points)
    if not rows:
        return []
    first_seen: dict[Row, int] = {}
    for i, r in enumerate(rows):
        first_seen.setdefault(r, i)
    unique = sorted(first_seen.values())
    if len(unique) == 1:
        return unique

    if method == "lp":
        return [
            i
            for i in unique
            if _separable(rows[i], [rows[j] for j in unique if j != i])
        ]

    from services.hull import beneath_beyond

    d = len(rows[0]) - 1
    sub = tuple(rows[i] for i in unique)
    facets, _ = beneath_beyond(sub, triangulate=False)
    dim = d - len(facets.equations)
    normals = facets.inequalities
    keep = []
    for local, i in enumerate(unique):
        tight = [list(f) for f in normals if linalg.dot(f, sub[local]) == 0]
        if dim == 0 or (tight and linalg.rank(tight) == dim):
            keep.append(i)
    return keep


def _separable(p: Row, others: list[Row]) -> bool:
    """True when ``p`` is not a convex combination of ``others``."""
    from services.lp import LinearProgram, LpStatus, solve_lp

    # variables: convex multipliers lambda_j >= 0
    n = len(others)
    ineqs = []
    for j in range(n):
        row = [Fraction(0)] * (n + 1)
        row[j + 1] = Fraction(1)
        ineqs.append(row)
    eqs = [[Fraction(-1)] + [Fraction(1)] * n]
    for k in range(1, len(p)):
        eqs.append([-p[k]] + [q[k] for q in others])
    lp = LinearProgram(
        HRep(tuple(map(tuple, ineqs)), tuple(map(tuple, eqs)), n),
        (Fraction(0),) * (n + 1),
    )
    return solve_lp(lp).status is LpStatus.INFEASIBLE


def implicit_equations(h: HRep) -> HRep:
    """Move inequalities that hold with equality on the whole set to equations."""
    from services.lp import LinearProgram, LpStatus, solve_lp

    h = canonical_hrep(h)
    if h.is_infeasible_marker:
        return h
    feasible = solve_lp(LinearProgram(h, (Fraction(0),) * (h.ambient_dim + 1)))
    if feasible.status is LpStatus.INFEASIBLE:
        return HRep.infeasible(h.ambient_dim)
    eqs = list(h.equations)
    ineqs = []
    for row in h.inequalities:
        region = HRep(h.inequalities, tuple(eqs), h.ambient_dim)
        result = solve_lp(LinearProgram(region, row))
        if result.status is LpStatus.OPTIMAL and result.optimal_value == 0:
            eqs.append(row)
        else:
            ineqs.append(row)
    return canonical_hrep(HRep(tuple(ineqs), tuple(eqs), h.ambient_dim))


def irredundant_inequalities(h: HRep, points: Sequence[Sequence] | None = None) -> HRep:
    """Minimal description of the same set: affine-hull equations plus facets.

    With ``points`` (homogeneous rows containing every vertex of the set) the
    facets are recognised by their vertex incidences; otherwise each
    inequality is tested by an LP against the remaining ones.
    """
    d = h.ambient_dim
    h = canonical_hrep(h)
    if h.is_infeasible_marker:
        return h

    if points is not None:
        pts = _rows(points)
        if not pts:
            return HRep.infeasible(d)
        eqs = list(h.equations)
        candidates = []
        for row in h.inequalities:
            if all(linalg.dot(row, pt) == 0 for pt in pts):
                eqs.append(row)
            else:
                candidates.append(row)
        dim = linalg.rank([list(r) for r in pts]) - 1
        reduced = canonical_hrep(HRep(tuple(candidates), tuple(eqs), d))
        facets = []
        for row in reduced.inequalities:
            tight = _tight(row, pts)
            if tight and linalg.rank([list(pts[i]) for i in tight]) == dim:
                facets.append(row)
        logger.debug(
            "irredundant_inequalities: %d -> %d rows (incidence test)",
            len(h.inequalities),
            len(facets),
        )
        return HRep(tuple(facets), reduced.equations, d)

    from services.lp import LinearProgram, LpStatus, solve_lp

    h = implicit_equations(h)
    if h.is_infeasible_marker:
        return h
    kept = list(h.inequalities)
    i = 0
    while i < len(kept):
        row = kept[i]
        rest = tuple(kept[:i] + kept[i + 1 :])
        region = HRep(rest, h.equations, d)
        result = solve_lp(LinearProgram(region, row, maximize=False))
        if result.status is LpStatus.OPTIMAL and result.optimal_value >= 0:
            kept.pop(i)
        else:
            i += 1
    logger.debug(
        "irredundant_inequalities: %d -> %d rows (lp test)",
        len(h.inequalities),
        len(kept),
    )
    return HRep(tuple(kept), h.equations, d)


# ---------------------------------------------------------------------------
# projection


def fourier_motzkin(h: HRep, column: int | None = None) -> HRep:
    """Eliminate one coordinate (default: the last) from ``h``.

    An equation involving the coordinate is used for substitution; otherwise
    inequalities are combined pairwise across the sign split.
    """
    d = h.ambient_dim
    col = d if column is None else column
    if not 1 <= col <= d:
        raise ValueError(f"cannot eliminate column {col} of a {d}-dimensional system")

    def drop(row: Sequence) -> Row:
        return tuple(row[:col]) + tuple(row[col + 1 :])

    pivot = next((e for e in h.equations if e[col] != 0), None)
    if pivot is not None:

        def substitute(row: Sequence) -> list:
            f = row[col] / pivot[col]
            return [x - f * y for x, y in zip(row, pivot)]

        ineqs = [drop(substitute(r)) for r in h.inequalities]
        eqs = [drop(substitute(r)) for r in h.equations if r is not pivot]
        eqs = [e for e in eqs if any(x != 0 for x in e)]
        return canonical_hrep(HRep(tuple(ineqs), tuple(eqs), d - 1))

    zero, pos, neg = [], [], []
    for row in h.inequalities:
        c = row[col]
        (zero if c == 0 else pos if c > 0 else neg).append(row)
    combined = [drop(r) for r in zero]
    for p in pos:
        for n in neg:
            a, b = p[col], -n[col]
            combined.append(drop([b * x + a * y for x, y in zip(p, n)]))
    logger.debug(
        "fourier_motzkin: column %d, %d zero, %d pos, %d neg -> %d rows",
        col,
        len(zero),
        len(pos),
        len(neg),
        len(combined),
    )
    eqs = tuple(drop(e) for e in h.equations)
    return canonical_hrep(HRep(tuple(combined), eqs, d - 1))


# ---------------------------------------------------------------------------
# polarity, translation, restriction


def polar(rows: Sequence[Sequence]) -> Rows:
    """Swap points and inequalities w.r.t. an interior origin.

    A point ``(1, x)`` becomes the inequality ``1 + <x, y> >= 0`` and an
    inequality ``(a0, a)`` with ``a0 > 0`` the point ``(1, a / a0)``.
    """
    out = []
    for r in _rows(rows):
        if r[0] <= 0:
            raise ValueError("polarity needs the origin in the interior")
        out.append(tuple(_simplify(x / r[0]) for x in r))
    return tuple(out)


def translate_hrep(h: HRep, shift: Sequence) -> HRep:
    """Rows for the set ``{x - shift : x in h}``."""

    def move(row):
        return (evaluate_row(row, shift),) + tuple(row[1:])

    return HRep(
        tuple(move(r) for r in h.inequalities),
        tuple(move(r) for r in h.equations),
        h.ambient_dim,
    )


def translate_points(points: Sequence[Sequence], shift: Sequence) -> Rows:
    return tuple(
        (r[0],) + tuple(x + r[0] * s for x, s in zip(r[1:], shift))
        for r in _rows(points)
    )


@dataclass(frozen=True)
class Restriction:
    """Coordinate chart of an affine subspace.

    ``free`` are the coordinates kept (1-based); the ``equations`` (in RREF)
    determine the remaining ones.
    """

    ambient_dim: int
    equations: Rows
    pivots: tuple[int, ...]
    free: tuple[int, ...] = field(default=())

    @property
    def dimension(self) -> int:
        return len(self.free)

    def project(self, row: Sequence) -> Row:
        return (row[0],) + tuple(row[c] for c in self.free)

    def lift_point(self, row: Sequence) -> Row:
        """Homogeneous row in the chart -> homogeneous row in the ambient space."""
        full = [Fraction(0)] * (self.ambient_dim + 1)
        full[0] = row[0]
        for c, x in zip(self.free, row[1:]):
            full[c] = x
        for eq, p in zip(self.equations, self.pivots):
            value = sum(
                (eq[c] * full[c] for c in range(self.ambient_dim + 1) if c != p), 0
            )
            full[p] = _simplify(-value / eq[p])
        return tuple(full)

    def lift_inequality(self, row: Sequence) -> Row:
        full = [Fraction(0)] * (self.ambient_dim + 1)
        full[0] = row[0]
        for c, x in zip(self.free, row[1:]):
            full[c] = x
        return tuple(full)


def restriction(rows: Sequence[Sequence], ambient_dim: int) -> Restriction:
    """Chart of the affine hull of homogeneous point/ray rows."""
    rows = _rows(rows)
    kernel = linalg.kernel([list(r) for r in rows], ambient_dim + 1) if rows else []
    if kernel:
        basis, pivots = equation_basis(kernel)
    else:
        basis, pivots = [], []
    free = tuple(c for c in range(1, ambient_dim + 1) if c not in set(pivots))
    return Restriction(ambient_dim, tuple(map(tuple, basis)), tuple(pivots), free)


# ---------------------------------------------------------------------------
# parametric coefficients


def specialize(h: HRep, t0) -> HRep:
    """Substitute ``t = t0`` in every Puiseux coefficient of ``h``."""

    def value(x):
        return evaluate(x, t0).unwrap()

    return HRep(
        tuple(tuple(value(x) for x in r) for r in h.inequalities),
        tuple(tuple(value(x) for x in r) for r in h.equations),
        h.ambient_dim,
    )


def describe(p: Polytope, with_points: bool = False) -> dict:
    """Summary numbers: vertices n, facets m, dimension d (and N_POINTS)."""
    from services.hull import facets, vertices

    info = {
        "ambient_dim": p.ambient_dim,
        "d": dimension(p),
        "n": len(vertices(p).points),
        "m": len(facets(p).inequalities),
        "bounded": is_bounded(p),
    }
    if with_points:
        from services.lattice import count

        info["n_points"] = count(p, "projection")
    return info
