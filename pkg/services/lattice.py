"""Lattice points of rational polytopes: enumeration, counting and integer hulls."""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

import config
from services.arith import is_rational
from services.lp import coordinate_bounds
from services.polyhedron import (
    HRep,
    Polytope,
    VRep,
    canonical_hrep,
    canonical_vrep,
    fourier_motzkin,
    irredundant_inequalities,
    irredundant_points,
    require_bounded,
)

logger = logging.getLogger(__name__)

type IntRow = tuple[int, ...]


class EnumerationMethod(StrEnum):
    BBOX = "bbox"
    PROJECTION = "projection"
    HILBERT = "hilbert"
    ZERO_ONE = "zero-one"


class PointLimitExceeded(ValueError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"enumeration exceeds the point limit of {limit}")

    def __reduce__(self):
        return type(self), (self.limit,)


@dataclass(frozen=True)
class LatticePointSet:
    """Sorted, distinct homogeneous integer rows ``(1, x)``."""

    points: tuple[IntRow, ...]
    method: str

    @classmethod
    def build(cls, points, method: str) -> LatticePointSet:
        rows = sorted({tuple(int(x) for x in p) for p in points})
        return cls(tuple(rows), str(method))

    @property
    def count(self) -> int:
        return len(self.points)

    def coordinates(self) -> list[IntRow]:
        return [p[1:] for p in self.points]


class _Collector:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.points: list[IntRow] = []

    def add(self, x: Sequence[int]) -> None:
        if self.limit is not None and len(self.points) >= self.limit:
            raise PointLimitExceeded(self.limit)
        self.points.append((1, *x))


def _limit(limit: int | None) -> int | None:
    return config.get_point_limit() if limit is None else limit


def _is_rational_polytope(p: Polytope) -> bool:
    if p.hrep is not None:
        return p.hrep.is_rational
    v = p.vrep
    return all(is_rational(x) for row in v.points + v.rays + v.lineality for x in row)


def _hrep(p: Polytope) -> HRep:
    if p.hrep is not None:
        return p.hrep
    from services.hull import facets

    return facets(p)


def integer_rows(rows) -> list[IntRow]:
    """Primitive integer versions of rational rows (positive rescaling)."""
    out = []
    for row in rows:
        if all(x == 0 for x in row):
            continue
        lcm = 1
        for x in row:
            if not is_rational(x):
                raise ValueError("lattice points need rational coefficients")
            lcm = math.lcm(lcm, Fraction(x).denominator)
        ints = [int(x * lcm) for x in row]
        g = math.gcd(*ints)
        out.append(tuple(v // g for v in ints))
    return out


def _satisfies(ineqs: list[IntRow], eqs: list[IntRow], x: Sequence[int]) -> bool:
    for row in ineqs:
        total = row[0]
        for a, xi in zip(row[1:], x):
            total += a * xi
        if total < 0:
            return False
    for row in eqs:
        total = row[0]
        for a, xi in zip(row[1:], x):
            total += a * xi
        if total != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# bounding box


def _scan_box(
    ineqs: list[IntRow], eqs: list[IntRow], ranges: list[tuple[int, int]]
) -> list[IntRow]:
    found = []
    for x in itertools.product(*(range(lo, hi + 1) for lo, hi in ranges)):
        if _satisfies(ineqs, eqs, x):
            found.append(x)
    return found


def enumerate_bbox(
    p: Polytope, *, limit: int | None = None, workers: int | None = None
) -> LatticePointSet:
    """Filter every integer point of the bounding box.

    With several workers the box is split into slabs along the first
    coordinate; the merged result does not depend on the worker count.
    """
    require_bounded(p, "bounding-box enumeration")
    limit = _limit(limit)
    workers = config.get_worker_count() if workers is None else workers
    h = canonical_hrep(_hrep(p))
    bounds = coordinate_bounds(h)
    if bounds.is_err:
        return LatticePointSet((), EnumerationMethod.BBOX)
    ranges = [(math.ceil(lo), math.floor(hi)) for lo, hi in bounds.value]
    if any(lo > hi for lo, hi in ranges):
        return LatticePointSet((), EnumerationMethod.BBOX)
    box = math.prod(hi - lo + 1 for lo, hi in ranges)
    if limit is not None and box > limit:
        raise PointLimitExceeded(limit)
    logger.info("enumerate_bbox: %d candidates, %d workers", box, workers)

    ineqs = integer_rows(h.inequalities)
    eqs = integer_rows(h.equations)
    if h.ambient_dim == 0:
        found = [()] if _satisfies(ineqs, eqs, ()) else []
    elif workers <= 1 or ranges[0][0] == ranges[0][1]:
        found = _scan_box(ineqs, eqs, ranges)
    else:
        lo0, hi0 = ranges[0]
        slabs = [[(v, v)] + ranges[1:] for v in range(lo0, hi0 + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _scan_box,
                itertools.repeat(ineqs),
                itertools.repeat(eqs),
                slabs,
            )
            found = [x for part in parts for x in part]

    collector = _Collector(limit)
    for x in found:
        collector.add(x)
    return LatticePointSet.build(collector.points, EnumerationMethod.BBOX)


# ---------------------------------------------------------------------------
# recursive projection


def _fiber(
    ineqs: list[IntRow], eqs: list[IntRow], prefix: Sequence[int]
) -> range:
    """Integer values of the next coordinate over a fixed integer prefix."""
    j = len(prefix) + 1
    low, high = None, None
    for row in ineqs:
        rest = row[0] + sum(a * x for a, x in zip(row[1:j], prefix))
        a = row[j]
        if a > 0:
            bound = -(rest // a)  # ceil(-rest / a)
            low = bound if low is None else max(low, bound)
        elif a < 0:
            bound = rest // -a
            high = bound if high is None else min(high, bound)
        elif rest < 0:
            return range(0)
    for row in eqs:
        rest = row[0] + sum(a * x for a, x in zip(row[1:j], prefix))
        a = row[j]
        if a == 0:
            if rest != 0:
                return range(0)
            continue
        if rest % a != 0:
            return range(0)
        value = -rest // a
        low = value if low is None else max(low, value)
        high = value if high is None else min(high, value)
    if low is None or high is None:
        raise ValueError("fiber is unbounded")
    return range(low, high + 1)


def projection_chain(p: Polytope) -> list[HRep]:
    """Systems S_1, ..., S_d: S_d describes p, S_j its projection to x1..xj.

    Projections are reduced against the projected vertices, which keeps the
    same facets as the LP redundancy test.
    """
    from services.hull import facets, vertices

    h = facets(p)
    d = h.ambient_dim
    if h.is_infeasible_marker:
        return [h]
    verts = vertices(p).points
    chain = [h]
    current = h
    for j in range(d - 1, 0, -1):
        projected = fourier_motzkin(current)
        shadow = [v[: j + 1] for v in verts]
        current = irredundant_inequalities(projected, points=shadow)
        logger.debug(
            "projection: dimension %d, %d inequalities, %d equations",
            j,
            len(current.inequalities),
            len(current.equations),
        )
        chain.append(current)
    chain.reverse()
    return chain


def enumerate_projection(p: Polytope, *, limit: int | None = None) -> LatticePointSet:
    """Lattice points in fibers over the lattice points of the projections."""
    require_bounded(p, "projection enumeration")
    limit = _limit(limit)
    chain = projection_chain(p)
    if chain[0].is_infeasible_marker:
        return LatticePointSet((), EnumerationMethod.PROJECTION)
    d = chain[-1].ambient_dim
    if d == 0:
        return LatticePointSet(((1,),), EnumerationMethod.PROJECTION)
    systems = [(integer_rows(s.inequalities), integer_rows(s.equations)) for s in chain]
    collector = _Collector(limit)

    def descend(prefix: list[int]) -> None:
        ineqs, eqs = systems[len(prefix)]
        for value in _fiber(ineqs, eqs, prefix):
            prefix.append(value)
            if len(prefix) == d:
                collector.add(prefix)
            else:
                descend(prefix)
            prefix.pop()

    descend([])
    logger.info("enumerate_projection: %d points", len(collector.points))
    return LatticePointSet.build(collector.points, EnumerationMethod.PROJECTION)


# ---------------------------------------------------------------------------
# 0/1 points


def enumerate_zero_one(h: HRep, *, limit: int | None = None) -> LatticePointSet:
    """All 0/1 points of ``h`` by depth-first coordinate fixing.

    A subtree is cut as soon as some inequality cannot be satisfied by the
    best completion of the free coordinates (or some equation cannot reach 0).
    """
    limit = _limit(limit)
    h = canonical_hrep(h)
    d = h.ambient_dim
    if h.is_infeasible_marker:
        return LatticePointSet((), EnumerationMethod.ZERO_ONE)
    ineqs = integer_rows(h.inequalities)
    eqs = integer_rows(h.equations)
    rows = ineqs + eqs
    n_ineq = len(ineqs)

    # best[r][j] / worst[r][j]: extreme contributions of coordinates j+1..d
    best = []
    worst = []
    for row in rows:
        hi = [0] * (d + 1)
        lo = [0] * (d + 1)
        for j in range(d - 1, -1, -1):
            a = row[j + 1]
            hi[j] = hi[j + 1] + max(a, 0)
            lo[j] = lo[j + 1] + min(a, 0)
        best.append(hi)
        worst.append(lo)

    collector = _Collector(limit)
    x: list[int] = []

    def feasible(partial: list[int]) -> bool:
        j = len(partial)
        for r, row in enumerate(rows):
            s = row[0] + sum(a for a, xi in zip(row[1:], partial) if xi)
            if s + best[r][j] < 0:
                return False
            if r >= n_ineq and s + worst[r][j] > 0:
                return False
        return True

    def descend() -> None:
        if len(x) == d:
            collector.add(x)
            return
        for bit in (0, 1):
            x.append(bit)
            if feasible(x):
                descend()
            x.pop()

    if feasible(x):
        descend()
    logger.info(
        "enumerate_zero_one: %d points in dimension %d", len(collector.points), d
    )
    return LatticePointSet.build(collector.points, EnumerationMethod.ZERO_ONE)


# ---------------------------------------------------------------------------
# dispatch


def enumerate_points(
    p: Polytope, method: str = EnumerationMethod.PROJECTION, *, limit: int | None = None
) -> LatticePointSet:
    if not _is_rational_polytope(p):
        raise ValueError("lattice points need rational coefficients")
    match EnumerationMethod(method):
        case EnumerationMethod.BBOX:
            return enumerate_bbox(p, limit=limit)
        case EnumerationMethod.PROJECTION:
            return enumerate_projection(p, limit=limit)
        case EnumerationMethod.HILBERT:
            from services.hilbert import enumerate_via_hilbert

            return enumerate_via_hilbert(p, limit=limit)
        case EnumerationMethod.ZERO_ONE:
            return enumerate_zero_one(_hrep(p), limit=limit)


def count(
    p: Polytope, method: str = EnumerationMethod.PROJECTION, *, limit: int | None = None
) -> int:
    return enumerate_points(p, method, limit=limit).count


def integer_hull(
    p: Polytope, method: str = EnumerationMethod.PROJECTION, *, limit: int | None = None
) -> Polytope:
    """Convex hull of the lattice points of ``p``, with both representations."""
    from services.hull import beneath_beyond

    require_bounded(p, "integer hull")
    d = p.ambient_dim
    lattice = enumerate_points(p, method, limit=limit)
    if not lattice.count:
        return Polytope(hrep=HRep.infeasible(d), vrep=VRep((), ambient_dim=d))
    keep = irredundant_points(lattice.points)
    verts = canonical_vrep(VRep(tuple(lattice.points[i] for i in keep), ambient_dim=d))
    h, _ = beneath_beyond(verts.points, triangulate=False)
    logger.info(
        "integer_hull: %d lattice points, %d vertices, %d facets",
        lattice.count,
        len(verts.points),
        len(h.inequalities),
    )
    return Polytope(hrep=h, vrep=verts)
