"""Representation conversion: double description and beneath-and-beyond.

Double description is the dual incremental method: it keeps the extreme rays
of the cone cut out by the inequalities processed so far, together with the
set of processed inequalities each ray satisfies with equality.
Beneath-and-beyond is the primal incremental method: it keeps the facets of
the hull of the points placed so far and, optionally, the placing
triangulation.

Rational inputs are scaled to primitive integer vectors internally so the
inner loops run on Python ints; Puiseux inputs use field arithmetic.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

import config
from services import linalg
from services.arith import is_rational
from services.polyhedron import (
    Cone,
    HRep,
    Polytope,
    Row,
    Rows,
    UnboundedError,
    VRep,
    canonical_hrep,
    canonical_vrep,
    canonicalize_row,
    dehomogenize,
    homogenize,
    irredundant_inequalities,
    irredundant_points,
    is_bounded,
    polar,
    require_bounded,
    restriction,
    translate_hrep,
    translate_points,
)
from services.rng import XorShift64Star

logger = logging.getLogger(__name__)

type Adjacency = Literal["combinatorial", "algebraic"]

ALGORITHMS = ("dd", "bb")


# ---------------------------------------------------------------------------
# vector helpers


def _dot(u, v):
    total = 0
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def _integerize(row) -> list:
    """Positive rescaling to a primitive integer vector (rationals only)."""
    if not all(is_rational(x) for x in row):
        return _normalize(list(row))
    lcm = 1
    for x in row:
        lcm = math.lcm(lcm, Fraction(x).denominator)
    ints = [int(Fraction(x) * lcm) for x in row]
    g = math.gcd(*ints)
    return [v // g for v in ints] if g > 1 else ints


def _normalize(v: list) -> list:
    if all(isinstance(x, int) for x in v):
        g = math.gcd(*v)
        return [x // g for x in v] if g > 1 else v
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        return v
    scale = Fraction(abs(lead)) if isinstance(lead, int) else abs(lead)
    return [x / scale for x in v]


def _combine(a, u, b, v) -> list:
    """``a*u + b*v`` componentwise."""
    return [a * x + b * y for x, y in zip(u, v)]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# insertion orders


@dataclass(frozen=True)
class InsertionOrder:
    variant: Literal["given", "random", "vertices_first", "lex"] = "given"
    seed: int = 0

    _SYNTAX = re.compile(r"^(given|lex|vertices-first|random:(\d+))$")

    @classmethod
    def parse(cls, text: str) -> InsertionOrder:
        """Parse ``given|random:<seed>|vertices-first|lex``."""
        m = cls._SYNTAX.match(text.strip())
        if m is None:
            raise ValueError(
                f"invalid insertion order {text!r}; "
                "use given, lex, vertices-first or random:<seed>"
            )
        if m.group(2) is not None:
            return cls("random", int(m.group(2)))
        return cls(m.group(1).replace("-", "_"))

    def __str__(self) -> str:
        if self.variant == "random":
            return f"random:{self.seed}"
        return self.variant.replace("_", "-")


def order_permutation(points: Rows, order: InsertionOrder) -> list[int]:
    n = len(points)
    if order.variant == "given":
        return list(range(n))
    if order.variant == "random":
        return XorShift64Star(order.seed).shuffle(list(range(n)))
    if order.variant == "lex":
        return sorted(range(n), key=lambda i: points[i])
    if order.variant == "vertices_first":
        first = irredundant_points(points)
        chosen = set(first)
        return first + [i for i in range(n) if i not in chosen]
    raise ValueError(f"unknown insertion order {order.variant}")


def apply_order(points, order: InsertionOrder) -> Rows:
    rows = tuple(tuple(r) for r in points)
    return tuple(rows[i] for i in order_permutation(rows, order))


# ---------------------------------------------------------------------------
# double description


@dataclass
class RayRecord:
    ray: list
    active_set: int  # bit i set <=> inequality i is tight


def _adjacent(
    p: RayRecord,
    q: RayRecord,
    rays: list[RayRecord],
    rows: list,
    k: int,
    adjacency: Adjacency,
) -> bool:
    common = p.active_set & q.active_set
    if common.bit_count() < k - 2:
        return False
    if adjacency == "algebraic":
        sub = [rows[i] for i in _bits(common)]
        return linalg.rank(sub) == k - 2 if sub else k == 2
    hits = 0
    for r in rays:
        if r.active_set & common == common:
            hits += 1
            if hits > 2:
                return False
    return True


def double_description(
    cone: Cone,
    *,
    adjacency: Adjacency = "combinatorial",
    maxcutoff: bool = False,
) -> Cone:
    """Extreme rays and lineality of ``{x : A x >= 0, E x = 0}``."""
    n = cone.ambient_dim
    ineqs = [list(r) for r in cone.inequalities]
    eqs = [list(r) for r in cone.equations]

    lineality = linalg.kernel(ineqs + eqs, n)
    lin_rows = _canonical_lineality(lineality)
    span = linalg.kernel(eqs + lineality, n)
    k = len(span)
    if k == 0:
        return Cone(n, generators=(), lineality=lin_rows)

    span = [_integerize(w) for w in span]
    reduced: dict[int, list] = {}
    for i, a in enumerate(ineqs):
        row = [_dot(a, w) for w in span]
        if any(x != 0 for x in row):
            reduced[i] = _integerize(row)

    pending = list(reduced)
    basis_local = linalg.independent_rows([reduced[i] for i in pending], k)
    basis = [pending[j] for j in basis_local]
    inv = linalg.inverse([reduced[i] for i in basis])
    full = 0
    for i in basis:
        full |= 1 << i
    rays = [
        RayRecord(_integerize([inv[r][j] for r in range(k)]), full & ~(1 << basis[j]))
        for j in range(k)
    ]
    chosen = set(basis)
    pending = [i for i in pending if i not in chosen]

    while pending:
        if maxcutoff:
            i = max(
                pending,
                key=lambda c: (sum(1 for r in rays if _dot(reduced[c], r.ray) < 0), -c),
            )
            pending.remove(i)
        else:
            i = pending.pop(0)
        a = reduced[i]
        plus, zero, minus = [], [], []
        values = {}
        for r in rays:
            s = _dot(a, r.ray)
            values[id(r)] = s
            (plus if s > 0 else zero if s == 0 else minus).append(r)
        bit = 1 << i
        for r in zero:
            r.active_set |= bit
        if not minus:
            continue
        created = []
        for p in plus:
            sp = values[id(p)]
            for q in minus:
                if not _adjacent(p, q, rays, reduced, k, adjacency):
                    continue
                sq = values[id(q)]
                y = _normalize(_combine(sp, q.ray, -sq, p.ray))
                created.append(RayRecord(y, (p.active_set & q.active_set) | bit))
        logger.debug(
            "dd: row %d, rays +%d 0%d -%d, created %d",
            i,
            len(plus),
            len(zero),
            len(minus),
            len(created),
        )
        rays = plus + zero + created

    columns = list(zip(*span))
    generators = {canonicalize_row([_dot(r.ray, col) for col in columns]) for r in rays}
    return Cone(n, generators=tuple(sorted(generators)), lineality=lin_rows)


def _canonical_lineality(rows: list) -> Rows:
    if not rows:
        return ()
    basis, _ = linalg.rref(rows)
    return tuple(sorted(canonicalize_row(r, equation=True) for r in basis))


# ---------------------------------------------------------------------------
# beneath and beyond


@dataclass
class Triangulation:
    vertices: Rows
    simplices: list[tuple[int, ...]] = field(default_factory=list)
    facets: list[tuple[Row, tuple[int, ...]]] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.simplices)


@dataclass
class _Facet:
    normal: list
    incidence: int


class _PlacingState:
    """Facets, boundary complex and simplices of the current hull."""

    def __init__(self, points: list, k: int, triangulate: bool, adjacency: Adjacency):
        self.points = points
        self.k = k
        self.triangulate = triangulate
        self.adjacency = adjacency
        self.facets: dict[int, _Facet] = {}
        self.next_facet = 0
        self.simplices: list[tuple[int, ...]] = []
        self.boundary: dict[int, tuple[tuple[int, ...], int]] = {}
        self.by_facet: dict[int, set[int]] = {}
        self.faces: dict[frozenset, set[int]] = {}
        self.next_boundary = 0

    def add_facet(self, normal: list, incidence: int) -> int:
        fid = self.next_facet
        self.next_facet += 1
        self.facets[fid] = _Facet(normal, incidence)
        self.by_facet[fid] = set()
        return fid

    def add_boundary(self, simplex: tuple[int, ...], fid: int) -> None:
        sid = self.next_boundary
        self.next_boundary += 1
        self.boundary[sid] = (simplex, fid)
        self.by_facet[fid].add(sid)
        for drop in range(len(simplex)):
            key = frozenset(simplex[:drop] + simplex[drop + 1 :])
            self.faces.setdefault(key, set()).add(sid)

    def remove_boundary(self, sid: int) -> tuple[tuple[int, ...], int]:
        simplex, fid = self.boundary.pop(sid)
        self.by_facet.get(fid, set()).discard(sid)
        for drop in range(len(simplex)):
            key = frozenset(simplex[:drop] + simplex[drop + 1 :])
            owners = self.faces[key]
            owners.discard(sid)
            if not owners:
                del self.faces[key]
        return simplex, fid

    def start(self, basis: list[int]) -> None:
        if self.triangulate:
            self.simplices.append(tuple(basis))
        full = 0
        for b in basis:
            full |= 1 << b
        for j in basis:
            others = [b for b in basis if b != j]
            normal = linalg.kernel([self.points[b] for b in others], self.k + 1)[0]
            normal = _integerize(normal)
            if _dot(normal, self.points[j]) < 0:
                normal = [-x for x in normal]
            fid = self.add_facet(normal, full & ~(1 << j))
            if self.triangulate:
                self.add_boundary(tuple(others), fid)

    def is_ridge(self, common: int, f: int, g: int) -> bool:
        if common.bit_count() < self.k - 1:
            return False
        if self.adjacency == "algebraic":
            sub = [self.points[i] for i in _bits(common)]
            return linalg.rank(sub) == self.k - 1 if sub else self.k == 1
        for hid, h in self.facets.items():
            if hid != f and hid != g and h.incidence & common == common:
                return False
        return True

    def insert(self, q: int) -> None:
        pt = self.points[q]
        bit = 1 << q
        values = {fid: _dot(f.normal, pt) for fid, f in self.facets.items()}
        visible = [fid for fid, v in values.items() if v < 0]
        if not visible:
            on = [fid for fid, v in values.items() if v == 0]
            for fid in on:
                self.facets[fid].incidence |= bit
            if self.triangulate and on:
                carrier = self._carrier(q, on)
                if carrier is not None:
                    self._subdivide(q, carrier)
            return

        visible_set = set(visible)
        replacement: dict[tuple[int, int], int] = {}
        created: list[tuple[list, int, tuple[int, int]]] = []
        for f in visible:
            ff = self.facets[f]
            vf = values[f]
            for g, vg in values.items():
                if g in visible_set:
                    continue
                fg = self.facets[g]
                common = ff.incidence & fg.incidence
                if not self.is_ridge(common, f, g):
                    continue
                if vg == 0:
                    replacement[(f, g)] = g
                else:
                    normal = _normalize(_combine(vg, ff.normal, -vf, fg.normal))
                    created.append((normal, common | bit, (f, g)))

        for fid, v in values.items():
            if v == 0:
                self.facets[fid].incidence |= bit
        for normal, incidence, pair in created:
            replacement[pair] = self.add_facet(normal, incidence)

        if self.triangulate:
            self._retriangulate(q, visible_set, replacement)
        for f in visible:
            del self.facets[f]
            self.by_facet.pop(f, None)
        logger.debug(
            "bb: point %d sees %d facets, %d new, %d facets total",
            q,
            len(visible),
            len(created),
            len(self.facets),
        )

    def _carrier(self, q: int, on: list[int]) -> tuple[int, ...] | None:
        """Vertices of the boundary face holding ``q`` in its relative interior."""
        pt = self.points[q]
        for fid in on:
            for sid in sorted(self.by_facet[fid]):
                tau, _ = self.boundary[sid]
                columns = linalg.transpose([self.points[i] for i in tau])
                weights = linalg.solve(columns, pt)
                if weights is not None and all(w >= 0 for w in weights):
                    return tuple(i for i, w in zip(tau, weights) if w > 0)
        return None

    def _subdivide(self, q: int, carrier: tuple[int, ...]) -> None:
        """Stellar subdivision at ``q`` of every simplex containing ``carrier``."""
        face = set(carrier)
        simplices = []
        for simplex in self.simplices:
            if face <= set(simplex):
                simplices += [
                    tuple(i for i in simplex if i != v) + (q,) for v in carrier
                ]
            else:
                simplices.append(simplex)
        self.simplices = simplices
        touched = [sid for sid, (tau, _) in self.boundary.items() if face <= set(tau)]
        for sid in touched:
            tau, fid = self.remove_boundary(sid)
            for v in carrier:
                self.add_boundary(tuple(i for i in tau if i != v) + (q,), fid)

    def _retriangulate(self, q, visible_set, replacement) -> None:
        doomed = [sid for f in visible_set for sid in self.by_facet.get(f, ())]
        doomed_set = set(doomed)
        horizon = []
        for sid in doomed:
            simplex, f = self.boundary[sid]
            self.simplices.append(simplex + (q,))
            for drop in range(len(simplex)):
                tau = simplex[:drop] + simplex[drop + 1 :]
                owners = self.faces.get(frozenset(tau), set())
                for other in owners:
                    if other not in doomed_set:
                        g = self.boundary[other][1]
                        horizon.append((tau, replacement[(f, g)]))
        for sid in doomed:
            self.remove_boundary(sid)
        for tau, fid in horizon:
            self.add_boundary(tau + (q,), fid)


def beneath_beyond(
    points,
    order: InsertionOrder | None = None,
    *,
    triangulate: bool = True,
    adjacency: Adjacency = "combinatorial",
) -> tuple[HRep, Triangulation | None]:
    """Facets of conv(points) and a placing triangulation.

    ``points`` are homogeneous rows ``(1, x)``.  Points inside the current
    hull leave the triangulation unchanged; points on its boundary are
    placed by subdividing the simplices around the face that holds them.
    """
    rows = apply_order(points, order or InsertionOrder())
    seen: set[Row] = set()
    ordered: list[Row] = []
    for r in rows:
        if r not in seen:
            seen.add(r)
            ordered.append(r)
    if not ordered:
        raise ValueError("beneath_beyond needs at least one point")
    d = len(ordered[0]) - 1

    chart = restriction(ordered, d)
    k = chart.dimension
    local = [_integerize(chart.project(r)) for r in ordered]
    tri = Triangulation(tuple(ordered)) if triangulate else None

    if k == 0:
        if tri is not None:
            tri.simplices.append((0,))
        return canonical_hrep(HRep((), chart.equations, d)), tri

    state = _PlacingState(local, k, triangulate, adjacency)
    basis = linalg.independent_rows(local, k + 1)
    state.start(basis)
    placed = set(basis)
    for q in range(len(local)):
        if q not in placed:
            state.insert(q)

    ineqs = []
    for f in state.facets.values():
        ineqs.append(chart.lift_inequality(f.normal))
    hrep = canonical_hrep(HRep(tuple(ineqs), chart.equations, d))
    if tri is not None:
        tri.simplices = state.simplices
        for f in state.facets.values():
            normal = canonicalize_row(chart.lift_inequality(f.normal))
            tri.facets.append((normal, tuple(_bits(f.incidence))))
    logger.info(
        "beneath_beyond: %d points, dim %d, %d facets%s",
        len(ordered),
        k,
        len(hrep.inequalities),
        f", {tri.size} simplices" if tri is not None else "",
    )
    return hrep, tri


# ---------------------------------------------------------------------------
# dispatch


def _algorithm(algorithm: str | None) -> str:
    algorithm = algorithm or config.get_default_algorithm()
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown hull algorithm {algorithm!r}; use dd or bb")
    return algorithm


def _facets_dd(v: VRep) -> HRep:
    d = v.ambient_dim
    dual = Cone(d + 1, inequalities=v.points + v.rays, equations=v.lineality)
    result = double_description(dual)
    # the far row 1 >= 0 has a zero normal and is dropped here
    return canonical_hrep(HRep(result.generators, result.lineality, d))


def facets(
    p: Polytope,
    algorithm: str | None = None,
    order: InsertionOrder | None = None,
) -> HRep:
    """Irredundant canonical H-representation of ``p``."""
    algorithm = _algorithm(algorithm)
    key = f"facets:{algorithm}:{order or ''}"

    def compute() -> HRep:
        v = p.vrep
        if v is None:
            verts = vertices(p, algorithm)
            if verts.is_empty:
                return HRep.infeasible(p.ambient_dim)
            return irredundant_inequalities(
                p.hrep, points=verts.points + verts.rays + verts.lineality
            )
        if v.is_empty:
            return HRep.infeasible(p.ambient_dim)
        if algorithm == "bb" and v.is_bounded:
            h, _ = beneath_beyond(v.points, order, triangulate=False)
            return h
        if algorithm == "bb":
            logger.warning("bb needs a bounded point set; using dd")
        return _facets_dd(v)

    h = p.cached(key, compute)
    p.set_hrep(h)
    return h


def _vertices_dd(h: HRep) -> VRep:
    cone = double_description(homogenize(Polytope(hrep=h)))
    v = dehomogenize(cone).vrep
    if v.is_empty:
        return VRep((), ambient_dim=h.ambient_dim)
    return canonical_vrep(v)


def _interior_point(h: HRep):
    """A point strictly inside every inequality, or None."""
    from services.lp import LinearProgram, LpStatus, solve_lp

    d = h.ambient_dim
    rows = [tuple(r) + (Fraction(-1),) for r in h.inequalities]
    cap = (Fraction(1),) + (Fraction(0),) * d + (Fraction(-1),)
    eqs = [tuple(r) + (Fraction(0),) for r in h.equations]
    objective = (Fraction(0),) * (d + 1) + (Fraction(1),)
    region = HRep(tuple(rows) + (cap,), tuple(eqs), d + 1)
    result = solve_lp(LinearProgram(region, objective))
    if result.status is not LpStatus.OPTIMAL or result.optimal_value <= 0:
        return None
    return result.optimal_vertex[:d]


def _vertices_bb(h: HRep) -> VRep | None:
    if h.equations or not h.is_rational:
        return None
    center = _interior_point(h)
    if center is None:
        return None
    moved = translate_hrep(h, center)
    dual_points = polar(moved.inequalities)
    dual_facets, _ = beneath_beyond(dual_points, triangulate=False)
    if dual_facets.equations:
        return None
    pts = translate_points(polar(dual_facets.inequalities), center)
    return canonical_vrep(VRep(pts, ambient_dim=h.ambient_dim))


def vertices(p: Polytope, algorithm: str | None = None) -> VRep:
    """Irredundant canonical V-representation of ``p``."""
    algorithm = _algorithm(algorithm)

    def compute() -> VRep:
        h = p.hrep
        if h is None:
            # double conversion prunes redundant points and rays
            h = facets(p, algorithm)
        if h.is_infeasible_marker:
            return VRep((), ambient_dim=p.ambient_dim)
        if algorithm == "bb":
            if is_bounded(Polytope(hrep=h)):
                result = _vertices_bb(h)
                if result is not None:
                    return result
            logger.warning(
                "bb on the polar needs a full-dimensional polytope; using dd"
            )
        return _vertices_dd(h)

    v = p.cached(f"vertices:{algorithm}", compute)
    p.set_vrep(v)
    return v


def triangulation(p: Polytope, order: InsertionOrder | None = None) -> Triangulation:
    v = p.vrep if p.vrep is not None else vertices(p)
    if not v.is_bounded:
        raise UnboundedError("only bounded polytopes are triangulated")
    if v.is_empty:
        return Triangulation(())
    _, tri = beneath_beyond(v.points, order)
    return tri


def volume(p: Polytope):
    """Volume in the coordinates of the affine-hull chart.

    For full-dimensional polytopes this is the Euclidean volume.
    """
    require_bounded(p, "volume")
    tri = triangulation(p)
    if not tri.vertices:
        return Fraction(0)
    d = len(tri.vertices[0]) - 1
    chart = restriction(tri.vertices, d)
    k = chart.dimension
    local = [chart.project(r) for r in tri.vertices]
    total = Fraction(0)
    for simplex in tri.simplices:
        total = total + abs(linalg.det([list(local[i]) for i in simplex]))
    return total / math.factorial(k)
