"""Hilbert bases of pointed rational cones.

The cone is triangulated with the placing triangulation of its generators,
the lattice points of every fundamental parallelepiped are collected, and the
union is reduced to the irreducible elements.  Cones whose generators all have
a positive first coordinate are graded by it; the scan can then stop at a
degree bound, which is how lattice points of a polytope (degree 1 in its
homogenization cone) are read off.
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import config
from services import linalg
from services.lattice import LatticePointSet, PointLimitExceeded, integer_rows
from services.polyhedron import Cone, Polytope, require_bounded, restriction

logger = logging.getLogger(__name__)

type IntRow = tuple[int, ...]

DEGREE_BOUND_ERROR = "a degree bound needs generators with positive first coordinate"


class NotPointedError(ValueError):
    def __init__(self, lineality):
        self.lineality = tuple(lineality)
        super().__init__(
            "the cone is not pointed; lineality space of dimension "
            f"{len(self.lineality)}"
        )


@dataclass(frozen=True)
class HilbertBasis:
    elements: tuple[IntRow, ...]
    cone: Cone | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def degree(self, k: int) -> list[IntRow]:
        """Elements whose first coordinate equals ``k``."""
        return [e for e in self.elements if e[0] == k]


def _primitive(row) -> IntRow:
    return integer_rows([row])[0]


def _fill(weights: list[int], values: list[int], h: int, maximize: bool) -> Fraction:
    """Extreme of sum(l_i v_i) over sum(l_i w_i) = h, 0 <= l_i <= 1."""
    items = sorted(
        range(len(weights)),
        key=lambda i: Fraction(values[i], weights[i]),
        reverse=maximize,
    )
    room = Fraction(h)
    total = Fraction(0)
    for i in items:
        if room == 0:
            break
        take = min(Fraction(1), room / weights[i])
        total += take * values[i]
        room -= take * weights[i]
    return total


def _slab_ranges(gens: list[IntRow], h: int | None) -> list[range]:
    """Integer box containing the parallelepiped (at degree ``h`` when given)."""
    n = len(gens[0])
    if h is None:
        return [
            range(sum(min(0, g[c]) for g in gens), sum(max(0, g[c]) for g in gens) + 1)
            for c in range(n)
        ]
    weights = [g[0] for g in gens]
    ranges = [range(h, h + 1)]
    for c in range(1, n):
        values = [g[c] for g in gens]
        lo = _fill(weights, values, h, maximize=False)
        hi = _fill(weights, values, h, maximize=True)
        ranges.append(range(math.ceil(lo), math.floor(hi) + 1))
    return ranges


def _simplicial(gens: list[IntRow], max_degree: int | None) -> list[IntRow]:
    """Irreducible elements of one simplicial cone (all of them up to the bound)."""
    n = len(gens)
    g = [list(r) for r in gens]
    det = int(linalg.det(g))
    if det == 0:
        raise ValueError("simplicial cone generators are linearly dependent")
    inv = linalg.inverse(g)
    adj = [[int(det * x) for x in row] for row in inv]
    columns = [tuple(adj[c][i] for c in range(n)) for i in range(n)]
    sign = 1 if det > 0 else -1
    size = abs(det)

    def coefficients(z) -> tuple[int, ...]:
        return tuple(
            sign * sum(zc * a for zc, a in zip(z, col) if zc) for col in columns
        )

    graded = all(r[0] > 0 for r in gens)
    if graded:
        top = sum(r[0] for r in gens) - 1
        if max_degree is not None:
            top = min(top, max_degree)
        slabs = [_slab_ranges(gens, h) for h in range(1, top + 1)]
    else:
        if max_degree is not None:
            raise ValueError(DEGREE_BOUND_ERROR)
        slabs = [_slab_ranges(gens, None)]

    found: dict[IntRow, tuple[int, ...]] = {}
    for ranges in slabs:
        for z in itertools.product(*ranges):
            lam = coefficients(z)
            if all(0 <= x < size for x in lam) and any(lam):
                found[z] = lam
    for i, r in enumerate(gens):
        if max_degree is None or not graded or r[0] <= max_degree:
            found[tuple(r)] = tuple(size if j == i else 0 for j in range(n))

    elements = sorted(found, key=lambda z: (sum(found[z]), z))
    basis: list[IntRow] = []
    for z in elements:
        lz = found[z]
        if not any(
            all(a <= b for a, b in zip(found[y], lz)) for y in basis
        ):
            basis.append(z)
    return basis


def hilbert_basis_simplicial(generators, max_degree: int | None = None) -> HilbertBasis:
    """Hilbert basis of the cone spanned by linearly independent generators."""
    gens = [_primitive(r) for r in generators]
    n = len(gens[0]) if gens else 0
    if len(gens) != n or linalg.rank([list(r) for r in gens]) != n:
        raise ValueError(
            "simplicial cone needs n linearly independent generators in R^n"
        )
    basis = _simplicial(gens, max_degree)
    return HilbertBasis(tuple(sorted(basis)), Cone(n, generators=tuple(gens)))


def _generators(c: Cone) -> tuple[list[IntRow], tuple]:
    if c.is_generated:
        return [_primitive(r) for r in c.generators], c.lineality
    from services.hull import double_description

    converted = double_description(c)
    return [_primitive(r) for r in converted.generators], converted.lineality


def _facet_rows(n: int, gens: list[IntRow]) -> list[IntRow]:
    from services.hull import double_description

    dual = double_description(Cone(n, inequalities=tuple(gens)))
    return [_primitive(r) for r in dual.generators]


def hilbert_basis(
    c: Cone, *, max_degree: int | None = None, workers: int | None = None
) -> HilbertBasis:
    """Hilbert basis of a pointed cone.

    Lower-dimensional cones are handled in lattice coordinates of their
    linear span.

    With ``max_degree`` only elements of first coordinate at most that bound
    are produced (all generators must then have a positive first coordinate).
    """
    from services.hull import beneath_beyond

    n = c.ambient_dim
    gens, lineality = _generators(c)
    if lineality:
        raise NotPointedError(lineality)
    if not gens:
        return HilbertBasis((), c)
    workers = config.get_worker_count() if workers is None else workers
    if linalg.rank([list(g) for g in gens]) != n:
        return _in_linear_span(c, gens, max_degree, workers)

    facets = _facet_rows(n, gens)
    graded = all(g[0] > 0 for g in gens)
    if graded:
        grading = [1] + [0] * (n - 1)
    else:
        if max_degree is not None:
            raise ValueError(DEGREE_BOUND_ERROR)
        grading = [sum(col) for col in zip(*facets)]

    # placing triangulation of the cross-section {grading . x = 1}
    section = []
    for g in gens:
        w = sum(a * b for a, b in zip(grading, g))
        section.append((Fraction(1), *(Fraction(x, w) for x in g)))
    _, tri = beneath_beyond(section)
    index = {row: i for i, row in enumerate(section)}
    simplices = [[gens[index[tri.vertices[j]]] for j in s] for s in tri.simplices]
    logger.info("hilbert_basis: %d generators, %d simplices", len(gens), len(simplices))

    if workers > 1 and len(simplices) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_simplicial, simplices, itertools.repeat(max_degree)))
    else:
        parts = [_simplicial(s, max_degree) for s in simplices]

    candidates = sorted({z for part in parts for z in part})
    values = {
        z: tuple(sum(a * b for a, b in zip(f, z)) for f in facets) for z in candidates
    }
    degree = {z: sum(a * b for a, b in zip(grading, z)) for z in candidates}
    candidates.sort(key=lambda z: (degree[z], z))

    basis: list[IntRow] = []
    for z in candidates:
        vz = values[z]
        reducible = any(
            degree[y] < degree[z] and all(a <= b for a, b in zip(values[y], vz))
            for y in basis
        )
        if not reducible:
            basis.append(z)
    logger.debug(
        "hilbert_basis: %d candidates, %d irreducible", len(candidates), len(basis)
    )
    return HilbertBasis(tuple(sorted(basis)), c)


def _in_linear_span(
    c: Cone, gens: list[IntRow], max_degree: int | None, workers: int
) -> HilbertBasis:
    if max_degree is not None and not all(g[0] > 0 for g in gens):
        raise ValueError(DEGREE_BOUND_ERROR)
    n = c.ambient_dim
    normals = integer_rows(linalg.kernel([list(g) for g in gens], n))
    basis = linalg.integer_kernel([list(r) for r in normals], n)
    columns = linalg.transpose([list(b) for b in basis])
    coords = tuple(
        tuple(int(x) for x in linalg.solve(columns, list(g))) for g in gens
    )
    logger.debug("hilbert_basis: cone spans a rank %d sublattice", len(basis))
    local = hilbert_basis(Cone(len(basis), generators=coords), workers=workers)
    elements = [
        tuple(sum(zi * b[j] for zi, b in zip(z, basis)) for j in range(n))
        for z in local.elements
    ]
    if max_degree is not None:
        elements = [e for e in elements if e[0] <= max_degree]
    return HilbertBasis(tuple(sorted(elements)), c)


def enumerate_via_hilbert(p: Polytope, *, limit: int | None = None) -> LatticePointSet:
    """Lattice points of ``p`` as the degree-1 Hilbert basis elements of its cone."""
    from services.hull import vertices

    require_bounded(p, "hilbert enumeration")
    limit = config.get_point_limit() if limit is None else limit
    verts = vertices(p)
    if verts.is_empty:
        return LatticePointSet((), "hilbert")
    d = p.ambient_dim
    chart = restriction(verts.points, d)
    k = chart.dimension

    if k == 0:
        candidates = [(1,)]
    else:
        gens = tuple(_primitive(chart.project(v)) for v in verts.points)
        basis = hilbert_basis(Cone(k + 1, generators=gens), max_degree=1)
        candidates = basis.degree(1)

    points = []
    for y in candidates:
        full = chart.lift_point(y)
        if all(Fraction(x).denominator == 1 for x in full):
            if limit is not None and len(points) >= limit:
                raise PointLimitExceeded(limit)
            points.append(full)
    logger.info("enumerate_via_hilbert: %d points", len(points))
    return LatticePointSet.build(points, "hilbert")
