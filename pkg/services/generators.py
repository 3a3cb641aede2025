"""Constructors for the benchmark polytope families."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import networkx as nx

import config
from services.arith import PuiseuxFraction, Scalar, to_scalar
from services.polyhedron import HRep, Polytope
from services.rng import XorShift64Star

logger = logging.getLogger(__name__)

GRAPH_FAMILIES = ("P", "C", "K", "Gk")
RANDOM_BOX_SIDE = 5


class InvalidParameter(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes ``0..node_count-1``.

    Edge ``i`` is ``edges[i]``, stored with the smaller endpoint first.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]
    name: str = ""

    def __post_init__(self):
        normalized = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidParameter(f"loop at node {u}")
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise InvalidParameter(f"edge ({u}, {v}) out of range")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise InvalidParameter(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def from_networkx(cls, g: nx.Graph, name: str = "") -> Graph:
        g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
        return cls(g.number_of_nodes(), tuple(edges), name)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.node_count))
        g.add_edges_from(self.edges)
        return g

    def incident(self, v: int) -> list[int]:
        """Indices of the edges in delta(v)."""
        return [i for i, e in enumerate(self.edges) if v in e]


@dataclass(frozen=True)
class SiteSet:
    sites: tuple[tuple[Fraction, ...], ...]
    seed: int | None = None
    dim: int = field(init=False)

    def __post_init__(self):
        if not self.sites:
            raise InvalidParameter("a site set needs at least one site")
        object.__setattr__(self, "dim", len(self.sites[0]))


# ---------------------------------------------------------------------------
# knapsacks


def fractional_knapsack(coeffs) -> Polytope:
    """``{x >= 0 : b - sum a_i x_i >= 0}`` from ``(b, -a_1, ..., -a_d)``."""
    row = tuple(to_scalar(c) for c in coeffs)
    d = len(row) - 1
    if d < 1:
        raise InvalidParameter("fractional_knapsack needs at least one variable")
    if any(c >= 0 for c in row[1:]):
        logger.warning(
            "knapsack weights should be positive; the polytope may be unbounded"
        )
    nonneg = [
        tuple(Fraction(int(i == j)) for j in range(d + 1)) for i in range(1, d + 1)
    ]
    return Polytope(hrep=HRep(tuple(nonneg) + (row,), (), d))


def fibonacci_weights(d: int) -> list[int]:
    weights = [2, 3]
    while len(weights) < d:
        weights.append(weights[-2] + weights[-1])
    return weights[:d]


def fibonacci_knapsack(d: int, b: int) -> Polytope:
    """F_d(b): weights 2, 3, 5, 8, ... and right-hand side ``b``."""
    if d < 1:
        raise InvalidParameter("d must be positive")
    return fractional_knapsack([b] + [-a for a in fibonacci_weights(d)])


# ---------------------------------------------------------------------------
# graphs and cut polytopes


def asymmetric_graph(k: int) -> nx.Graph:
    """G_k: a 4-cycle 0-1-2-3 with one pendant edge at node 0 and a pendant
    path of length k+1 at node 1 (k+6 nodes, k+6 edges)."""
    g = nx.cycle_graph(4)
    g.add_edge(0, 4)
    nx.add_path(g, [1] + list(range(5, 6 + k)))
    return g


def graph_families(name: str, k: int) -> Graph:
    match name:
        case "P":
            if k < 1:
                raise InvalidParameter("paths need k >= 1")
            g = nx.path_graph(k)
        case "C":
            if k < 3:
                raise InvalidParameter("cycles need k >= 3")
            g = nx.cycle_graph(k)
        case "K":
            if k < 1:
                raise InvalidParameter("complete graphs need k >= 1")
            g = nx.complete_graph(k)
        case "Gk":
            if k < 0:
                raise InvalidParameter("G_k needs k >= 0")
            g = asymmetric_graph(k)
        case _:
            raise InvalidParameter(
                f"unknown graph family {name!r}; use one of {', '.join(GRAPH_FAMILIES)}"
            )
    return Graph.from_networkx(g, f"{name}{k}")


def edge_list(path: str | Path) -> Graph:
    """Graph from a text file of ``u v`` lines (``#`` starts a comment)."""
    path = Path(path)
    try:
        g = nx.read_edgelist(path, nodetype=int, comments="#")
    except (TypeError, ValueError) as e:
        raise InvalidParameter(f"cannot read edge list {path}: {e}") from e
    if nx.number_of_selfloops(g):
        raise InvalidParameter("edge list contains a loop")
    return Graph.from_networkx(g, path.stem)


def parse_graph(text: str) -> Graph:
    """``P:9``, ``C:9``, ``K:6``, ``Gk:4`` or ``file:<path>``."""
    family, sep, arg = text.partition(":")
    if not sep:
        raise InvalidParameter(f"graph must look like FAMILY:K, got {text!r}")
    if family == "file":
        return edge_list(arg)
    try:
        k = int(arg)
    except ValueError as e:
        raise InvalidParameter(f"graph parameter must be an integer: {arg!r}") from e
    return graph_families(family, k)


def cut_polytope(g: Graph) -> Polytope:
    """Convex hull of the incidence vectors of all cuts of ``g``.

    Node 0 is kept on one side, so each of the 2^(n-1) bipartitions is
    enumerated once; the empty cut is the origin.
    """
    limit = config.get_cut_node_limit()
    if g.node_count > limit:
        raise InvalidParameter(
            f"cut polytope of {g.node_count} nodes exceeds the limit of {limit}"
        )
    if g.node_count < 1:
        raise InvalidParameter("cut polytope needs at least one node")
    points = []
    seen = set()
    for mask in range(1 << (g.node_count - 1)):
        side = mask << 1  # bit v set: node v is on the far side
        chi = tuple(((side >> u) ^ (side >> v)) & 1 for u, v in g.edges)
        if chi not in seen:
            seen.add(chi)
            points.append(chi)
    logger.info(
        "cut_polytope %s: %d points, dimension %d", g.name, len(points), len(g.edges)
    )
    return Polytope.from_points(points, len(g.edges))


# ---------------------------------------------------------------------------
# other families


def klee_minty(d: int, t: Scalar | None = None) -> Polytope:
    """The t-perturbed unit cube (symbolic ``t`` by default)."""
    if d < 1:
        raise InvalidParameter("klee_minty needs d >= 1")
    t = PuiseuxFraction.t() if t is None else to_scalar(t)
    zero, one = Fraction(0), Fraction(1)

    def row(entries: dict[int, Scalar]) -> tuple:
        return tuple(entries.get(j, zero) for j in range(d + 1))

    rows = [row({1: one}), row({0: one, 1: -one})]
    for i in range(2, d + 1):
        rows.append(row({i - 1: -t, i: one}))
        rows.append(row({0: one, i - 1: -t, i: -one}))
    return Polytope(hrep=HRep(tuple(rows), (), d))


def voronoi_lift(s: SiteSet) -> Polytope:
    """Unbounded polyhedron in ``(x, delta)`` whose faces project to V(S)."""
    rows = []
    for site in s.sites:
        norm = sum((x * x for x in site), Fraction(0))
        rows.append((norm, *(-2 * x for x in site), Fraction(1)))
    return Polytope(hrep=HRep(tuple(rows), (), s.dim + 1))


def random_sites(d: int, m: int, seed: int) -> SiteSet:
    """``m`` dyadic sites in ``[-1, 1)^(d-1)``."""
    if d < 2 or m < 1:
        raise InvalidParameter("random_sites needs d >= 2 and m >= 1")
    rng = XorShift64Star(seed)
    sites = tuple(tuple(rng.dyadic() for _ in range(d - 1)) for _ in range(m))
    return SiteSet(sites, seed)


def random_box(d: int, n: int, seed: int) -> Polytope:
    """``n`` random lattice points of ``[0, 5]^d`` (the R(d, n) instances)."""
    if d < 1 or n < 1:
        raise InvalidParameter("random_box needs d >= 1 and n >= 1")
    rng = XorShift64Star(seed)
    points = [
        tuple(rng.integer(0, RANDOM_BOX_SIDE) for _ in range(d)) for _ in range(n)
    ]
    return Polytope.from_points(points, d)


def matching_polytope(g: Graph) -> Polytope:
    """Fractional matching polytope: x_e >= 0 and degree constraints."""
    m = len(g.edges)
    if m == 0:
        raise InvalidParameter("matching polytope of a graph without edges")
    rows = []
    for i in range(m):
        row = [Fraction(0)] * (m + 1)
        row[i + 1] = Fraction(1)
        rows.append(tuple(row))
    for v in range(g.node_count):
        row = [Fraction(0)] * (m + 1)
        row[0] = Fraction(1)
        for i in g.incident(v):
            row[i + 1] = Fraction(-1)
        rows.append(tuple(row))
    return Polytope(hrep=HRep(tuple(rows), (), m))


def hard_simplex(a: int, b: int, c: int) -> Polytope:
    """conv(0, e1, e2, e1+e2+a*e3, e1+e2+b*e4, e1+e2+c*e5)."""
    if min(a, b, c) < 1:
        raise InvalidParameter("hard_simplex parameters must be positive")
    for x, y in combinations((a, b, c), 2):
        if math.gcd(x, y) != 1:
            raise InvalidParameter(f"{x} and {y} are not coprime")
    points = [
        (0, 0, 0, 0, 0),
        (1, 0, 0, 0, 0),
        (0, 1, 0, 0, 0),
        (1, 1, a, 0, 0),
        (1, 1, 0, b, 0),
        (1, 1, 0, 0, c),
    ]
    return Polytope.from_points(points, 5)
