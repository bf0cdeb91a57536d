"""Framings of car(nu), route coherence and the DKK maximal cliques."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Mapping

import networkx as nx
import numpy as np

from . import _linalg
from .caracol import CaracolGraph, Edge, Route
from .lattice import digraph_to_dot


@dataclass(frozen=True)
class Framing:
    """Linear orders on in- and out-edges at every inner vertex (first = smallest)."""

    name: str
    in_orders: Mapping[int, tuple[Edge, ...]]
    out_orders: Mapping[int, tuple[Edge, ...]]
    _in_rank: dict = field(init=False, repr=False, compare=False)
    _out_rank: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_in_rank", {
            (v, e): k for v, order in self.in_orders.items() for k, e in enumerate(order)})
        object.__setattr__(self, "_out_rank", {
            (v, e): k for v, order in self.out_orders.items() for k, e in enumerate(order)})

    def in_rank(self, v: int, e: Edge) -> int:
        return self._in_rank[(v, e)]

    def out_rank(self, v: int, e: Edge) -> int:
        return self._out_rank[(v, e)]

    def is_valid_for(self, g: CaracolGraph) -> bool:
        for v in range(2, g.n + 1):
            if sorted(self.in_orders[v]) != sorted(g.in_edges(v)):
                return False
            if sorted(self.out_orders[v]) != sorted(g.out_edges(v)):
                return False
        return True


def _framing(g: CaracolGraph, name: str, in_key: Callable, out_key: Callable) -> Framing:
    inner = range(2, g.n + 1)
    return Framing(
        name,
        {v: tuple(sorted(g.in_edges(v), key=in_key)) for v in inner},
        {v: tuple(sorted(g.out_edges(v), key=out_key)) for v in inner},
    )


def length_framing(g: CaracolGraph) -> Framing:
    """Longer edges first, then smaller multiedge labels, on both sides."""
    key = lambda e: (-e.length, e.label)
    return _framing(g, "length", key, key)


def planar_framing(g: CaracolGraph) -> Framing:
    """Top-to-bottom order of the edges at each vertex in the fixed embedding."""
    key = lambda e: -g.height_key(e)
    return _framing(g, "planar", key, key)


def reversed_framing(f: Framing) -> Framing:
    return Framing(f"reversed-{f.name}",
                   {v: tuple(reversed(o)) for v, o in f.in_orders.items()},
                   {v: tuple(reversed(o)) for v, o in f.out_orders.items()})


def _compare_in(f: Framing, r_edges, q_edges, i: int) -> int:
    """Sign of Ri vs Qi under the induced order on maximal paths ending at i."""
    r = [e for e in r_edges if e.v <= i]
    q = [e for e in q_edges if e.v <= i]
    while r and q:
        er, eq = r.pop(), q.pop()
        if er != eq:
            j = er.v  # both enter the divergence vertex j
            return -1 if f.in_rank(j, er) < f.in_rank(j, eq) else 1
    return 0


def _compare_out(f: Framing, r_edges, q_edges, i: int) -> int:
    r = [e for e in r_edges if e.u >= i]
    q = [e for e in q_edges if e.u >= i]
    for er, eq in zip(r, q):
        if er != eq:
            j = er.u
            return -1 if f.out_rank(j, er) < f.out_rank(j, eq) else 1
    return 0


def incoherence_vertex(g: CaracolGraph, f: Framing, r: Route, q: Route) -> int | None:
    """Smallest common inner vertex where ``r`` and ``q`` are incoherent, if any."""
    re_, qe = g.route_edges(r), g.route_edges(q)
    common = sorted(set(g.route_vertices(r)) & set(g.route_vertices(q)))
    for i in common:
        if not 2 <= i <= g.n:
            continue
        if _compare_in(f, re_, qe, i) * _compare_out(f, re_, qe, i) < 0:
            return i
    return None


def coherent(g: CaracolGraph, f: Framing, r: Route, q: Route) -> bool:
    return incoherence_vertex(g, f, r, q) is None


def coherence_graph(g: CaracolGraph, f: Framing) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.routes)
    h.add_edges_from((r, q) for r, q in combinations(g.routes, 2) if coherent(g, f, r, q))
    return h


@dataclass(frozen=True)
class Clique:
    routes: frozenset[Route]

    def __len__(self) -> int:
        return len(self.routes)

    def __iter__(self):
        return iter(sorted(self.routes))

    def triples(self) -> list[list[int]]:
        return [r.as_list() for r in sorted(self.routes)]

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, sorted(self.routes))) + "}"


def maximal_cliques(g: CaracolGraph, f: Framing) -> list[Clique]:
    """Maximal sets of pairwise coherent routes, sorted by their triples."""
    found = [Clique(frozenset(c)) for c in nx.find_cliques(coherence_graph(g, f))]
    return sorted(found, key=Clique.triples)


def cliques_to_json(cliques: Iterable[Clique]) -> str:
    return json.dumps([c.triples() for c in cliques])


def simplex_of(g: CaracolGraph, c: Clique) -> list[tuple[int, ...]]:
    """Indicator flows of the routes in ``c``."""
    return [g.indicator(r) for r in c]


def _chart_matrix(g: CaracolGraph, c: Clique) -> list[list[int]]:
    """Rows (1, chart coordinates) for each vertex of the simplex."""
    return [[1, *g.route_chart(r)] for r in c]


def lattice_volume(g: CaracolGraph, c: Clique) -> int:
    """Normalized volume of the simplex in the intrinsic lattice (0 if degenerate).

    Chart coordinates identify the affine lattice of the flow polytope with
    Z^(a+b), so this is |det| of the homogenized vertex matrix.
    """
    rows = _chart_matrix(g, c)
    if len(rows) != g.dim + 1:
        return 0
    return abs(_linalg.det(rows))


def is_unimodular(g: CaracolGraph, c: Clique) -> bool:
    return lattice_volume(g, c) == 1


@dataclass
class DualGraph:
    nodes: list[Clique]
    edges: list[tuple[int, int]]

    def to_networkx(self, label: Callable[[Clique], str] | None = None) -> nx.Graph:
        name = label or str
        h = nx.Graph()
        h.add_nodes_from(name(c) for c in self.nodes)
        h.add_edges_from((name(self.nodes[i]), name(self.nodes[j])) for i, j in self.edges)
        return h

    def to_json(self, label: Callable[[Clique], str] | None = None) -> str:
        payload = {
            "nodes": [c.triples() for c in self.nodes],
            "edges": sorted([i, j] for i, j in self.edges),
        }
        if label is not None:
            payload["labels"] = [label(c) for c in self.nodes]
        return json.dumps(payload, sort_keys=True)

    def to_dot(self, label: Callable[[Clique], str] | None = None) -> str:
        name = label or str
        names = [name(c) for c in self.nodes]
        return digraph_to_dot("dual", names, [(names[i], names[j]) for i, j in self.edges],
                              directed=False)


def dual_graph(cliques: list[Clique]) -> DualGraph:
    """Simplices as nodes; an edge when two cliques differ in exactly one route."""
    edges = [(i, j) for i, j in combinations(range(len(cliques)), 2)
             if len(cliques[i].routes ^ cliques[j].routes) == 2]
    return DualGraph(list(cliques), edges)


@dataclass
class TriangulationReport:
    dimension: int
    simplices: int
    volume: int
    expected_volume: int
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "simplices": self.simplices,
            "volume": self.volume,
            "expected_volume": self.expected_volume,
            "ok": self.ok,
            "failures": [list(f) for f in self.failures],
        }


def _integer_inverse(rows: list[list[int]]) -> tuple[np.ndarray, int]:
    """(adj, det) with adj @ M = det * I."""
    d = _linalg.det(rows)
    n = len(rows)
    aug = [list(r) + [int(i == k) for k in range(n)] for i, r in enumerate(rows)]
    m, _ = _linalg.rref(aug)
    inv = [row[n:] for row in m]
    adj = [[int(Fraction(x) * d) for x in row] for row in inv]
    return np.array(adj, dtype=np.int64), d


def verify_triangulation(g: CaracolGraph, cliques: list[Clique], *,
                         expected_volume: int | None = None,
                         samples: int = 1000, seed: int = 0) -> TriangulationReport:
    """Check that the cliques form a unimodular triangulation of F_car(nu).

    Volume is compared against the Lidskii/Kostant count unless
    ``expected_volume`` is given. Interior disjointness is sampled:
    ``samples`` strictly interior points of each simplex (exact integer
    barycentric weights) must avoid every other simplex.
    """
    if expected_volume is None:
        from .enumeration import volume_lidskii
        expected_volume = volume_lidskii(g.nu)
    d = g.dim
    rep = TriangulationReport(d, len(cliques), 0, expected_volume)

    mats = []
    for c in cliques:
        rows = _chart_matrix(g, c)
        if len(rows) != d + 1 or _linalg.rank(rows) != d + 1:
            rep.failures.append(("dimension", str(c)))
            mats.append(None)
            continue
        vol = lattice_volume(g, c)
        if vol != 1:
            rep.failures.append(("unimodular", f"{c} has volume {vol}"))
        rep.volume += vol
        mats.append(rows)
    if rep.volume != expected_volume:
        rep.failures.append(("volume", f"sum {rep.volume} != {expected_volume}"))

    seen: dict[frozenset, int] = {}
    for k, c in enumerate(cliques):
        if c.routes in seen:
            rep.failures.append(("intersection", f"simplices {seen[c.routes]} and {k} coincide"))
        seen.setdefault(c.routes, k)

    if samples:
        rng = np.random.default_rng(seed)
        inverses = [_integer_inverse([list(col) for col in zip(*m)]) if m is not None else None
                    for m in mats]
        for ka, ma in enumerate(mats):
            if ma is None:
                continue
            verts = np.array(ma, dtype=np.int64).T  # columns are homogenized vertices
            weights = rng.integers(1, 1000, size=(d + 1, samples))
            pts = verts @ weights
            for kb, inv in enumerate(inverses):
                if kb == ka or inv is None:
                    continue
                adj, det_b = inv
                bary = (adj @ pts) * np.sign(det_b)
                inside = np.all(bary >= 0, axis=0)
                if inside.any():
                    rep.failures.append(
                        ("intersection", f"interior point of simplex {ka} lies in simplex {kb}"))
                    break
    return rep
