"""The nu-caracol graph car(nu), its routes and in-degree data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .lattice import digraph_to_dot
from .paths import LatticePath, prefix_sums


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int
    label: int = 1

    @property
    def length(self) -> int:
        return self.v - self.u

    def __str__(self) -> str:
        return f"({self.u},{self.v})#{self.label}"


@dataclass(frozen=True, order=True)
class Route:
    """Route R_{j,i,l}: first edge (1, j+1) with label i, last edge (l+1, n+1)."""

    j: int
    i: int
    ell: int

    def __str__(self) -> str:
        return f"R({self.j},{self.i},{self.ell})"

    def as_list(self) -> list[int]:
        return [self.j, self.i, self.ell]


class NotNormalizedError(ValueError):
    pass


@dataclass(frozen=True)
class CaracolGraph:
    nu: LatticePath

    def __post_init__(self):
        if not self.nu.starts_with_north:
            raise NotNormalizedError(f"car(nu) needs nu to start with N, got {self.nu}")

    @property
    def a(self) -> int:
        return self.nu.a

    @property
    def b(self) -> int:
        return self.nu.b

    @property
    def n(self) -> int:
        return self.a + 2

    @property
    def n_plus_1(self) -> int:
        return self.a + 3

    @property
    def sink(self) -> int:
        return self.n_plus_1

    @property
    def dim(self) -> int:
        return len(self.edges) - self.n

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        a, sink = self.a, self.n_plus_1
        out = [Edge(i, i + 1) for i in range(1, a + 3)]
        for i, k in enumerate(self.nu.runs, start=1):
            out.extend(Edge(1, i + 2, label) for label in range(1, k + 1))
        out.extend(Edge(i, sink) for i in range(2, a + 2))
        return tuple(sorted(out))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: k for k, e in enumerate(self.edges)}

    def in_edges(self, v: int) -> list[Edge]:
        return [e for e in self.edges if e.v == v]

    def out_edges(self, v: int) -> list[Edge]:
        return [e for e in self.edges if e.u == v]

    def in_degree(self, v: int) -> int:
        return len(self.in_edges(v))

    def out_degree(self, v: int) -> int:
        return len(self.out_edges(v))

    def multiplicity(self, u: int, v: int) -> int:
        return sum(1 for e in self.edges if (e.u, e.v) == (u, v))

    @cached_property
    def routes(self) -> tuple[Route, ...]:
        """All (j, i, l) with 1 <= j <= l < n and i ranging over copies of (1, j+1)."""
        out = []
        for j in range(1, self.n):
            for i in range(1, self.multiplicity(1, j + 1) + 1):
                out.extend(Route(j, i, ell) for ell in range(j, self.n))
        return tuple(out)

    def route_edges(self, r: Route) -> tuple[Edge, ...]:
        es = [Edge(1, r.j + 1, r.i)]
        es.extend(Edge(v, v + 1) for v in range(r.j + 1, r.ell + 1))
        es.append(Edge(r.ell + 1, self.sink))
        return tuple(es)

    def route_vertices(self, r: Route) -> tuple[int, ...]:
        return (1,) + tuple(e.v for e in self.route_edges(r))

    def indicator(self, r: Route) -> tuple[int, ...]:
        """Unit flow along ``r`` as a 0/1 vector indexed like ``edges``."""
        vec = [0] * len(self.edges)
        for e in self.route_edges(r):
            vec[self.edge_index[e]] = 1
        return tuple(vec)

    @cached_property
    def chart_edges(self) -> tuple[Edge, ...]:
        """Edges off the spanning path 1 -> 2 -> ... -> n+1.

        Flows are determined by their values on these a+b edges, and integral
        flows correspond to integral chart coordinates.
        """
        # source copies and bypass edges all have length >= 2
        return tuple(e for e in self.edges if e.length > 1)

    def chart(self, flow) -> tuple:
        idx = self.edge_index
        return tuple(flow[idx[e]] for e in self.chart_edges)

    def route_chart(self, r: Route) -> tuple[int, ...]:
        return self.chart(self.indicator(r))

    # Fixed planar embedding: the path 1..n+1 on the x-axis, source copies as
    # nested arcs above it (longer outside, label 1 outermost among copies),
    # bypass edges to the sink as nested arcs below it ((2, n+1) outermost).

    @cached_property
    def above_stack(self) -> tuple[Edge, ...]:
        """Edges leaving vertex 1, bottom to top; index 0 is the axis edge (1, 2)."""
        arcs = sorted((e for e in self.edges if e.u == 1), key=lambda e: (e.v, -e.label))
        return tuple(arcs)

    @cached_property
    def below_stack(self) -> tuple[Edge, ...]:
        """Edges entering the sink, top to bottom; index 0 is the axis edge (n, n+1)."""
        return tuple(sorted(self.in_edges(self.sink), key=lambda e: -e.u))

    def height_key(self, e: Edge) -> int:
        """Vertical position of an edge near its endpoints: above > 0, axis 0, below < 0."""
        if e.u == 1 and e.length > 1:
            return self.above_stack.index(e)
        if e.v == self.sink and e.length > 1:
            return -self.below_stack.index(e)
        return 0

    def net_flow(self, flow) -> list:
        net = [0] * (self.n_plus_1 + 1)
        for e, x in zip(self.edges, flow):
            net[e.u] += x
            net[e.v] -= x
        return net[1:]

    def to_dict(self) -> dict:
        return {
            "vertices": self.n_plus_1,
            "edges": [{"u": e.u, "v": e.v, "label": e.label} for e in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_dot(self) -> str:
        nodes = [str(v) for v in range(1, self.n_plus_1 + 1)]
        edges = [(str(e.u), str(e.v), {"label": str(e.label)}) for e in self.edges]
        return digraph_to_dot(f"car({self.nu})", nodes, edges)


def build_caracol(nu: LatticePath) -> CaracolGraph:
    return CaracolGraph(nu)


def routes(g: CaracolGraph) -> tuple[Route, ...]:
    return g.routes


@dataclass(frozen=True)
class InDegreeVector:
    entries: tuple[int, ...]

    def root_coefficients(self) -> dict[int, int]:
        """Coefficients c_k with v = sum_k c_k alpha_k (simple roots), nonzero only."""
        out = {}
        for k, s in enumerate(prefix_sums(self.entries)[1:-1], start=1):
            if s:
                out[k] = s
        return out


def in_degree_vector(g: CaracolGraph) -> InDegreeVector:
    """v_in = (0, u_2, ..., u_n, -(m - n - u_{n+1})) with u_i = indeg(i) - 1."""
    m, n = len(g.edges), g.n
    u = {i: g.in_degree(i) - 1 for i in range(2, n + 2)}
    entries = (0,) + tuple(u[i] for i in range(2, n + 1)) + (-(m - n - u[n + 1]),)
    return InDegreeVector(entries)
