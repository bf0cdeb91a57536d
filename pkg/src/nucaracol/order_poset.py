"""The poset Q_nu, its order ideals and linear extensions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .caracol import CaracolGraph
from .framing import Clique
from .lattice import FiniteLattice, digraph_to_dot
from .paths import EAST, NORTH, LatticePath, Point


@dataclass(frozen=True, order=True)
class Element:
    """N_i is ("N", i, 0); E_{j,k} is ("E", j, k)."""

    kind: str
    j: int
    k: int = 0

    @property
    def subscript(self) -> tuple[int, int]:
        return self.j, self.k

    def __str__(self) -> str:
        return f"N{self.j}" if self.kind == NORTH else f"E{self.j}{self.k}"


@dataclass(frozen=True)
class OrderPoset:
    elements: tuple[Element, ...]
    relations: frozenset[tuple[Element, Element]]   # strict, transitively closed

    def less(self, x: Element, y: Element) -> bool:
        return (x, y) in self.relations

    @cached_property
    def hasse(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        g.add_edges_from(self.relations)
        return nx.transitive_reduction(g)

    def covers(self) -> list[tuple[Element, Element]]:
        return sorted(self.hasse.edges)

    def is_partial_order(self) -> bool:
        rel = self.relations
        irreflexive = all(x != y for x, y in rel)
        antisym = all((y, x) not in rel for x, y in rel)
        transitive = all((x, z) in rel for x, y in rel for y2, z in rel if y == y2)
        return irreflexive and antisym and transitive

    def to_json(self) -> str:
        return json.dumps({"elements": [str(e) for e in self.elements],
                           "covers": [[str(x), str(y)] for x, y in self.covers()]},
                          sort_keys=True)

    def to_dot(self, name: str = "Q") -> str:
        return digraph_to_dot(name, [str(e) for e in self.elements],
                              [(str(x), str(y)) for x, y in self.covers()])


def poset_from_covers(elements, covers) -> OrderPoset:
    g = nx.DiGraph()
    g.add_nodes_from(elements)
    g.add_edges_from(covers)
    closure = nx.transitive_closure_dag(g)
    return OrderPoset(tuple(elements), frozenset(closure.edges))


def build_q_nu(nu: LatticePath) -> OrderPoset:
    """N chain, E chain in lexicographic order, and N_i < E_{j,k} iff i <= j."""
    ns = [Element(NORTH, i) for i in range(1, nu.a + 1)]
    es = [Element(EAST, j, k) for j, run in enumerate(nu.runs, 1) for k in range(1, run + 1)]
    rel = {(x, y) for idx, x in enumerate(ns) for y in ns[idx + 1:]}
    rel |= {(x, y) for idx, x in enumerate(es) for y in es[idx + 1:]}
    rel |= {(n, e) for n in ns for e in es if n.j <= e.j}
    return OrderPoset(tuple(ns + es), frozenset(rel))


def subscript_word(p: OrderPoset) -> str:
    """Read the elements in lexicographic subscript order and spell N/E."""
    return "".join(e.kind for e in sorted(p.elements, key=lambda e: e.subscript))


def hat_covers(p: OrderPoset) -> list[tuple[str, str]]:
    """Covers of P with a bottom 0 and a top 1 adjoined."""
    h = p.hasse
    out = [(str(x), str(y)) for x, y in h.edges]
    out += [("0", str(x)) for x in p.elements if h.in_degree(x) == 0]
    out += [(str(x), "1") for x in p.elements if h.out_degree(x) == 0]
    if not p.elements:
        out.append(("0", "1"))
    return sorted(out)


def hat_cover_count(p: OrderPoset) -> int:
    return len(hat_covers(p))


def linear_extensions(p: OrderPoset) -> list[tuple[Element, ...]]:
    """All order-preserving listings of the elements, by backtracking."""
    below = {x: {y for y in p.elements if p.less(y, x)} for x in p.elements}
    out: list[tuple[Element, ...]] = []
    prefix: list[Element] = []
    placed: set[Element] = set()

    def extend():
        if len(prefix) == len(p.elements):
            out.append(tuple(prefix))
            return
        for x in p.elements:
            if x not in placed and below[x] <= placed:
                prefix.append(x)
                placed.add(x)
                extend()
                placed.remove(x)
                prefix.pop()

    extend()
    return out


def is_linear_extension(p: OrderPoset, sigma) -> bool:
    pos = {x: k for k, x in enumerate(sigma)}
    return (len(sigma) == len(p.elements) and set(pos) == set(p.elements)
            and all(pos[x] < pos[y] for x, y in p.relations))


def order_ideals(p: OrderPoset) -> list[frozenset[Element]]:
    below = {x: {y for y in p.elements if p.less(y, x)} for x in p.elements}
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for ideal in frontier:
            for x in p.elements:
                if x not in ideal and below[x] <= ideal:
                    bigger = ideal | {x}
                    if bigger not in seen:
                        seen.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def ideal_point(ideal) -> Point:
    """(number of E elements, number of N elements)."""
    return (sum(1 for e in ideal if e.kind == EAST), sum(1 for e in ideal if e.kind == NORTH))


def _ideal_label(ideal) -> str:
    return "{" + ",".join(str(e) for e in sorted(ideal)) + "}"


def ideals_lattice(p: OrderPoset) -> FiniteLattice:
    ideals = order_ideals(p)
    covers = [(i, j) for i in ideals for j in ideals if i < j and len(j) == len(i) + 1]
    return FiniteLattice.from_relation(ideals, covers, label=_ideal_label)


def grid_lattice(nu: LatticePath) -> FiniteLattice:
    """Componentwise order on L_nu; covers add one to a single coordinate."""
    pts = nu.lattice_points_above()
    present = set(pts)
    covers = [(p, q) for p in pts for q in ((p[0] + 1, p[1]), (p[0], p[1] + 1)) if q in present]
    return FiniteLattice.from_relation(pts, covers, label=lambda p: f"{p[0]},{p[1]}")


def extension_to_path(sigma) -> LatticePath:
    """The chain of prefix ideals traces the path spelled by the element kinds."""
    return LatticePath("".join(e.kind for e in sigma))


def extension_to_clique(g: CaracolGraph, p: OrderPoset, sigma) -> Clique:
    from .correspondences import dyckpath_to_clique
    if not is_linear_extension(p, sigma):
        raise ValueError("not a linear extension of Q_nu")
    return dyckpath_to_clique(g, extension_to_path(sigma))


def clique_to_extension(g: CaracolGraph, p: OrderPoset, c: Clique) -> tuple[Element, ...]:
    """Inverse of ``extension_to_clique``: Ns and Es are each forced into chain order."""
    from .correspondences import clique_to_dyckpath
    mu = clique_to_dyckpath(g, c)
    ns = iter(sorted(e for e in p.elements if e.kind == NORTH))
    es = iter(sorted(e for e in p.elements if e.kind == EAST))
    return tuple(next(ns) if ch == NORTH else next(es) for ch in mu.steps)
