"""Explicit finite posets given by their Hasse diagram."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Iterable

import networkx as nx


@dataclass(frozen=True)
class FiniteLattice:
    """A finite poset stored as labelled elements plus cover pairs.

    ``covers`` holds index pairs ``(lower, upper)`` into ``elements``.
    The name reflects the instances used here (Tamari, Young ideals,
    lattices of order ideals); nothing forces the lattice property.
    """

    elements: tuple[str, ...]
    covers: frozenset[tuple[int, int]]

    @classmethod
    def from_relation(cls, elements: Iterable[Hashable],
                      pairs: Iterable[tuple[Hashable, Hashable]],
                      label=str) -> "FiniteLattice":
        elems = list(elements)
        index = {e: k for k, e in enumerate(elems)}
        covers = frozenset((index[lo], index[hi]) for lo, hi in pairs)
        return cls(tuple(label(e) for e in elems), covers)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        g.add_edges_from((self.elements[i], self.elements[j]) for i, j in self.covers)
        return g

    def hasse_graph(self) -> nx.Graph:
        """Undirected Hasse diagram on element labels."""
        return self.digraph().to_undirected()

    def cover_labels(self) -> set[tuple[str, str]]:
        return {(self.elements[i], self.elements[j]) for i, j in self.covers}

    def minimal_elements(self) -> list[str]:
        g = self.digraph()
        return [e for e in self.elements if g.in_degree(e) == 0]

    def maximal_elements(self) -> list[str]:
        g = self.digraph()
        return [e for e in self.elements if g.out_degree(e) == 0]

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.digraph())

    def covers_are_irreducible(self) -> bool:
        """True when no cover edge is implied by a longer chain."""
        g = self.digraph()
        reduced = nx.transitive_reduction(g)
        return set(reduced.edges) == set(g.edges)

    def less_equal(self, x: str, y: str) -> bool:
        return x == y or nx.has_path(self.digraph(), x, y)

    def to_json(self) -> str:
        payload = {
            "elements": list(self.elements),
            "covers": sorted([i, j] for i, j in self.covers),
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "FiniteLattice":
        payload = json.loads(text)
        return cls(tuple(payload["elements"]),
                   frozenset((int(i), int(j)) for i, j in payload["covers"]))

    def to_dot(self, name: str = "poset") -> str:
        return digraph_to_dot(name, self.elements,
                              [(self.elements[i], self.elements[j])
                               for i, j in sorted(self.covers)])


def _quote(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def digraph_to_dot(name: str, nodes: Iterable[str], edges: Iterable[tuple],
                   directed: bool = True) -> str:
    """Minimal Graphviz writer; node ids are the quoted labels.

    Each edge is ``(u, v)`` or ``(u, v, attrs)`` with ``attrs`` a dict.
    """
    arrow = "->" if directed else "--"
    kind = "digraph" if directed else "graph"
    lines = [f"{kind} {_quote(name)} {{"]
    if directed:
        lines.append("  rankdir=BT;")
    for v in nodes:
        lines.append(f"  {_quote(v)};")
    for edge in edges:
        u, v = edge[0], edge[1]
        attrs = ""
        if len(edge) > 2 and edge[2]:
            attrs = " [" + ", ".join(f"{k}={_quote(val)}"
                                     for k, val in sorted(edge[2].items())) + "]"
        lines.append(f"  {_quote(u)} {arrow} {_quote(v)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graphs_isomorphic(g: nx.Graph, h: nx.Graph) -> bool:
    return nx.is_isomorphic(g, h)
