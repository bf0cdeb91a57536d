"""End-to-end checks that each dual graph matches its lattice, with witnesses on failure."""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .caracol import CaracolGraph
from .correspondences import (clique_to_dyckpath, clique_to_ijtree, clique_to_nutree,
                              ij_encoding, nutree_to_path)
from .framing import (Clique, dual_graph, length_framing, maximal_cliques, planar_framing,
                      verify_triangulation)
from .lattice import FiniteLattice
from .paths import LatticePath, nu_dyck_paths, tamari_lattice, young_ideal


@dataclass
class DualCheck:
    framing: str
    simplices: int
    isomorphic: bool
    labels_match: bool
    triangulation_ok: bool
    witness: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.isomorphic and self.labels_match and self.triangulation_ok

    def to_dict(self) -> dict:
        return {"framing": self.framing, "simplices": self.simplices,
                "isomorphic": self.isomorphic, "labels_match": self.labels_match,
                "triangulation_ok": self.triangulation_ok, "ok": self.ok,
                "witness": self.witness}


def _edge_set(g: nx.Graph) -> set[frozenset]:
    return {frozenset(e) for e in g.edges}


def path_label_function(g: CaracolGraph, framing: str):
    """Clique -> nu-Dyck path string: Phi then row counts, or Psi."""
    if framing == "length":
        enc = ij_encoding(g.nu)
        return lambda c: nutree_to_path(g.nu, clique_to_nutree(enc, c)).steps
    return lambda c: clique_to_dyckpath(g, c).steps


def tree_label_function(g: CaracolGraph):
    enc = ij_encoding(g.nu)
    return lambda c: clique_to_ijtree(enc, c).label()


def target_lattice(nu: LatticePath, framing: str) -> FiniteLattice:
    return tamari_lattice(nu) if framing == "length" else young_ideal(nu)


def check_dual(nu: LatticePath, framing: str, *, samples: int = 200) -> DualCheck:
    g = CaracolGraph(nu)
    f = length_framing(g) if framing == "length" else planar_framing(g)
    cliques = maximal_cliques(g, f)
    tri = verify_triangulation(g, cliques, expected_volume=len(nu_dyck_paths(nu)),
                               samples=samples)
    dual = dual_graph(cliques)
    label = path_label_function(g, framing)
    ours = dual.to_networkx(label)
    theirs = target_lattice(nu, framing).hasse_graph()
    iso = nx.is_isomorphic(ours, theirs)
    same_nodes = set(ours.nodes) == set(theirs.nodes) and ours.number_of_nodes() == len(cliques)
    extra = _edge_set(ours) - _edge_set(theirs)
    missing = _edge_set(theirs) - _edge_set(ours)
    witness = [f"{kind}: {msg}" for kind, msg in tri.failures]
    witness += [f"dual edge not a cover: {' -- '.join(sorted(e))}" for e in sorted(extra, key=sorted)]
    witness += [f"cover missing from dual: {' -- '.join(sorted(e))}" for e in sorted(missing, key=sorted)]
    if not same_nodes:
        witness.append("node labels differ from the nu-Dyck paths")
    return DualCheck(framing, len(cliques), iso, same_nodes and not extra and not missing,
                     tri.ok, witness)


def duals_isomorphic(nu: LatticePath) -> bool:
    g = CaracolGraph(nu)
    a = dual_graph(maximal_cliques(g, length_framing(g))).to_networkx()
    b = dual_graph(maximal_cliques(g, planar_framing(g))).to_networkx()
    return nx.is_isomorphic(a, b)


def label_cliques(cliques: list[Clique], label) -> list[str]:
    return [label(c) for c in cliques]
