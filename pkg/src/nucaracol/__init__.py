"""nu-caracol flow polytopes: framed triangulations, nu-Tamari and Young duals, counts."""

from .caracol import CaracolGraph, Edge, Route, build_caracol, in_degree_vector
from .framing import (Clique, coherent, dual_graph, length_framing, maximal_cliques,
                      planar_framing, verify_triangulation)
from .paths import (LatticePath, PathSyntaxError, normalize, nu_dyck_paths, parse_path,
                    tamari_lattice, young_ideal)

__all__ = [
    "CaracolGraph", "Clique", "Edge", "LatticePath", "PathSyntaxError", "Route",
    "build_caracol", "coherent", "dual_graph", "in_degree_vector", "length_framing",
    "maximal_cliques", "normalize", "nu_dyck_paths", "parse_path", "planar_framing",
    "tamari_lattice", "verify_triangulation", "young_ideal",
]
