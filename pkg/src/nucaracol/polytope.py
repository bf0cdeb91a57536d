"""Exact facet enumeration for F_car(nu) in its intrinsic chart coordinates."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import _linalg
from .caracol import CaracolGraph, Route


def _hyperplane(points: list[tuple[int, ...]]) -> list[Fraction] | None:
    """(c, w) with w.x = c through ``points``, or None if they are affinely dependent."""
    rows = [[1, *p] for p in points]
    kernel = _linalg.nullspace(rows)
    if len(kernel) != 1:
        return None
    return kernel[0]


def geometric_facets(g: CaracolGraph) -> list[frozenset[Route]]:
    """Vertex sets of the facets, by brute force over d-subsets of vertices.

    Each affinely independent d-subset spans a hyperplane; it is a facet
    hyperplane when every vertex lies weakly on one side. Subsets already
    inside a known facet are skipped.
    """
    verts = {r: g.route_chart(r) for r in g.routes}
    d = g.dim
    order = list(verts)
    if d == 0:
        return []
    found: list[frozenset[Route]] = []
    for subset in combinations(order, d):
        s = frozenset(subset)
        if any(s <= f for f in found):
            continue
        normal = _hyperplane([verts[r] for r in subset])
        if normal is None:
            continue
        values = {r: normal[0] + sum(w * x for w, x in zip(normal[1:], verts[r]))
                  for r in order}
        signs = {(v > 0) - (v < 0) for v in values.values()} - {0}
        if len(signs) == 1:
            found.append(frozenset(r for r, v in values.items() if v == 0))
    return sorted(found, key=lambda f: sorted(f))


def facets_by_edges(g: CaracolGraph) -> list[frozenset[Route]]:
    """Facets as the faces {x_e = 0} of full dimension d - 1, deduplicated."""
    out: set[frozenset[Route]] = set()
    for e in g.edges:
        face = [r for r in g.routes if e not in g.route_edges(r)]
        if face and _linalg.rank([[1, *g.route_chart(r)] for r in face]) == g.dim:
            out.add(frozenset(face))
    return sorted(out, key=lambda f: sorted(f))
