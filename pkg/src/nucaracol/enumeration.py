"""Counting: Cat(nu) several ways, Kostant partition functions, h* and facets."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice
from math import comb, gcd

import networkx as nx

from . import _linalg
from .caracol import CaracolGraph, in_degree_vector
from .paths import (EAST, NORTH, LatticePath, nu_dyck_paths, peaks, prefix_sums,
                    stats, young_ideal)


def _binom(n: int, r: int) -> int:
    return comb(n, r) if 0 <= r <= n else 0


@dataclass(frozen=True)
class HStarVector:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coefficients):
            raise ValueError(f"negative h* entry in {self.coefficients}")

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def __len__(self) -> int:
        return len(self.coefficients)

    def total(self) -> int:
        return sum(self.coefficients)

    def as_list(self) -> list[int]:
        return list(self.coefficients)


@dataclass(frozen=True)
class KostantQuery:
    graph: CaracolGraph
    target: tuple[int, ...]

    def __post_init__(self):
        if len(self.target) != self.graph.n_plus_1:
            raise ValueError(f"target needs {self.graph.n_plus_1} entries")
        if sum(self.target):
            raise ValueError("target must sum to zero")


# -- Catalan numbers ----------------------------------------------------------

def cat_determinant(nu: LatticePath) -> int:
    """det( C(1 + nu_1 + ... + nu_{a-j}, 1 + j - i) ) over 1 <= i, j <= a-1."""
    a = nu.a
    s = prefix_sums(nu.runs)
    size = a - 1
    rows = [[_binom(1 + s[a - j], 1 + j - i) for j in range(1, size + 1)]
            for i in range(1, size + 1)]
    return _linalg.det(rows)


def rational_path(a: int, b: int) -> LatticePath:
    """Lowest lattice path from (0,0) to (b,a) staying weakly above y = a x / b."""
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) must be coprime positive integers")
    steps, y = [], 0
    for t in range(1, b + 1):
        h = -(-a * t // b)
        steps.append(NORTH * (h - y) + EAST)
        y = h
    steps.append(NORTH * (a - y))
    return LatticePath("".join(steps))


def rational_catalan(a: int, b: int) -> int:
    return comb(a + b, a) // (a + b)


def pitman_stanley_points(nu: LatticePath) -> int:
    """Nonnegative integer y in Z^a with y_1 + ... + y_k bounded by the E steps before the k-th N.

    For a normalized path that bound is nu_1 + ... + nu_{k-1}.
    """
    s = [0] + prefix_sums(nu.runs)
    ways = {0: 1}
    for k in range(1, nu.a + 1):
        nxt: dict[int, int] = {}
        for total, w in ways.items():
            for t in range(total, s[k] + 1):
                nxt[t] = nxt.get(t, 0) + w
        ways = nxt
    return sum(ways.values())


def gravity_count(nu: LatticePath) -> int:
    """Number of canonical gravity diagrams: nested segment profiles per column."""
    s = prefix_sums(nu.runs)
    a = nu.a
    # column alpha_c holds s[c-2] dots; profile values over c = 3..a+1 are
    # nondecreasing and bounded by the dots; alpha_{a+2} is then forced
    counts = {0: 1}
    for c in range(3, a + 2):
        nxt: dict[int, int] = {}
        for lo, w in counts.items():
            for v in range(lo, s[c - 2] + 1):
                nxt[v] = nxt.get(v, 0) + w
        counts = nxt
    return sum(counts.values())


# -- Kostant partition function ----------------------------------------------

def kostant(q: KostantQuery) -> int:
    """Number of ways to write ``target`` as a nonnegative sum of positive roots e_u - e_v.

    Equivalently, integral flows on the graph with net outflow ``target[i]``
    at vertex i+1. Vertices are processed in order; parallel edges into the
    same head are merged with a stars-and-bars factor.
    """
    g = q.graph
    last = g.n_plus_1
    outs = {u: {} for u in range(1, last + 1)}
    for e in g.edges:
        outs[e.u][e.v] = outs[e.u].get(e.v, 0) + 1
    target = q.target

    @lru_cache(maxsize=None)
    def count(u: int, pending: tuple[int, ...]) -> int:
        # pending[k] = flow already routed into vertex u + k
        if u == last:
            return 1 if pending[0] == -target[last - 1] else 0
        out = target[u - 1] + pending[0]
        if out < 0:
            return 0
        heads = sorted(outs[u].items())
        rest = list(pending[1:]) + [0]
        total = 0

        def spread(k: int, left: int, acc: int):
            nonlocal total
            if k == len(heads):
                if left == 0:
                    total += acc * count(u + 1, tuple(rest))
                return
            v, mult = heads[k]
            for x in range(left + 1):
                rest[v - u - 1] += x
                spread(k + 1, left - x, acc * _binom(x + mult - 1, mult - 1))
                rest[v - u - 1] -= x

        spread(0, out, 1)
        return total

    return count(1, tuple([0] * last))


def volume_lidskii(nu: LatticePath) -> int:
    g = CaracolGraph(nu)
    return kostant(KostantQuery(g, in_degree_vector(g).entries))


def ehrhart_values(nu: LatticePath, upto: int) -> list[int]:
    """E(t) = #integral flows of value t, t = 0..upto."""
    g = CaracolGraph(nu)
    out = []
    for t in range(upto + 1):
        v = [0] * g.n_plus_1
        v[0], v[-1] = t, -t
        out.append(kostant(KostantQuery(g, tuple(v))))
    return out


def hstar_ehrhart_oracle(nu: LatticePath) -> HStarVector:
    """h*_k = sum_j (-1)^j C(d+1, j) E(k - j), the numerator of the Ehrhart series."""
    d = nu.a + nu.b
    e = ehrhart_values(nu, d)
    return HStarVector(tuple(
        sum((-1) ** j * comb(d + 1, j) * e[k - j] for j in range(k + 1))
        for k in range(d + 1)))


# -- h* via shelling ------------------------------------------------------------

class ShellingError(AssertionError):
    pass


def narayana(nu: LatticePath) -> HStarVector:
    """Nar_nu(i) = number of nu-Dyck paths with i valleys, padded to length a+b+1."""
    h = [0] * (nu.a + nu.b + 1)
    for mu in nu_dyck_paths(nu):
        h[stats(mu)[0]] += 1
    return HStarVector(tuple(h))


def shelling_orders(nu: LatticePath, count: int = 3) -> list[list[LatticePath]]:
    """Distinct linear extensions of Young order on nu-Dyck paths, N^aE^b first.

    The first is the canonical (lexicographically smallest) topological sort;
    the rest come from networkx's enumeration of all topological sorts.
    """
    lat = young_ideal(nu)
    dg = lat.digraph().reverse(copy=True)
    orders = [list(nx.lexicographical_topological_sort(dg))]
    for order in islice(nx.all_topological_sorts(dg), 64):
        if order not in orders:
            orders.append(order)
        if len(orders) >= count:
            break
    return [[LatticePath(s) for s in o] for o in orders]


def restriction_sizes(facets: list[frozenset]) -> list[int]:
    """|R_j| with R_j = {v in F_j : F_j - v lies in some earlier facet}."""
    sizes = []
    for j, f in enumerate(facets):
        earlier = facets[:j]
        r = [v for v in f if any(f - {v} <= g for g in earlier)]
        sizes.append(len(r))
    return sizes


def h_from_restrictions(sizes: list[int], d: int) -> HStarVector:
    h = [0] * (d + 1)
    for s in sizes:
        h[s] += 1
    return HStarVector(tuple(h))


def hstar_shelling(nu: LatticePath, extensions: int = 3) -> HStarVector:
    """h* from literal restriction sets of the planar-framed triangulation.

    Facets are ordered along several linear extensions of Young order; all
    tallies must agree with each other and with the valley count.
    """
    from .correspondences import dyckpath_to_clique
    g = CaracolGraph(nu)
    d = g.dim
    expected = narayana(nu)
    for order in shelling_orders(nu, extensions):
        facets = [dyckpath_to_clique(g, mu).routes for mu in order]
        got = h_from_restrictions(restriction_sizes(facets), d)
        if got != expected:
            raise ShellingError(f"order {[str(m) for m in order]} gives {got.as_list()}, "
                                f"valley tally {expected.as_list()}")
    return expected


def complex_h_vector(facets: list[frozenset]) -> HStarVector:
    """h-vector of the pure simplicial complex generated by ``facets``, via its f-vector."""
    dim1 = len(next(iter(facets)))          # vertices per facet = d + 1
    faces: set[frozenset] = set()
    for f in facets:
        items = sorted(f)
        for k in range(dim1 + 1):
            faces.update(frozenset(c) for c in combinations(items, k))
    f_vec = [0] * (dim1 + 1)                # f_vec[k] = faces with k vertices
    for face in faces:
        f_vec[len(face)] += 1
    h = [sum((-1) ** (k - i) * comb(dim1 - i, k - i) * f_vec[i] for i in range(k + 1))
         for k in range(dim1 + 1)]
    # the top entry vanishes for a triangulated ball; drop it to match h*
    if h[-1] == 0:
        h.pop()
    return HStarVector(tuple(h))


# -- facets ---------------------------------------------------------------------

def facet_count(nu: LatticePath) -> int:
    """a + b + peak(nu)."""
    return nu.a + nu.b + peaks(nu)


def count_report(nu: LatticePath) -> dict:
    """All the counts for one nu, with an agreement flag over every cross-check."""
    from .framing import length_framing, maximal_cliques, planar_framing
    from .order_poset import build_q_nu, hat_cover_count
    from .polytope import geometric_facets
    g = CaracolGraph(nu)
    cat = cat_determinant(nu)
    paths = len(nu_dyck_paths(nu))
    counts = {
        "determinant": cat,
        "paths": paths,
        "kostant": volume_lidskii(nu),
        "gravity": gravity_count(nu),
        "pitman_stanley": pitman_stanley_points(nu),
        "cliques_length": len(maximal_cliques(g, length_framing(g))),
        "cliques_planar": len(maximal_cliques(g, planar_framing(g))),
    }
    hstar = hstar_shelling(nu)
    agreement = {"cat": len(set(counts.values())) == 1,
                 "hstar_sum": hstar.total() == cat}
    report = {"nu": nu.steps, "a": nu.a, "b": nu.b, "cat": cat, "counts": counts,
              "hstar": hstar.as_list()}
    if g.dim <= 5:
        oracle = hstar_ehrhart_oracle(nu)
        report["hstar_ehrhart"] = oracle.as_list()
        agreement["hstar_ehrhart"] = oracle == hstar
    geo = len(geometric_facets(g))
    report["facets"] = {"formula": facet_count(nu), "geometric": geo,
                        "hat_covers": hat_cover_count(build_q_nu(nu))}
    report["facets"]["formula_matches"] = geo == report["facets"]["formula"]
    agreement["facets"] = geo == report["facets"]["hat_covers"]
    report["agreement"] = agreement
    report["agree"] = all(agreement.values())
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True)
