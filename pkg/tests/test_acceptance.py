"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for just the summary lines.
"""

from __future__ import annotations

import sys
import time
from collections import deque
from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import normalized_paths  # noqa: E402
from nucaracol.caracol import CaracolGraph, in_degree_vector  # noqa: E402
from nucaracol.correspondences import (arcs_cross, clique_to_dyckpath, clique_to_nutree,  # noqa: E402
                                       gamma, ij_encoding, incompatible, nutree_to_path, phi,
                                       psi)
from nucaracol.correspondences import Arc  # noqa: E402
from nucaracol.enumeration import (cat_determinant, gravity_count, hstar_ehrhart_oracle,  # noqa: E402
                                   hstar_shelling, narayana, facet_count,
                                   pitman_stanley_points, volume_lidskii)
from nucaracol.framing import (coherent, dual_graph, is_unimodular, length_framing,  # noqa: E402
                               maximal_cliques, planar_framing)
from nucaracol.order_poset import (build_q_nu, extension_to_clique, grid_lattice,  # noqa: E402
                                   hat_cover_count, ideals_lattice, linear_extensions)
from nucaracol.paths import (LatticePath, horiz, normalize, nu_dyck_paths, tamari_rotate,  # noqa: E402
                             valleys, young_ideal)
from nucaracol.polytope import geometric_facets  # noqa: E402

NU = LatticePath("NENEENEE")          # N E N E^2 N E^2
NU_21031 = LatticePath("NEENENNEEENE")    # N E^2 N E N N E^3 N E


def _line(number: int, ok: bool, detail: str) -> str:
    return f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print("\n" + _line(number, ok, detail))
    return emit


# -- shared checks ---------------------------------------------------------------

def rotation_closure(nu: LatticePath) -> nx.Graph:
    """Hasse diagram of Tam(nu) grown from nu by repeated rotations."""
    h = nx.Graph()
    h.add_node(nu.steps)
    queue = deque([nu])
    while queue:
        mu = queue.popleft()
        for p in valleys(mu):
            up = tamari_rotate(nu, mu, p)
            if up.steps not in h:
                queue.append(up)
            h.add_edge(mu.steps, up.steps)
    return h


def _relabel_matches(dual_nodes, dual_edges, label, target: nx.Graph) -> tuple[bool, str]:
    names = [label(c) for c in dual_nodes]
    if len(set(names)) != len(names) or set(names) != set(target.nodes):
        return False, "labels are not a bijection onto the target elements"
    ours = {frozenset((names[i], names[j])) for i, j in dual_edges}
    theirs = {frozenset(e) for e in target.edges}
    if ours != theirs:
        diff = sorted(map(sorted, ours ^ theirs))[:3]
        return False, f"edge sets differ, e.g. {diff}"
    return True, f"{len(names)} nodes, {len(ours)} edges"


def five_way(nu: LatticePath) -> tuple[bool, dict]:
    g = CaracolGraph(nu)
    expected = len(nu_dyck_paths(nu))
    counts = {
        "determinant": cat_determinant(nu),
        "kostant": volume_lidskii(nu),
        "gravity": gravity_count(nu),
        "pitman_stanley": pitman_stanley_points(nu),
        "length_cliques": len(maximal_cliques(g, length_framing(g))),
        "planar_cliques": len(maximal_cliques(g, planar_framing(g))),
    }
    return all(v == expected for v in counts.values()), {"paths": expected, **counts}


def length_dual_matches_tamari(nu: LatticePath) -> tuple[bool, str]:
    g = CaracolGraph(nu)
    enc = ij_encoding(nu)
    cliques = maximal_cliques(g, length_framing(g))
    d = dual_graph(cliques)
    label = lambda c: nutree_to_path(nu, clique_to_nutree(enc, c)).steps
    target = rotation_closure(nu)
    ok, detail = _relabel_matches(d.nodes, d.edges, label, target)
    return ok and nx.is_isomorphic(d.to_networkx(), target), detail


def planar_dual_matches_young(nu: LatticePath) -> tuple[bool, str]:
    g = CaracolGraph(nu)
    cliques = maximal_cliques(g, planar_framing(g))
    d = dual_graph(cliques)
    label = lambda c: clique_to_dyckpath(g, c).steps
    target = young_ideal(nu).hasse_graph()
    ok, detail = _relabel_matches(d.nodes, d.edges, label, target)
    return ok and nx.is_isomorphic(d.to_networkx(), target), detail


def pairwise_checks(nu: LatticePath) -> tuple[bool, str]:
    g = CaracolGraph(nu)
    enc = ij_encoding(nu)
    fl, fp = length_framing(g), planar_framing(g)
    for r, q in combinations(g.routes, 2):
        if coherent(g, fl, r, q) == arcs_cross(phi(enc, r), phi(enc, q)):
            return False, f"length coherence vs crossing fails for {r}, {q}"
        if coherent(g, fp, r, q) == incompatible(psi(g, r), psi(g, q), "planar"):
            return False, f"planar coherence vs compatibility fails for {r}, {q}"
    return True, ""


# -- criteria --------------------------------------------------------------------

def criterion_1() -> tuple[bool, str]:
    start = time.perf_counter()
    ok, counts = five_way(NU)
    elapsed = time.perf_counter() - start
    return ok and elapsed < 1.0, f"{NU}: {counts}, {elapsed:.3f}s"


def criterion_2() -> tuple[bool, str]:
    start = time.perf_counter()
    ok, detail = length_dual_matches_tamari(NU)
    elapsed = time.perf_counter() - start
    return ok and elapsed < 1.0, f"{NU}: length dual = Hasse(Tam) by labels, {detail}, {elapsed:.3f}s"


def criterion_3() -> tuple[bool, str]:
    start = time.perf_counter()
    ok, detail = planar_dual_matches_young(NU)
    elapsed = time.perf_counter() - start
    return ok and elapsed < 1.0, f"{NU}: planar dual = Hasse(I) by labels, {detail}, {elapsed:.3f}s"


def criterion_4() -> tuple[bool, str]:
    start = time.perf_counter()
    sweep = normalized_paths(7)
    failures = []
    for nu in sweep:
        g = CaracolGraph(nu)
        ok, counts = five_way(nu)
        if not ok:
            failures.append(f"{nu} counts {counts}")
        for check in (length_dual_matches_tamari, planar_dual_matches_young, pairwise_checks):
            ok, detail = check(nu)
            if not ok:
                failures.append(f"{nu} {check.__name__}: {detail}")
        for f in (length_framing(g), planar_framing(g)):
            for c in maximal_cliques(g, f):
                if len(c) != nu.a + nu.b + 1 or not is_unimodular(g, c):
                    failures.append(f"{nu} {f.name} clique {c}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300
    return ok, f"{len(sweep)} paths with a+b <= 7, {elapsed:.1f}s" + (
        f", first failures {failures[:3]}" if failures else "")


def criterion_5() -> tuple[bool, str]:
    failures = []
    for nu in normalized_paths(5):
        h = hstar_shelling(nu)
        if h != hstar_ehrhart_oracle(nu) or h != narayana(nu):
            failures.append(str(nu))
    tally = narayana(NU).as_list()
    ok = not failures and tally[:3] == [1, 4, 2] and not any(tally[3:])
    ok = ok and hstar_shelling(NU).as_list() == tally
    return ok, f"{len(normalized_paths(5))} paths with a+b <= 5; h*({NU}) = {tally}" + (
        f"; mismatches {failures}" if failures else "")


def criterion_6() -> tuple[bool, str]:
    failures = []
    covers_agree = True
    ends_in_north = 0
    sweep = normalized_paths(6)
    for nu in sweep:
        geometric = len(geometric_facets(CaracolGraph(nu)))
        covers = hat_cover_count(build_q_nu(nu))
        formula = facet_count(nu)
        covers_agree &= geometric == covers
        if geometric != formula or covers != formula:
            failures.append(f"{nu}: geometric {geometric}, covers {covers}, a+b+peak {formula}")
            ends_in_north += nu.steps.endswith("N")
    detail = f"{len(sweep)} paths, {len(failures)} disagree with a+b+peak"
    if failures:
        detail += (f" ({ends_in_north} of them end in N; geometric facets = Q-hat covers"
                   f" everywhere: {covers_agree}), e.g. {failures[:3]}")
    return not failures, detail


def criterion_7() -> tuple[bool, str]:
    failures = []
    sweep = normalized_paths(6)
    for nu in sweep:
        g = CaracolGraph(nu)
        p = build_q_nu(nu)
        ext = linear_extensions(p)
        cliques = set(maximal_cliques(g, planar_framing(g)))
        images = [extension_to_clique(g, p, s) for s in ext]
        if len(ext) != cat_determinant(nu):
            failures.append(f"{nu}: {len(ext)} extensions")
        if len(set(images)) != len(images) or set(images) != cliques:
            failures.append(f"{nu}: extensions do not biject with planar cliques")
        if not nx.is_isomorphic(ideals_lattice(p).digraph(), grid_lattice(nu).digraph()):
            failures.append(f"{nu}: J(Q) is not the grid on L_nu")
    return not failures, f"{len(sweep)} paths with a+b <= 6" + (
        f", failures {failures[:3]}" if failures else "")


def _duals_isomorphic(nu: LatticePath) -> bool:
    g = CaracolGraph(nu)
    a = dual_graph(maximal_cliques(g, length_framing(g))).to_networkx()
    b = dual_graph(maximal_cliques(g, planar_framing(g))).to_networkx()
    return nx.is_isomorphic(a, b)


def criterion_8() -> tuple[bool, str]:
    family = sorted({normalize(LatticePath("E" * p + "N" * q)).steps
                     for p in range(7) for q in range(7 - p) if p + q})
    family_ok = all(_duals_isomorphic(LatticePath(s)) for s in family)
    witnesses = [nu.steps for nu in normalized_paths(6)
                 if nu.steps not in family and not _duals_isomorphic(nu)]
    ok = family_ok and bool(witnesses)
    return ok, (f"{len(family)} paths E^pN^q (p+q <= 6) isomorphic: {family_ok}; "
                f"non-isomorphic witnesses {witnesses}")


def _golden_checks() -> dict[str, bool]:
    g1 = CaracolGraph(NU_21031)
    pairs = sorted((e.u, e.v) for e in g1.edges)
    shape = (g1.n_plus_1 == 8 and len(g1.edges) == 19
            and [p for p in pairs if p[0] == 1 and p[1] > 2] ==
            [(1, 3), (1, 3), (1, 4), (1, 6), (1, 6), (1, 6), (1, 7)]
            and [p for p in pairs if p[1] == 8 and p[0] < 7] == [(2, 8), (3, 8), (4, 8), (5, 8), (6, 8)])
    v_in = in_degree_vector(g1).root_coefficients() == {3: 2, 4: 3, 5: 3, 6: 6, 7: 7}
    fl, fp = length_framing(g1), planar_framing(g1)
    ins = ["(1,6)#1", "(1,6)#2", "(1,6)#3", "(5,6)#1"]
    vertex6 = ([str(e) for e in fl.in_orders[6]] == ins and [str(e) for e in fp.in_orders[6]] == ins
            and [str(e) for e in fl.out_orders[6]] == ["(6,8)#1", "(6,7)#1"]
            and [str(e) for e in fp.out_orders[6]] == ["(6,7)#1", "(6,8)#1"])
    enc = ij_encoding(NU)
    ij_sets = enc.I == (1, 3, 5, 6, 8, 9) and enc.Jbar == (2, 4, 7, 10)
    mu = LatticePath("NNEENEEE")
    horiz_ok = [horiz(NU, mu, p) for p in mu.points] == [0, 1, 3, 2, 1, 3, 2, 1, 0]
    from nucaracol.correspondences import NuTree, nutree_rotations
    tree_arcs = [(1, 2), (1, 10), (3, 4), (3, 10), (3, 7), (5, 7), (6, 7), (8, 10), (9, 10)]
    tree = NuTree(frozenset(gamma(enc, Arc(*a)) for a in tree_arcs))
    rotated = nutree_rotations(NU, tree)
    rotation = (len(rotated) == 1
                and rotated[0].points == (tree.points - {(1, 2)}) | {(2, 3)})
    return {"graph_shape": shape, "v_in_roots": v_in, "vertex6_framings": vertex6,
            "ij_sets": ij_sets, "horiz_sequence": horiz_ok, "rotation_12_to_23": rotation}


def criterion_9() -> tuple[bool, str]:
    checks = _golden_checks()
    return all(checks.values()), ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in checks.items())


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("number", range(1, 10), ids=[f"criterion_{k}" for k in range(1, 10)])
def test_acceptance(number, report):
    ok, detail = CRITERIA[number - 1]()
    report(number, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for k, crit in enumerate(CRITERIA, 1):
        ok, detail = crit()
        results.append(ok)
        print(_line(k, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
