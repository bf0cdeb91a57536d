"""Bijections between routes, arcs, lattice points, trees, paths and gravity diagrams."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

import networkx as nx

from .caracol import CaracolGraph, Edge, Route
from .framing import Clique
from .paths import EAST, NORTH, LatticePath, Point, prefix_sums


# -- (I, Jbar) encoding ------------------------------------------------------

@dataclass(frozen=True)
class IJEncoding:
    """Nodes 1..k of the extended path E nu N.

    ``plain`` maps a position to ("E", x) or ("N", y) with 0-based counters;
    ``refined`` maps it to ("E", j, i) or ("N", j) with the indexing where
    E_{j,i} is i steps before the j-th N.
    """

    nu: LatticePath

    @cached_property
    def word(self) -> str:
        return EAST + self.nu.steps + NORTH

    @property
    def k(self) -> int:
        return len(self.word)

    @cached_property
    def I(self) -> tuple[int, ...]:
        return tuple(p for p, ch in enumerate(self.word, 1) if ch == EAST)

    @cached_property
    def Jbar(self) -> tuple[int, ...]:
        return tuple(p for p, ch in enumerate(self.word, 1) if ch == NORTH)

    @cached_property
    def plain(self) -> dict[int, tuple]:
        out, x, y = {}, 0, 0
        for p, ch in enumerate(self.word, 1):
            if ch == EAST:
                out[p] = (EAST, x)
                x += 1
            else:
                out[p] = (NORTH, y)
                y += 1
        return out

    @cached_property
    def refined(self) -> dict[int, tuple]:
        out = {}
        j = 0
        pending: list[int] = []
        for p, ch in enumerate(self.word, 1):
            if ch == EAST:
                pending.append(p)
            else:
                j += 1
                out[p] = (NORTH, j)
                for steps, q in enumerate(reversed(pending), 1):
                    out[q] = (EAST, j, steps)
                pending = []
        return out

    @cached_property
    def position_of(self) -> dict[tuple, int]:
        return {lab: p for p, lab in self.refined.items()}

    def interior_word(self) -> str:
        return "".join(self.plain[p][0] for p in range(2, self.k))


def ij_encoding(nu: LatticePath) -> IJEncoding:
    return IJEncoding(nu)


@dataclass(frozen=True, order=True)
class Arc:
    tail: int
    head: int

    def as_list(self) -> list[int]:
        return [self.tail, self.head]


def arcs_cross(s: Arc, t: Arc) -> bool:
    if s.tail > t.tail:
        s, t = t, s
    return s.tail < t.tail < s.head < t.head


def all_arcs(enc: IJEncoding) -> list[Arc]:
    return [Arc(i, j) for i in enc.I for j in enc.Jbar if i < j]


def phi(enc: IJEncoding, r: Route) -> Arc:
    """R_{j,i,l} -> (E_{j,i}, N_l)."""
    pos = enc.position_of
    try:
        return Arc(pos[(EAST, r.j, r.i)], pos[(NORTH, r.ell)])
    except KeyError:
        raise ValueError(f"{r} is not a route of car({enc.nu})") from None


def phi_inv(enc: IJEncoding, arc: Arc) -> Route:
    tail, head = enc.refined.get(arc.tail), enc.refined.get(arc.head)
    if not tail or not head or tail[0] != EAST or head[0] != NORTH or arc.tail >= arc.head:
        raise ValueError(f"{arc} is not an arc of the (I, Jbar) pair for {enc.nu}")
    _, j, i = tail
    return Route(j, i, head[1])


def gamma(enc: IJEncoding, arc: Arc) -> Point:
    return enc.plain[arc.tail][1], enc.plain[arc.head][1]


def gamma_inv(enc: IJEncoding, p: Point) -> Arc:
    x, y = p
    tail = next(q for q, lab in enc.plain.items() if lab == (EAST, x))
    head = next(q for q, lab in enc.plain.items() if lab == (NORTH, y))
    if tail > head:
        raise ValueError(f"{p} lies below {enc.nu}")
    return Arc(tail, head)


def theta(enc: IJEncoding, r: Route) -> Point:
    return gamma(enc, phi(enc, r))


def theta_inv(enc: IJEncoding, p: Point) -> Route:
    return phi_inv(enc, gamma_inv(enc, p))


def psi(g: CaracolGraph, r: Route) -> Point:
    """(#bounded faces under r above the axis, #bounded faces under r below the axis)."""
    first, *_, last = g.route_edges(r)
    above = g.above_stack.index(first)         # faces between this arc and the axis
    below = g.a - g.below_stack.index(last)    # faces further out than the last arc
    return above, below


def psi_inv(g: CaracolGraph, p: Point) -> Route:
    x, y = p
    if not (0 <= y <= g.a and 0 <= x < len(g.above_stack)):
        raise ValueError(f"{p} is outside L_nu")
    first = g.above_stack[x]
    last = g.below_stack[g.a - y]
    r = Route(first.v - 1, first.label, last.u - 1)
    if r not in set(g.routes):
        raise ValueError(f"{p} lies below {g.nu}")
    return r


# -- compatibility of lattice points -----------------------------------------

def in_region(nu: LatticePath, p: Point) -> bool:
    x, y = p
    return 0 <= y <= nu.a and 0 <= x <= nu.row_extent[y]


def incompatible(p: Point, q: Point, mode: str, nu: LatticePath | None = None) -> bool:
    """``mode="nu_tree"``: strict SW/NE pair whose rectangle stays in L_nu.
    ``mode="planar"``: x1 < x2 with y1 > y2.
    """
    (x1, y1), (x2, y2) = sorted((p, q))
    if mode == "planar":
        return x1 < x2 and y1 > y2
    if mode == "nu_tree":
        if nu is None:
            raise ValueError("nu_tree compatibility needs nu")
        return x1 < x2 and y1 < y2 and in_region(nu, (x2, y1))
    raise ValueError(f"unknown mode {mode!r}")


def maximal_compatible_sets(nu: LatticePath, mode: str) -> list[frozenset[Point]]:
    pts = nu.lattice_points_above()
    h = nx.Graph()
    h.add_nodes_from(pts)
    h.add_edges_from((p, q) for p, q in combinations(pts, 2)
                     if not incompatible(p, q, mode, nu))
    return sorted((frozenset(c) for c in nx.find_cliques(h)), key=sorted)


# -- (I, Jbar)-trees and nu-trees ---------------------------------------------

@dataclass(frozen=True)
class IJTree:
    arcs: frozenset[Arc]

    def is_valid(self, enc: IJEncoding) -> bool:
        ok_arcs = all(a.tail in enc.I and a.head in enc.Jbar and a.tail < a.head
                      for a in self.arcs)
        noncrossing = not any(arcs_cross(s, t) for s, t in combinations(self.arcs, 2))
        return ok_arcs and noncrossing and len(self.arcs) == len(enc.I) + len(enc.Jbar) - 1

    def label(self) -> str:
        return " ".join(f"{a.tail}-{a.head}" for a in sorted(self.arcs))


def ij_trees(nu: LatticePath) -> list[IJTree]:
    """Maximal non-crossing increasing arc sets, by brute-force clique search."""
    enc = ij_encoding(nu)
    arcs = all_arcs(enc)
    h = nx.Graph()
    h.add_nodes_from(arcs)
    h.add_edges_from((s, t) for s, t in combinations(arcs, 2) if not arcs_cross(s, t))
    return sorted((IJTree(frozenset(c)) for c in nx.find_cliques(h)),
                  key=lambda t: sorted(t.arcs))


@dataclass(frozen=True)
class NuTree:
    points: frozenset[Point]

    def label(self) -> str:
        return " ".join(f"{x}{y}" for x, y in sorted(self.points, key=lambda p: (p[1], p[0])))

    def to_json(self) -> str:
        return json.dumps(sorted([x, y] for x, y in self.points))

    def is_valid(self, nu: LatticePath) -> bool:
        pts = self.points
        if not all(in_region(nu, p) for p in pts):
            return False
        if any(incompatible(p, q, "nu_tree", nu) for p, q in combinations(pts, 2)):
            return False
        others = set(nu.lattice_points_above()) - pts
        # maximal: every other point clashes with something
        return all(any(incompatible(o, p, "nu_tree", nu) for p in pts) for o in others)

    def has_tree_shape(self, nu: LatticePath) -> bool:
        """Every non-root point has a point above it or to its left, not both."""
        root = (0, nu.a)
        for x, y in self.points:
            if (x, y) == root:
                continue
            above = any(px == x and py > y for px, py in self.points)
            left = any(py == y and px < x for px, py in self.points)
            if above == left:
                return False
        return True


def clique_to_ijtree(enc: IJEncoding, c: Clique) -> IJTree:
    return IJTree(frozenset(phi(enc, r) for r in c))


def clique_to_nutree(enc: IJEncoding, c: Clique) -> NuTree:
    return NuTree(frozenset(theta(enc, r) for r in c))


def nutree_to_path(nu: LatticePath, t: NuTree) -> LatticePath:
    """nu-Dyck path with (points in row y) - 1 east steps at each height y."""
    rows = Counter(y for _, y in t.points)
    return LatticePath("".join(
        (NORTH if y else "") + EAST * (rows[y] - 1) for y in range(nu.a + 1)))


def nutree_from_path(nu: LatticePath, mu: LatticePath) -> NuTree:
    """Inverse of ``nutree_to_path``: fill rows bottom-up, rightmost compatible points first."""
    per_row = Counter(mu.east_heights)
    chosen: list[Point] = []
    for y in range(nu.a + 1):
        need = per_row[y] + 1
        row = [(x, y) for x in range(nu.row_extent[y], -1, -1)
               if not any(incompatible((x, y), p, "nu_tree", nu) for p in chosen)]
        if len(row) < need:
            raise ValueError(f"{mu} is not a {nu}-Dyck path")
        chosen.extend(row[:need])
    return NuTree(frozenset(chosen))


def nutree_rotate(nu: LatticePath, t: NuTree, r: Point, p: Point, q: Point) -> NuTree:
    """Replace the SW corner ``r`` of the rectangle spanned by ``p`` (NW) and ``q`` (SE)."""
    if not {r, p, q} <= t.points:
        raise ValueError("p, q and r must belong to the tree")
    if not (p[0] == r[0] and p[1] > r[1] and q[1] == r[1] and q[0] > r[0]):
        raise ValueError(f"{r} is not the SW corner of the rectangle of {p} and {q}")
    corner = (q[0], p[1])
    out = NuTree((t.points - {r}) | {corner})
    if not out.is_valid(nu):
        raise ValueError(f"rotating at {r} does not give a {nu}-tree")
    return out


def nutree_rotations(nu: LatticePath, t: NuTree) -> list[NuTree]:
    """All right rotations, using the nearest point above and to the right of each r."""
    out = []
    for r in sorted(t.points):
        above = [s for s in t.points if s[0] == r[0] and s[1] > r[1]]
        right = [s for s in t.points if s[1] == r[1] and s[0] > r[0]]
        if not above or not right:
            continue
        p = min(above, key=lambda s: s[1])
        q = min(right, key=lambda s: s[0])
        try:
            out.append(nutree_rotate(nu, t, r, p, q))
        except ValueError:
            continue
    return out


# -- planar side: Psi ----------------------------------------------------------

def points_to_path(points: Iterable[Point]) -> LatticePath:
    pts = sorted(points, key=lambda p: (p[0] + p[1], p))
    if pts[0] != (0, 0):
        raise ValueError("point set does not start at the origin")
    steps = []
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if (x1 - x0, y1 - y0) == (0, 1):
            steps.append(NORTH)
        elif (x1 - x0, y1 - y0) == (1, 0):
            steps.append(EAST)
        else:
            raise ValueError("points do not form a monotone lattice path")
    return LatticePath("".join(steps))


def clique_to_dyckpath(g: CaracolGraph, c: Clique) -> LatticePath:
    mu = points_to_path(psi(g, r) for r in c)
    if (mu.a, mu.b) != (g.a, g.b):
        raise ValueError("clique does not reach (b, a)")
    return mu


def dyckpath_to_clique(g: CaracolGraph, mu: LatticePath) -> Clique:
    return Clique(frozenset(psi_inv(g, p) for p in mu.points))


# -- universal routes ----------------------------------------------------------

def length_universal_points(nu: LatticePath) -> set[Point]:
    """(0, a), valleys of nu, start points of initial N steps, end points of terminal E steps."""
    from .paths import valleys
    pts = nu.points
    s = nu.steps
    out = {(0, nu.a)} | set(valleys(nu))
    k = 0
    while k < len(s) and s[k] == NORTH:
        out.add(pts[k])
        k += 1
    k = len(s) - 1
    while k >= 0 and s[k] == EAST:
        out.add(pts[k + 1])
        k -= 1
    return out


def planar_universal_points(nu: LatticePath) -> set[Point]:
    """Lattice points on the initial N steps and on the terminal E steps of nu."""
    pts = nu.points
    s = nu.steps
    out = set()
    k = 0
    while k < len(s) and s[k] == NORTH:
        out.update((pts[k], pts[k + 1]))
        k += 1
    k = len(s) - 1
    while k >= 0 and s[k] == EAST:
        out.update((pts[k], pts[k + 1]))
        k -= 1
    return out


# -- gravity diagrams ----------------------------------------------------------

@dataclass(frozen=True)
class GravityDiagram:
    """In-degree gravity diagram in canonical form.

    Columns are the simple roots alpha_3..alpha_{a+2}; column c holds
    nu_1 + ... + nu_{c-2} dots. ``segments[c - 3]`` counts the dots of column
    c lying on a proper (length >= 2) segment; segments are right-justified
    and nested, so those dots are the topmost ones.
    """

    nu: LatticePath
    segments: tuple[int, ...]

    @property
    def columns(self) -> range:
        return range(3, self.nu.a + 3)

    def dots(self, c: int) -> int:
        return prefix_sums(self.nu.runs)[c - 2]

    def seg(self, c: int) -> int:
        return self.segments[c - 3]

    def validate(self) -> None:
        a = self.nu.a
        if len(self.segments) != a:
            raise ValueError(f"expected {a} columns, got {len(self.segments)}")
        for c in self.columns:
            if not 0 <= self.seg(c) <= self.dots(c):
                raise ValueError(f"column alpha_{c}: {self.seg(c)} segment dots of {self.dots(c)}")
        inner = [self.seg(c) for c in range(3, a + 2)]
        if any(s > t for s, t in zip(inner, inner[1:])):
            raise ValueError("longer segments must sit above shorter ones")
        last = self.seg(a + 2)
        if a == 1 and last:
            raise ValueError("a single column admits no proper segment")
        if a >= 2 and last != self.seg(a + 1):
            raise ValueError("every proper segment must reach the last column")

    def segment_lengths(self) -> list[int]:
        """Length (in columns) of the segment through each dot of the last column."""
        a = self.nu.a
        return [1 + sum(1 for c in range(3, a + 2) if self.seg(c) >= t)
                for t in range(1, self.nu.b + 1)]

    def vector_partition(self) -> Counter:
        """Multiset of edges (u, v) of car(nu) whose roots sum to v_in."""
        a = self.nu.a
        out: Counter = Counter()
        for L in self.segment_lengths():
            if L >= 2:
                out[(a + 3 - L, a + 3)] += 1
        for c in self.columns:
            singles = self.dots(c) - self.seg(c)
            if singles:
                out[(c, c + 1)] += singles
        return out

    def ascii(self) -> str:
        cols = list(self.columns)
        height = max((self.dots(c) for c in cols), default=0)
        lines = ["  ".join(f"a{c}" for c in cols)]
        for t in range(1, height + 1):
            cells = []
            for k, c in enumerate(cols):
                cell = "o" if t <= self.dots(c) else " "
                joined = (k + 1 < len(cols) and t <= self.seg(c)
                          and t <= self.seg(cols[k + 1]))
                cells.append(cell + ("---" if joined else "   "))
            lines.append("".join(cells).rstrip())
        return "\n".join(lines) + "\n"


def gravity_from_dyck(nu: LatticePath, mu: LatticePath) -> GravityDiagram:
    if not mu.is_weakly_above(nu):
        raise ValueError(f"{mu} is not a {nu}-Dyck path")
    a = nu.a
    h = mu.east_heights
    segs = [sum(1 for ht in h if ht <= c - 2) for c in range(3, a + 2)]
    segs.append(segs[-1] if segs else 0)
    d = GravityDiagram(nu, tuple(segs))
    d.validate()
    return d


def dyck_from_gravity(d: GravityDiagram) -> LatticePath:
    d.validate()
    a = d.nu.a
    heights = [a - sum(1 for c in range(3, a + 2) if d.seg(c) >= t)
               for t in range(1, d.nu.b + 1)]
    steps, y = [], 0
    for ht in heights:
        steps.append(NORTH * (ht - y))
        steps.append(EAST)
        y = ht
    steps.append(NORTH * (a - y))
    return LatticePath("".join(steps))


def gravity_diagrams(nu: LatticePath) -> list[GravityDiagram]:
    """Every valid diagram, enumerated column by column."""
    a = nu.a
    sums = prefix_sums(nu.runs)
    out = []

    def extend(prefix: list[int], c: int):
        if c == a + 2:
            last = prefix[-1] if prefix else 0
            out.append(GravityDiagram(nu, tuple(prefix + [last])))
            return
        lo = prefix[-1] if prefix else 0
        for s in range(lo, sums[c - 2] + 1):
            extend(prefix + [s], c + 1)

    extend([], 3)
    return out


def edge_of(g: CaracolGraph, u: int, v: int) -> Edge:
    return next(e for e in g.edges if (e.u, e.v) == (u, v))
