"""Lattice paths over {N, E}, nu-Dyck paths and the two lattices on them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate

from .lattice import FiniteLattice

NORTH, EAST = "N", "E"
Point = tuple[int, int]


class PathSyntaxError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(message + where)


@dataclass(frozen=True, order=True)
class LatticePath:
    """A word over {N, E} running from (0, 0) to (b, a)."""

    steps: str

    def __post_init__(self):
        bad = set(self.steps) - {NORTH, EAST}
        if bad:
            raise ValueError(f"steps must be over {{N, E}}, got {sorted(bad)}")

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def a(self) -> int:
        return self.steps.count(NORTH)

    @property
    def b(self) -> int:
        return self.steps.count(EAST)

    @property
    def starts_with_north(self) -> bool:
        return self.steps.startswith(NORTH)

    @cached_property
    def runs(self) -> tuple[int, ...]:
        """E-run lengths nu_1..nu_a following each N step.

        E steps before the first N are not part of any run; callers that
        need the run decomposition work with normalized paths.
        """
        out = []
        for ch in self.steps:
            if ch == NORTH:
                out.append(0)
            elif out:
                out[-1] += 1
        return tuple(out)

    @classmethod
    def from_runs(cls, runs) -> "LatticePath":
        return cls("".join(NORTH + EAST * r for r in runs))

    @cached_property
    def points(self) -> tuple[Point, ...]:
        x = y = 0
        pts = [(0, 0)]
        for ch in self.steps:
            if ch == NORTH:
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return tuple(pts)

    @cached_property
    def row_extent(self) -> tuple[int, ...]:
        """Largest x reached at each height 0..a."""
        ext = [0] * (self.a + 1)
        for x, y in self.points:
            ext[y] = max(ext[y], x)
        return tuple(ext)

    @cached_property
    def east_heights(self) -> tuple[int, ...]:
        """Height of the t-th east step, t = 1..b."""
        return tuple(y for (x0, y), ch in zip(self.points, self.steps) if ch == EAST)

    def contains_point(self, p: Point) -> bool:
        return p in set(self.points)

    def lattice_points_above(self) -> list[Point]:
        """L_nu: points of the (b, a) box weakly above this path."""
        return [(x, y) for y in range(self.a + 1) for x in range(self.row_extent[y] + 1)]

    def is_weakly_above(self, nu: "LatticePath") -> bool:
        if (self.a, self.b) != (nu.a, nu.b):
            return False
        ext = nu.row_extent
        return all(x <= ext[y] for x, y in self.points)


def parse_path(text: str) -> LatticePath:
    """Parse ``NENEENEE`` or the exponent shorthand ``NE2NENNE3NE``.

    A digit run repeats the letter right before it, so ``E0`` is empty.
    """
    if text is None or not text.strip():
        raise PathSyntaxError("empty path")
    text = text.strip()
    out = []
    pos = 0
    for m in re.finditer(r"([NnEe])(\d*)|(.)", text):
        pos = m.start()
        if m.group(3) is not None:
            ch = m.group(3)
            if ch.isdigit():
                raise PathSyntaxError(f"exponent {ch!r} without a preceding step", pos)
            raise PathSyntaxError(f"invalid character {ch!r}", pos)
        letter = m.group(1).upper()
        count = int(m.group(2)) if m.group(2) else 1
        out.append(letter * count)
    return LatticePath("".join(out))


def normalize(nu: LatticePath) -> LatticePath:
    """Prepend one N when the path does not already start with N."""
    if nu.starts_with_north:
        return nu
    return LatticePath(NORTH + nu.steps)


def nu_dyck_paths(nu: LatticePath) -> list[LatticePath]:
    """All paths from (0,0) to (b,a) weakly above ``nu``, in lexicographic order."""
    a, b = nu.a, nu.b
    ext = nu.row_extent
    found: list[str] = []

    def extend(prefix: list[str], x: int, y: int):
        if x == b and y == a:
            found.append("".join(prefix))
            return
        if y < a:
            prefix.append(NORTH)
            extend(prefix, x, y + 1)
            prefix.pop()
        if x < ext[y]:
            prefix.append(EAST)
            extend(prefix, x + 1, y)
            prefix.pop()

    extend([], 0, 0)
    return [LatticePath(s) for s in sorted(found)]


def horiz(nu: LatticePath, mu: LatticePath, p: Point) -> int:
    """Number of east steps that fit to the right of ``p`` without crossing ``nu``."""
    if p not in mu.points:
        raise ValueError(f"point {p} is not on {mu}")
    x, y = p
    return nu.row_extent[y] - x


def valleys(mu: LatticePath) -> list[Point]:
    """Points ending an E step that is immediately followed by an N step."""
    return [mu.points[k + 1] for k in range(len(mu.steps) - 1)
            if mu.steps[k] == EAST and mu.steps[k + 1] == NORTH]


def stats(mu: LatticePath) -> tuple[int, int]:
    """(valleys, peaks): counts of EN and NE factors."""
    return mu.steps.count("EN"), mu.steps.count("NE")


def peaks(mu: LatticePath) -> int:
    return stats(mu)[1]


def tamari_rotate(nu: LatticePath, mu: LatticePath, p: Point) -> LatticePath:
    """Rotate ``mu`` at the valley ``p``: the E step before ``p`` swaps with mu[p, q]."""
    pts = mu.points
    try:
        k = pts.index(p)
    except ValueError:
        raise ValueError(f"point {p} is not on {mu}") from None
    s = mu.steps
    if not (0 < k < len(s) and s[k - 1] == EAST and s[k] == NORTH):
        raise ValueError(f"point {p} is not a valley of {mu}")
    h = horiz(nu, mu, p)
    q = next(j for j in range(k + 1, len(pts)) if horiz(nu, mu, pts[j]) == h)
    return LatticePath(s[:k - 1] + s[k:q] + EAST + s[q:])


def tamari_lattice(nu: LatticePath) -> FiniteLattice:
    paths = nu_dyck_paths(nu)
    covers = [(mu, tamari_rotate(nu, mu, p)) for mu in paths for p in valleys(mu)]
    return FiniteLattice.from_relation(paths, covers)


def young_ideal(nu: LatticePath) -> FiniteLattice:
    """I(nu) on nu-Dyck paths, drawn with ``nu`` at the bottom.

    ``(mu, pi)`` is a cover when ``pi`` replaces one EN factor of ``mu`` by NE.
    """
    paths = nu_dyck_paths(nu)
    covers = []
    for mu in paths:
        s = mu.steps
        for k in range(len(s) - 1):
            if s[k:k + 2] == "EN":
                covers.append((mu, LatticePath(s[:k] + "NE" + s[k + 2:])))
    return FiniteLattice.from_relation(paths, covers)


def partition_of(mu: LatticePath) -> tuple[int, ...]:
    """lambda(mu), top row first, trailing zeros kept (length a).

    Row k is the x-coordinate of the k-th N step counted from the top, which
    equals ``b - (nu_{a-k+1} + ... + nu_a)`` for a path starting with N.
    """
    xs = [x for (x, _), ch in zip(mu.points, mu.steps) if ch == NORTH]
    return tuple(reversed(xs))


def top_path(nu: LatticePath) -> LatticePath:
    return LatticePath(NORTH * nu.a + EAST * nu.b)


def prefix_sums(runs) -> list[int]:
    return [0] + list(accumulate(runs))
