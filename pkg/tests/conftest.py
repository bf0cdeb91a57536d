from __future__ import annotations

import itertools

import pytest

from nucaracol.paths import LatticePath


def normalized_paths(max_len: int, min_len: int = 1) -> list[LatticePath]:
    """Every path starting with N with min_len <= a + b <= max_len."""
    out = []
    for n in range(min_len, max_len + 1):
        for tail in itertools.product("NE", repeat=n - 1):
            out.append(LatticePath("N" + "".join(tail)))
    return out


@pytest.fixture
def nu35() -> LatticePath:
    return LatticePath("NENEENEE")


@pytest.fixture
def nu_21031() -> LatticePath:
    return LatticePath("NEENENNEEENE")
