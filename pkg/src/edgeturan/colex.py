"""Colex order on pairs, colex graphs L_m and the Kruskal-Katona clique bound."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from .binom import binom_real, u_root
from .graph import Graph, GraphError, MAX_VERTICES, from_edge_list


@dataclass(frozen=True)
class ColexDecomposition:
    m: int
    r: int
    s: int


def colex_decompose(m: int) -> ColexDecomposition:
    """Unique (r, s) with m = C(r,2) + s and 0 <= s < r."""
    if m < 0:
        raise ValueError("m must be non-negative")
    r = (1 + isqrt(1 + 8 * m)) // 2
    # isqrt gives the largest r with C(r,2) <= m
    return ColexDecomposition(m, r, m - comb(r, 2))


def colex_pair_unrank(i: int) -> tuple[int, int]:
    """The i-th (0-indexed) 2-subset of {1, 2, ...} in colex order, as (min, max)."""
    if i < 0:
        raise ValueError("index must be non-negative")
    d = colex_decompose(i)
    # pairs with max <= r come first; there are C(r,2) of them
    return d.s + 1, d.r + 1


def build_colex(m: int) -> Graph:
    """L_m on vertices 0..r (colex vertex k becomes label k-1)."""
    if m == 0:
        return Graph(0, ())
    pairs = [colex_pair_unrank(i) for i in range(m)]
    n = max(b for _, b in pairs)
    if n > MAX_VERTICES:
        raise GraphError(f"L_{m} needs {n} > {MAX_VERTICES} vertices")
    return from_edge_list([(a - 1, b - 1) for a, b in pairs], n=n)


def colex_kt(m: int, t: int) -> int:
    """k_t(L_m) = C(r,t) + C(s,t-1)."""
    if t < 2:
        raise ValueError("t must be at least 2")
    d = colex_decompose(m)
    return comb(d.r, t) + comb(d.s, t - 1)


def kk_bound_real(m: int, t: int) -> float:
    """C(x, t) where C(x, 2) = m; 0 when x < t (no K_t fits in m edges)."""
    x = u_root(m)
    if x < t:
        return 0.0
    return binom_real(x, t)
