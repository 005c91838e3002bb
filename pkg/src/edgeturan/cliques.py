"""Exact clique counts and per-vertex neighbourhood diagnostics."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .graph import Graph, bits


def _forward_masks(g: Graph) -> list[int]:
    """Adjacency relabelled by non-increasing degree (ties by index), keeping
    only neighbours later in that order."""
    order = sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))
    rank = [0] * g.n
    for i, v in enumerate(order):
        rank[v] = i
    fwd = []
    for v in order:
        i = rank[v]
        mask = 0
        for u in bits(g.adj[v]):
            if rank[u] > i:
                mask |= 1 << rank[u]
        fwd.append(mask)
    return fwd


def _count(fwd: list[int], cand: int, k: int) -> int:
    if k == 1:
        return cand.bit_count()
    total = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        sub = cand & fwd[v]
        if sub.bit_count() >= k - 1:
            total += _count(fwd, sub, k - 1)
    return total


def count_kt(g: Graph, t: int) -> int:
    """Number of t-vertex complete subgraphs of ``g``."""
    if t < 1:
        raise ValueError("t must be positive")
    if t > g.n:
        return 0
    if t == 2:
        return g.m
    return _count(_forward_masks(g), (1 << g.n) - 1, t)


def count_kt_naive(g: Graph, t: int) -> int:
    """Reference counter: test every t-subset of vertices."""
    total = 0
    for sub in combinations(range(g.n), t):
        if all(g.adj[u] >> v & 1 for u, v in combinations(sub, 2)):
            total += 1
    return total


def has_clique(g: Graph, k: int) -> bool:
    """True iff ``g`` contains K_k; stops at the first one found."""
    if k <= 1:
        return k <= g.n
    fwd = _forward_masks(g)

    def search(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if search(cand & fwd[v], need - 1):
                return True
        return False

    return search((1 << g.n) - 1, k)


def clique_number(g: Graph) -> int:
    k = 1 if g.n else 0
    while has_clique(g, k + 1):
        k += 1
    return k


@dataclass(frozen=True)
class CliqueProfile:
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {"counts": {str(t): str(c) for t, c in self.counts.items()},
                "total": str(self.total)}


def clique_profile(g: Graph) -> CliqueProfile:
    """k_t(g) for every t from 2 up to the clique number."""
    fwd = _forward_masks(g)
    tally: dict[int, int] = {}

    def walk(cand: int, depth: int):
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            tally[depth + 1] = tally.get(depth + 1, 0) + 1
            sub = cand & fwd[v]
            if sub:
                walk(sub, depth + 1)

    walk((1 << g.n) - 1, 0)
    tally.pop(1, None)
    return CliqueProfile({t: tally[t] for t in sorted(tally)})


@dataclass(frozen=True)
class VertexDiagnostics:
    t: int
    degree: tuple[int, ...]
    mu: tuple[int, ...]
    mu_t: tuple[int, ...]


def vertex_diagnostics(g: Graph, t: int) -> VertexDiagnostics:
    """Per vertex: degree, non-adjacent pairs in N(v) (``mu``) and
    (t-1)-subsets of N(v) that are not cliques (``mu_t``).

    Both are found by listing subsets of each neighbourhood directly.
    """
    if t < 3:
        raise ValueError("t must be at least 3")
    adj = g.adj
    deg, mu, mu_t = [], [], []
    for v in range(g.n):
        nb = bits(adj[v])
        deg.append(len(nb))
        mu.append(sum(1 for a, b in combinations(nb, 2) if not adj[a] >> b & 1))
        missing = 0
        for sub in combinations(nb, t - 1):
            if not all(adj[a] >> b & 1 for a, b in combinations(sub, 2)):
                missing += 1
        mu_t.append(missing)
    return VertexDiagnostics(t, tuple(deg), tuple(mu), tuple(mu_t))


def induced_k12_count(g: Graph) -> int:
    """Vertex triples spanning exactly two edges (induced paths on 3 vertices)."""
    adj = g.adj
    total = 0
    for a, b, c in combinations(range(g.n), 3):
        if (adj[a] >> b & 1) + (adj[a] >> c & 1) + (adj[b] >> c & 1) == 2:
            total += 1
    return total


def vertex_clique_bound(d: int, mu_t: int, t: int) -> int:
    """Cliques K_t through a vertex of degree d: C(d, t-1) - mu_t."""
    return comb(d, t - 1) - mu_t
