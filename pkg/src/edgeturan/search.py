"""Exhaustive enumeration of edge-bounded graphs and the brute-force
verifiers built on it.

Graphs are generated level by level (level m = m edges, no isolated
vertices) by adding one edge to each representative of level m-1 in every
way allowed by the degree cap, keeping one graph per canonical certificate.
Candidate edges equivalent under known automorphisms of the parent are
tried only once, and children that cannot have the parent as canonical
parent are skipped before labelling.  Levels are cached for the life of
the process; a level with a smaller degree cap is filtered from a cached
wider one when available.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .cliques import clique_profile, count_kt, has_clique
from .colex import build_colex, colex_decompose, colex_kt, kk_bound_real
from .extremal import (decompose, extremal_value, is_extremal,
                       total_extremal_graphs, total_extremal_value)
from .graph import (CanonicalForm, Graph, automorphism_generators, bits,
                    canonical_form, max_degree)

DEFAULT_MAX_EDGES = 14
KK_ATOL = 1e-9


class CapExceeded(ValueError):
    pass


def max_edges_cap(requested: int | None = None) -> int:
    """Enumeration cap: the default, raised by EXTREMAL_MAX_EDGES or ``requested``."""
    cap = DEFAULT_MAX_EDGES
    env = os.environ.get("EXTREMAL_MAX_EDGES")
    if env:
        cap = max(cap, int(env))
    if requested is not None:
        cap = max(cap, requested)
    return cap


@dataclass(frozen=True)
class EnumerationSpec:
    m: int
    delta: int | None = None  # None: no degree cap
    min_degree_one: bool = True


def _pair_orbit_reps(n: int, pairs: list[tuple[int, int]], gens) -> list[tuple[int, int]]:
    if not gens:
        return pairs
    parent = {p: p for p in pairs}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for gen in gens:
        for u, v in pairs:
            a, b = gen[u], gen[v]
            img = (a, b) if a < b else (b, a)
            ru, rv = find((u, v)), find(img)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    return [p for p in pairs if find(p) == p]


def _vertex_orbit_reps(verts: list[int], gens) -> list[int]:
    if not gens:
        return verts
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for gen in gens:
        for v in verts:
            a, b = find(v), find(gen[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [v for v in verts if find(v) == v]


def _may_be_canonical(adj: list[int], u: int, v: int) -> bool:
    """False when some edge outranks ``uv`` under an invariant edge score.

    The edge whose deletion gives a class's canonical parent maximises any
    isomorphism-invariant score, so a child whose new edge is outranked is
    generated again from its canonical parent and can be skipped.  Scores
    are (min degree, max degree, common neighbours, neighbour-degree sum),
    compared lazily.
    """
    deg = [a.bit_count() for a in adj]
    du, dv = deg[u], deg[v]
    lo, hi = min(du, dv), max(du, dv)
    rest = None
    nsum = None
    for x, a in enumerate(adj):
        dx = deg[x]
        if dx < lo:
            continue
        for y in bits(a >> (x + 1)):
            y += x + 1
            dy = deg[y]
            pair = (dx, dy) if dx < dy else (dy, dx)
            if pair < (lo, hi):
                continue
            if pair > (lo, hi):
                return False
            if nsum is None:
                nsum = [sum([deg[w] for w in bits(b)]) for b in adj]
                rest = ((adj[u] & adj[v]).bit_count(), nsum[u] + nsum[v])
            if ((a & adj[y]).bit_count(), nsum[x] + nsum[y]) > rest:
                return False
    return True


def children(g: Graph, delta: int | None) -> set[bytes]:
    """Certificates of the graphs obtained from ``g`` by adding one edge.

    Every class one edge above ``g`` whose canonical parent is ``g`` is
    included; other children may be skipped.
    """
    _, gens = automorphism_generators(g)
    n = g.n
    cap = n + 2 if delta is None else delta
    open_ = [v for v in range(n) if g.adj[v].bit_count() < cap]
    pairs = [(u, v) for i, u in enumerate(open_) for v in open_[i + 1:]
             if not g.adj[u] >> v & 1]
    cands = _pair_orbit_reps(n, pairs, gens)
    cands += [(u, n) for u in _vertex_orbit_reps(open_, gens)]
    if delta is None or delta >= 1:
        cands.append((n, n + 1))
    out: set[bytes] = set()
    for u, v in cands:
        size = max(n, v + 1)
        adj = list(g.adj) + [0] * (size - n)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        if _may_be_canonical(adj, u, v):
            out.add(canonical_form(Graph(size, tuple(adj))).certificate)
    return out


def _expand_chunk(args) -> set[bytes]:
    certs, delta = args
    out: set[bytes] = set()
    for c in certs:
        out |= children(CanonicalForm(c).graph(), delta)
    return out


def _next_level(level: Sequence[bytes], delta: int | None, jobs: int) -> list[bytes]:
    if jobs <= 1 or len(level) < 64:
        merged = _expand_chunk((level, delta))
    else:
        nchunks = jobs * 4
        chunks = [(level[i::nchunks], delta) for i in range(nchunks)]
        merged = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_expand_chunk, chunks):
                merged |= part
    return sorted(merged)


# (delta, m) -> sorted certificates; delta None means no degree cap
_LEVELS: dict[tuple[int | None, int], list[bytes]] = {(None, 0): [b""]}


def _default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def _covers(wide: int | None, narrow: int | None) -> bool:
    return wide is None or (narrow is not None and wide >= narrow)


def _level(delta: int | None, m: int, jobs: int) -> list[bytes]:
    key = (delta, m)
    if key in _LEVELS:
        return _LEVELS[key]
    # a class with a smaller degree cap is a filter of any wider cached class
    wider = sorted((d for d, mm in _LEVELS if mm == m and d != delta and _covers(d, delta)),
                   key=lambda d: (d is None, d))
    if wider:
        src = _LEVELS[wider[0], m]
        out = [c for c in src if max_degree(CanonicalForm(c).graph()) <= delta]
    else:
        out = _next_level(_level(delta, m - 1, jobs), delta, jobs)
    _LEVELS[key] = out
    return out


def enumerate_certificates(spec: EnumerationSpec, *, max_edges: int | None = None,
                           jobs: int | None = None) -> list[bytes]:
    """Sorted certificates of every isomorphism class in ``spec``."""
    cap = max_edges_cap(max_edges)
    if spec.m < 0:
        raise ValueError("m must be non-negative")
    if spec.m > cap:
        raise CapExceeded(f"m={spec.m} exceeds the enumeration cap {cap}")
    if spec.delta is not None and spec.delta < 1:
        raise ValueError("delta must be at least 1")
    if jobs is None:
        jobs = _default_jobs()
    return _level(spec.delta, spec.m, jobs)


def enumerate_graphs(spec: EnumerationSpec, *, max_edges: int | None = None,
                     jobs: int | None = None) -> Iterator[Graph]:
    """One canonical representative per class, in certificate order."""
    for c in enumerate_certificates(spec, max_edges=max_edges, jobs=jobs):
        yield CanonicalForm(c).graph()


def clear_cache():
    _LEVELS.clear()
    _LEVELS[None, 0] = [b""]


# ---------------------------------------------------------------------------
# verifiers

@dataclass
class VerificationReport:
    kind: str
    m: int
    delta: int | None
    t: int | None
    oracle_max: int
    formula_value: int
    match: bool
    argmax_certificates: list[CanonicalForm]
    membership_agreement: bool
    corpus_size: int
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.match and self.membership_agreement

    def to_json(self, include_elapsed: bool = True) -> dict:
        out = {
            "kind": self.kind,
            "m": self.m,
            "delta": self.delta,
            "t": self.t,
            "oracle_max": str(self.oracle_max),
            "formula": str(self.formula_value),
            "match": self.match,
            "argmax": [c.graph6() for c in self.argmax_certificates],
            "membership_agreement": self.membership_agreement,
            "corpus_size": self.corpus_size,
        }
        if include_elapsed:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out


def _corpus(m: int, delta: int | None, **kw) -> list[tuple[CanonicalForm, Graph]]:
    return [(CanonicalForm(c), CanonicalForm(c).graph())
            for c in enumerate_certificates(EnumerationSpec(m, delta), **kw)]


def _argmax(corpus, score) -> tuple[int, list[CanonicalForm], list[int]]:
    values = [score(g) for _, g in corpus]
    best = max(values)
    winners = sorted(c for (c, _), v in zip(corpus, values) if v == best)
    return best, winners, values


def brute_max(m: int, delta: int | None, t: int, **kw) -> tuple[int, list[CanonicalForm]]:
    """Largest k_t over the class and the sorted certificates achieving it."""
    best, winners, _ = _argmax(_corpus(m, delta, **kw), lambda g: count_kt(g, t))
    return best, winners


def verify_main(m: int, delta: int, t: int, **kw) -> VerificationReport:
    """Compare the enumerated maximum of k_t and its maximisers with
    :func:`extremal_value` and :func:`is_extremal`."""
    start = time.perf_counter()
    corpus = _corpus(m, delta, **kw)
    best, winners, _ = _argmax(corpus, lambda g: count_kt(g, t))
    formula = extremal_value(t, delta, m)
    accepted = sorted(c for c, g in corpus if is_extremal(g, t, delta).is_extremal)
    return VerificationReport("main", m, delta, t, best, formula, best == formula,
                              winners, winners == accepted, len(corpus),
                              time.perf_counter() - start)


def verify_total(m: int, delta: int, **kw) -> VerificationReport:
    """Total clique count version.  ``membership_agreement`` additionally
    requires two maximisers when s = 1 and one otherwise."""
    start = time.perf_counter()
    corpus = _corpus(m, delta, **kw)
    best, winners, _ = _argmax(corpus, lambda g: clique_profile(g).total)
    formula = total_extremal_value(delta, m)
    targets = {canonical_form(h) for h in total_extremal_graphs(delta, m)}
    accepted = sorted(c for c, _ in corpus if c in targets)
    expected_size = 2 if decompose(m, delta).s == 1 else 1
    agree = winners == accepted and len(winners) == expected_size
    return VerificationReport("total", m, delta, None, best, formula, best == formula,
                              winners, agree, len(corpus), time.perf_counter() - start)


def kk_achiever(g: Graph, m: int, t: int) -> bool:
    """Whether an m-edge graph attains k_t(L_m), by the three-case rule."""
    d = colex_decompose(m)
    if d.s >= t - 1:
        return canonical_form(g) == canonical_form(build_colex(m))
    if d.r >= t:
        return has_clique(g, d.r)
    return True


def verify_kk(m: int, t: int, **kw) -> VerificationReport:
    """No degree cap.  ``match`` also requires every graph to respect the
    real-valued bound C(x, t) with C(x, 2) = m."""
    start = time.perf_counter()
    corpus = _corpus(m, None, **kw)
    best, winners, values = _argmax(corpus, lambda g: count_kt(g, t))
    formula = colex_kt(m, t)
    bound = kk_bound_real(m, t) + KK_ATOL
    within = all(v <= bound for v in values)
    accepted = sorted(c for c, g in corpus if kk_achiever(g, m, t))
    return VerificationReport("kk", m, None, t, best, formula, best == formula and within,
                              winners, winners == accepted, len(corpus),
                              time.perf_counter() - start)
