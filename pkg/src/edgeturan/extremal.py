"""Maximum K_t counts under an edge budget and a degree cap, the extremal
constructions, and recognition of extremal graphs.

For ``m = q*C(delta+1, 2) + b`` with ``0 <= b < C(delta+1, 2)`` and
``b = C(r, 2) + s`` (``0 <= s < r``), the maximum of k_t over graphs with
m edges and maximum degree at most delta is attained by q disjoint copies
of K_{delta+1} plus the colex graph L_b.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .cliques import has_clique
from .colex import build_colex, colex_decompose
from .graph import (CanonicalForm, Graph, canonical_form, complete_graph,
                    components, degree_sequence, disjoint_union, max_degree,
                    remove_isolated)


class DegreeBoundError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeDecomposition:
    m: int
    delta: int
    q: int
    b: int
    r: int
    s: int

    def to_json(self) -> dict:
        return {"m": self.m, "delta": self.delta, "q": self.q, "b": self.b,
                "r": self.r, "s": self.s}


def decompose(m: int, delta: int) -> EdgeDecomposition:
    if m < 0:
        raise ValueError("m must be non-negative")
    if delta < 1:
        raise ValueError("delta must be at least 1")
    q, b = divmod(m, comb(delta + 1, 2))
    d = colex_decompose(b)
    return EdgeDecomposition(m, delta, q, b, d.r, d.s)


def extremal_value(t: int, delta: int, m: int) -> int:
    """q*C(delta+1,t) + C(r,t) + C(s,t-1); zero automatically when t > delta+1."""
    d = decompose(m, delta)
    return d.q * comb(delta + 1, t) + comb(d.r, t) + comb(d.s, t - 1)


def build_extremal(t: int, delta: int, m: int) -> Graph:
    """q*K_{delta+1} together with L_b.  (The construction does not depend on t.)"""
    d = decompose(m, delta)
    return disjoint_union([complete_graph(delta + 1)] * d.q + [build_colex(d.b)])


class FamilyCase(str, Enum):
    EMPTY = "empty"
    UNIQUE_COLEX = "unique_colex"
    CONTAINS_KR = "contains_Kr"
    ANY_GRAPH = "any_graph"


@dataclass(frozen=True)
class ExtremalFamilySpec:
    case: FamilyCase
    t: int
    delta: int
    b: int
    r: int
    s: int


def family_spec(t: int, delta: int, b: int) -> ExtremalFamilySpec:
    """Which remainder graphs L with b edges complete an extremal graph."""
    if not 0 <= b < comb(delta + 1, 2):
        raise ValueError(f"b={b} outside [0, C({delta + 1},2))")
    d = colex_decompose(b)
    if b == 0:
        case = FamilyCase.EMPTY
    elif d.s >= t - 1:
        case = FamilyCase.UNIQUE_COLEX
    elif d.r >= t:
        case = FamilyCase.CONTAINS_KR
    else:
        case = FamilyCase.ANY_GRAPH
    return ExtremalFamilySpec(case, t, delta, b, d.r, d.s)


@dataclass(frozen=True)
class ExtremalityVerdict:
    is_extremal: bool
    q_found: int
    remainder: Graph
    reason: str

    @property
    def remainder_certificate(self) -> CanonicalForm:
        """Certificate of what is left after removing the K_{delta+1} components."""
        return canonical_form(self.remainder)

    def to_json(self) -> dict:
        return {"is_extremal": self.is_extremal, "q_found": self.q_found,
                "remainder": self.remainder_certificate.graph6(),
                "reason": self.reason}


def _strip_full_cliques(g: Graph, delta: int) -> tuple[int, Graph]:
    """Remove components isomorphic to K_{delta+1}; return (how many, rest)."""
    full = comb(delta + 1, 2)
    q_found = 0
    rest = []
    for c in components(g):
        if c.n == delta + 1 and c.m == full:
            q_found += 1
        else:
            rest.append(c)
    return q_found, disjoint_union(rest)


def _check_degree(g: Graph, delta: int):
    if max_degree(g) > delta:
        raise DegreeBoundError(f"maximum degree {max_degree(g)} exceeds delta={delta}")


def is_extremal(g: Graph, t: int, delta: int) -> ExtremalityVerdict:
    """Decide whether ``g`` maximises k_t among graphs with its edge count
    and maximum degree at most ``delta``."""
    _check_degree(g, delta)
    g = remove_isolated(g)
    d = decompose(g.m, delta)
    q_found, rest = _strip_full_cliques(g, delta)
    if t > delta + 1:
        return ExtremalityVerdict(True, q_found, rest, "t > delta+1: every graph has k_t = 0")
    if q_found != d.q:
        return ExtremalityVerdict(False, q_found, rest,
                                  f"found {q_found} copies of K_{delta + 1}, need {d.q}")
    fam = family_spec(t, delta, d.b)
    if fam.case is FamilyCase.EMPTY:
        ok, why = True, "b = 0: remainder is empty"
    elif fam.case is FamilyCase.UNIQUE_COLEX:
        colex_graph = build_colex(d.b)
        ok = (degree_sequence(rest) == degree_sequence(colex_graph)
              and canonical_form(rest) == canonical_form(colex_graph))
        why = f"s={d.s} >= t-1: remainder must be L_{d.b}"
    elif fam.case is FamilyCase.CONTAINS_KR:
        ok = has_clique(rest, d.r)
        why = f"r={d.r} >= t, s={d.s} < t-1: remainder must contain K_{d.r}"
    else:
        ok, why = True, f"r={d.r} < t: any remainder with b={d.b} edges"
    return ExtremalityVerdict(ok, q_found, rest, why)


def total_extremal_value(delta: int, m: int) -> int:
    """Maximum total clique count (orders >= 2): k~(q*K_{delta+1} + L_b)."""
    d = decompose(m, delta)
    return d.q * (2 ** (delta + 1) - delta - 2) + (2 ** d.r - d.r - 1) + (2 ** d.s - 1)


def total_extremal_graphs(delta: int, m: int) -> list[Graph]:
    """All maximisers of the total clique count: q*K_{delta+1} + L_b, and
    additionally q*K_{delta+1} + K_r + K_2 when s = 1."""
    d = decompose(m, delta)
    base = [complete_graph(delta + 1)] * d.q
    out = [disjoint_union(base + [build_colex(d.b)])]
    if d.s == 1:
        out.append(disjoint_union(base + [complete_graph(d.r), complete_graph(2)]))
    return out


def is_total_extremal(g: Graph, delta: int) -> ExtremalityVerdict:
    _check_degree(g, delta)
    g = remove_isolated(g)
    d = decompose(g.m, delta)
    q_found, rest = _strip_full_cliques(g, delta)
    cert = canonical_form(g)
    targets = [canonical_form(h) for h in total_extremal_graphs(delta, g.m)]
    ok = cert in targets
    if ok and cert != targets[0]:
        why = f"s=1: matches q*K_{delta + 1} + K_{d.r} + K_2"
    elif ok:
        why = f"matches q*K_{delta + 1} + L_{d.b}"
    else:
        why = "not one of the total-clique maximisers"
    return ExtremalityVerdict(ok, q_found, rest, why)


def vertex_extremal_value(n: int, delta: int, t: int) -> int:
    """Vertex-budget analogue: k_t(q*K_{delta+1} + K_r) with n = q(delta+1) + r."""
    q, r = divmod(n, delta + 1)
    return q * comb(delta + 1, t) + comb(r, t)


def vertex_total_value(n: int, delta: int) -> int:
    q, r = divmod(n, delta + 1)
    return q * (2 ** (delta + 1) - delta - 2) + (2 ** r - r - 1)

