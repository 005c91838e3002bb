"""Small simple graphs stored as per-vertex neighbour bitsets.

Vertices are ``0 .. n-1`` with ``n <= 64``.  Graph values are immutable;
every mutating-looking helper returns a new graph.

Isomorphism classes are identified by :func:`canonical_form`, which ignores
isolated vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or malformed serialized graph."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def add_edge(self, u: int, v: int) -> "Graph":
        """Return a copy with edge ``uv`` added, growing ``n`` if needed."""
        if u == v:
            raise GraphError("self-loop")
        n = max(self.n, u + 1, v + 1)
        adj = list(self.adj) + [0] * (n - self.n)
        if adj[u] >> v & 1:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@lru_cache(maxsize=1 << 16)
def bits(mask: int) -> tuple[int, ...]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def empty_graph(n: int = 0) -> Graph:
    return Graph(n, (0,) * n)


def from_edge_list(pairs: Iterable[Sequence[int]], n: int | None = None) -> Graph:
    """Build a graph from vertex pairs.

    ``n`` defaults to one more than the largest vertex index.  Duplicate
    pairs (in either orientation), self-loops and indices ``>= 64`` raise
    :class:`GraphError`.
    """
    pairs = [tuple(p) for p in pairs]
    top = max((max(p) for p in pairs), default=-1) + 1
    if n is None:
        n = top
    if top > n:
        raise GraphError(f"vertex index {top - 1} >= n={n}")
    if n > MAX_VERTICES:
        raise GraphError(f"vertex index {n - 1} exceeds the {MAX_VERTICES}-vertex limit")
    adj = [0] * n
    for p in pairs:
        if len(p) != 2:
            raise GraphError(f"not a pair: {p!r}")
        u, v = p
        if u < 0 or v < 0:
            raise GraphError(f"negative vertex in {p!r}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if adj[u] >> v & 1:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete_graph(k: int) -> Graph:
    return from_edge_list(combinations(range(k), 2), n=k)


def path_graph(k: int) -> Graph:
    return from_edge_list([(i, i + 1) for i in range(k - 1)], n=k)


def cycle_graph(k: int) -> Graph:
    return from_edge_list([(i, (i + 1) % k) for i in range(k)], n=k)


def star_graph(leaves: int) -> Graph:
    return from_edge_list([(0, i) for i in range(1, leaves + 1)], n=leaves + 1)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        pv = perm[v]
        mask = 0
        for u in bits(g.adj[v]):
            mask |= 1 << perm[u]
        adj[pv] = mask
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices``, relabelled ``0..k-1`` in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        mask = 0
        for u in bits(g.adj[v]):
            if u in index:
                mask |= 1 << index[u]
        adj.append(mask)
    return Graph(len(vertices), tuple(adj))


def remove_isolated(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.adj[v]]
    if len(keep) == g.n:
        return g
    return induced_subgraph(g, keep)


def max_degree(g: Graph) -> int:
    return max((a.bit_count() for a in g.adj), default=0)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees of all vertices, ascending."""
    return sorted(a.bit_count() for a in g.adj)


def component_vertex_sets(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components with at least one edge."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1 or not g.adj[v]:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(bits(comp))
    return out


def components(g: Graph) -> list[Graph]:
    """Connected components of the non-isolated part, each relabelled from 0."""
    return [induced_subgraph(g, vs) for vs in component_vertex_sets(g)]


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    gs = list(gs)
    total = sum(g.n for g in gs)
    if total > MAX_VERTICES:
        raise GraphError(f"disjoint union needs {total} > {MAX_VERTICES} vertices")
    adj = []
    offset = 0
    for g in gs:
        adj.extend(a << offset for a in g.adj)
        offset += g.n
    return Graph(total, tuple(adj))


# ---------------------------------------------------------------------------
# graph6

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    """graph6 string (no header, no newline)."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (aj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string.

    Strict: a trailing newline is tolerated, anything else past the bit
    vector, a short bit vector or non-zero padding is an error.
    """
    s = text.rstrip("\r\n")
    if not s:
        raise GraphError("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphError(f"invalid graph6 character {ch!r}")
        vals.append(c - 63)
    if vals[0] != 63:
        n, pos = vals[0], 1
    else:
        if len(vals) < 4 or vals[1] == 63:
            raise GraphError("unsupported or truncated graph6 size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 graph has {n} > {MAX_VERTICES} vertices")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < nbytes:
        raise GraphError("truncated graph6 bit vector")
    if len(body) > nbytes:
        raise GraphError("trailing bytes after graph6 bit vector")
    pad = nbytes * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphError("non-zero graph6 padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# edge-list text

def parse_edge_list(text: str) -> Graph:
    """``u v`` per line, 0-indexed; ``#`` starts a comment."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {line!r}") from None
    return from_edge_list(pairs)


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def read_graph(text: str) -> Graph:
    """Auto-detect graph6 (first non-blank line decodes) or edge-list text."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if lines:
        try:
            return parse_graph6(lines[0].strip())
        except GraphError:
            pass
    return parse_edge_list(text)


# ---------------------------------------------------------------------------
# canonical labelling

@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class certificate, isolated vertices ignored.

    ``certificate`` is the sorted, space-joined graph6 strings of the
    canonically labelled components; ``b""`` for the edgeless graph.
    """

    certificate: bytes

    def graph(self) -> Graph:
        """The canonical representative (components in certificate order)."""
        if not self.certificate:
            return empty_graph()
        return disjoint_union(parse_graph6(p) for p in self.certificate.decode().split(" "))

    def graph6(self) -> str:
        return to_graph6(self.graph())


_WEIGHTS = [random.Random(0x5EED + i).getrandbits(61) for i in range(2 * MAX_VERTICES + 2)]


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    """Isomorphism-invariant colour refinement.

    A vertex's new colour is ranked by (old colour, sum of fixed random
    weights of its neighbours' colours); iterate until no cell splits.
    Colours come back renumbered ``0..c-1``.
    """
    ncells = -1
    w = _WEIGHTS
    while True:
        keys = [(colors[v], sum([w[colors[u]] for u in nb])) for v, nb in enumerate(nbrs)]
        uniq = sorted(set(keys))
        if len(uniq) == ncells:
            return colors
        order = {k: i for i, k in enumerate(uniq)}
        colors = [order[k] for k in keys]
        ncells = len(uniq)
        if ncells == len(colors):
            return colors


def _leaf_key(nbrs: list[list[int]], colors: list[int]) -> tuple[int, ...]:
    # key[j] holds the graph6 bits x(0,j) .. x(j-1,j), x(0,j) most significant
    key = [0] * len(colors)
    for v, nb in enumerate(nbrs):
        pv = colors[v]
        for u in nb:
            pu = colors[u]
            if pu < pv:
                key[pv] |= 1 << (pv - 1 - pu)
    return tuple(key)


def _key_to_graph6(key: tuple[int, ...]) -> str:
    n = len(key)
    acc = 0
    for j in range(1, n):
        acc = (acc << j) | key[j]
    nbits = n * (n - 1) // 2
    pad = -nbits % 6
    acc <<= pad
    nbytes = (nbits + pad) // 6
    body = "".join(chr(((acc >> (6 * (nbytes - 1 - i))) & 63) + 63) for i in range(nbytes))
    return _encode_n(n) + body


def _orbit_roots(gens: list[tuple[int, ...]], n: int) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def _canon_connected(nbrs: list[list[int]]):
    """Canonical labelling by refinement plus individualisation.

    Returns ``(key, labelling, generators)``: ``labelling[v]`` is the
    canonical position of ``v``; ``generators`` are automorphisms met during
    the search (``gen[v]`` is the image of ``v``).  Branches are pruned when
    a known automorphism fixing the current prefix maps them onto an
    explored branch.
    """
    n = len(nbrs)
    masks = [0] * n
    for v, nb in enumerate(nbrs):
        for u in nb:
            masks[v] |= 1 << u
    best: list = [None, None]
    gens: list[tuple[int, ...]] = []

    def search(colors: list[int], prefix: list[int]):
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        if len(counts) == n:
            key = _leaf_key(nbrs, colors)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, colors
            elif key == best[0]:
                inv = [0] * n
                for v, c in enumerate(best[1]):
                    inv[c] = v
                gens.append(tuple([inv[c] for c in colors]))
            return
        size = min(k for k in counts.values() if k > 1)
        target = min(c for c, k in counts.items() if k == size)
        cell = [v for v in range(n) if colors[v] == target]
        tried: list[int] = []
        for w in cell:
            if tried:
                # twins inside the target cell are swapped by an automorphism fixing the prefix
                twin = next((x for x in tried if masks[w] & ~(1 << x) == masks[x] & ~(1 << w)), None)
                if twin is not None:
                    swap = list(range(n))
                    swap[w], swap[twin] = twin, w
                    swap = tuple(swap)
                    if swap not in gens:
                        gens.append(swap)
                    continue
                stab = [p for p in gens if all(p[x] == x for x in prefix)]
                if stab:
                    roots = _orbit_roots(stab, n)
                    if any(roots[w] == roots[x] for x in tried):
                        continue
            tried.append(w)
            child = [2 * c + (c == target and v != w) for v, c in enumerate(colors)]
            search(_refine(nbrs, child), prefix + [w])

    search(_refine(nbrs, [len(nb) for nb in nbrs]), [])
    return best[0], best[1], gens


def _canon_parts(g: Graph):
    """Per-component canonical data, sorted by code.

    Each entry is ``(graph6 code, vertices, labelling, generators)`` with
    labelling and generators indexed like ``vertices``.
    """
    adj = g.adj
    nbrs_all = [bits(a) for a in adj]
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s] or not adj[s]:
            continue
        seen[s] = True
        comp = [s]
        i = 0
        while i < len(comp):
            for u in nbrs_all[comp[i]]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
            i += 1
        comp.sort()
        if len(comp) == g.n:
            local = nbrs_all
        else:
            index = {v: k for k, v in enumerate(comp)}
            local = [[index[u] for u in nbrs_all[v]] for v in comp]
        key, lab, gens = _canon_connected(local)
        parts.append((_key_to_graph6(key), comp, lab, gens))
    parts.sort(key=lambda p: p[0])
    return parts


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(" ".join([p[0] for p in _canon_parts(g)]).encode())


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).graph()


def automorphism_generators(g: Graph) -> tuple[CanonicalForm, list[tuple[int, ...]]]:
    """Certificate plus automorphisms of ``g`` as permutations of ``0..n-1``.

    Automorphisms found inside components come together with swaps of
    isomorphic components.  They need not generate the whole group, but
    each one is a genuine automorphism.
    """
    parts = _canon_parts(g)
    cert = CanonicalForm(" ".join(p[0] for p in parts).encode())
    out = []
    for _, vs, _, gens in parts:
        for p in gens:
            full = list(range(g.n))
            for i, v in enumerate(vs):
                full[v] = vs[p[i]]
            out.append(tuple(full))
    for a, b in zip(parts, parts[1:]):
        if a[0] != b[0]:
            continue
        # map component a onto b through their shared canonical labelling
        at_b = {c: v for v, c in zip(b[1], b[2])}
        full = list(range(g.n))
        for v, c in zip(a[1], a[2]):
            full[v] = at_b[c]
            full[at_b[c]] = v
        out.append(tuple(full))
    return cert, out
