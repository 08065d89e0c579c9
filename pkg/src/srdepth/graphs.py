"""Finite simple graphs as adjacency bitmask rows.

Vertices are 0-indexed internally; all parsing and printing is 1-indexed.
Vertex sets are plain ints used as bitmasks over ``range(n)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

BRUTE_FORCE_LIMIT = 16
COVER_LIMIT = 20


class ParseError(ValueError):
    """Malformed graph input (bad line, vertex out of range, loop, ...)."""


class GuardError(ValueError):
    """An operation was asked to exceed its size guard."""


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of a mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbor out of range at vertex {v + 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v + 1}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {u + 1},{v + 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from 0-based vertex pairs; duplicates collapse."""
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge {u + 1}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range: {max(u, v) + 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Sorted 0-based edge list."""
        out = []
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if u > v:
                    out.append((v, u))
        return out

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def open_neighborhood(self, v: int) -> int:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def is_complete(self) -> bool:
        return all(self.adj[v] == self.full_mask ^ (1 << v) for v in range(self.n))

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple((full ^ row ^ (1 << v)) for v, row in enumerate(self.adj)))

    def induced_subgraph(self, keep: int) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``keep``, re-indexed; returns (graph, old labels)."""
        verts = tuple(bits(keep))
        index = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        for v in verts:
            for u in bits(self.adj[v] & keep):
                adj[index[v]] |= 1 << index[u]
        return Graph(len(verts), tuple(adj)), verts

    def delete_vertices(self, drop: int) -> tuple["Graph", tuple[int, ...]]:
        return self.induced_subgraph(self.full_mask & ~drop)


@dataclass(frozen=True)
class ConnectivityResult:
    """Vertex connectivity with a minimum separator witness.

    ``witness`` is None exactly for complete graphs (kappa = n - 1 by
    convention); otherwise it is a mask of size ``kappa`` whose removal
    disconnects the graph (the empty mask for disconnected graphs).
    """

    kappa: int
    witness: Optional[int]


def _components(g: Graph, within: int) -> list[int]:
    """Connected component masks of the induced subgraph on ``within``."""
    seen = 0
    comps = []
    for v in bits(within):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u] & within & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph, within: Optional[int] = None) -> bool:
    within = g.full_mask if within is None else within
    return len(_components(g, within)) <= 1


def _min_vertex_cut(g: Graph, s: int, t: int) -> tuple[int, int]:
    """Fewest vertices separating non-adjacent s from t, with a cut mask.

    Menger via unit-capacity max-flow on the vertex-split digraph:
    node 2v = entry of v, node 2v+1 = exit of v.
    """
    inf = g.n + 1
    cap: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        cap[(2 * v, 2 * v + 1)] = inf if v in (s, t) else 1
        cap[(2 * v + 1, 2 * v)] = 0
    for u, v in g.edges():
        for a, b in ((u, v), (v, u)):
            cap[(2 * a + 1, 2 * b)] = inf
            cap.setdefault((2 * b, 2 * a + 1), 0)
    out_arcs: dict[int, list[int]] = {}
    for (a, b) in cap:
        out_arcs.setdefault(a, []).append(b)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for a in queue:
                for b in out_arcs.get(a, ()):
                    if b not in parent and cap[(a, b)] > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    reach = {source}
    queue = [source]
    while queue:
        a = queue.pop()
        for b in out_arcs.get(a, ()):
            if b not in reach and cap[(a, b)] > 0:
                reach.add(b)
                queue.append(b)
    cut = 0
    for v in range(g.n):
        if 2 * v in reach and 2 * v + 1 not in reach:
            cut |= 1 << v
    return flow, cut


def vertex_connectivity(g: Graph) -> ConnectivityResult:
    """Exact vertex connectivity by max-flow over non-adjacent pairs."""
    if g.n == 0:
        raise ValueError("vertex connectivity of the empty graph is undefined")
    if g.is_complete():
        return ConnectivityResult(g.n - 1, None)
    if not is_connected(g):
        return ConnectivityResult(0, 0)
    best = None
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if g.has_edge(s, t):
                continue
            value, cut = _min_vertex_cut(g, s, t)
            if best is None or value < best[0]:
                best = (value, cut)
    assert best is not None
    return ConnectivityResult(best[0], best[1])


def vertex_connectivity_bruteforce(g: Graph) -> ConnectivityResult:
    """Oracle: scan separators by increasing size. Cost 2^n, n <= 16."""
    if g.n == 0:
        raise ValueError("vertex connectivity of the empty graph is undefined")
    if g.n > BRUTE_FORCE_LIMIT:
        raise GuardError(f"brute-force connectivity limited to n <= {BRUTE_FORCE_LIMIT}")
    if g.is_complete():
        return ConnectivityResult(g.n - 1, None)
    for k in range(g.n - 1):
        for combo in itertools.combinations(range(g.n), k):
            w = mask_of(combo)
            rest = g.full_mask & ~w
            if rest.bit_count() >= 2 and len(_components(g, rest)) > 1:
                return ConnectivityResult(k, w)
    return ConnectivityResult(g.n - 1, None)  # unreachable for non-complete g


def is_chordal(g: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Chordality via maximum cardinality search.

    Returns (True, perfect elimination ordering) or (False, None).  In the
    returned ordering, the later neighbors of each vertex form a clique.
    """
    n = g.n
    if n == 0:
        return True, ()
    weight = [0] * n
    visited = 0
    mcs_order = []
    for _ in range(n):
        v = max((u for u in range(n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        mcs_order.append(v)
        visited |= 1 << v
        for u in bits(g.adj[v] & ~visited):
            weight[u] += 1
    peo = tuple(reversed(mcs_order))
    position = {v: i for i, v in enumerate(peo)}
    for i, v in enumerate(peo):
        later = [u for u in bits(g.adj[v]) if position[u] > i]
        if not later:
            continue
        u = min(later, key=lambda x: position[x])
        rest = mask_of(w for w in later if w != u)
        if rest & ~g.closed_neighborhood(u):
            return False, None
    return True, peo


def _maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets (Bron-Kerbosch with pivot on G^c)."""
    comp = g.complement()
    out: list[int] = []

    def expand(clique: int, cand: int, excl: int) -> None:
        if not cand and not excl:
            out.append(clique)
            return
        pivot = max(bits(cand | excl), key=lambda u: (comp.adj[u] & cand).bit_count())
        for v in bits(cand & ~comp.adj[pivot]):
            expand(clique | 1 << v, cand & comp.adj[v], excl & comp.adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, g.full_mask, 0)
    return out


def minimal_vertex_covers(g: Graph) -> list[int]:
    """All inclusion-minimal vertex covers, sorted by (size, vertex list)."""
    if g.n > COVER_LIMIT:
        raise GuardError(f"minimal vertex covers limited to n <= {COVER_LIMIT}")
    covers = {g.full_mask & ~s for s in _maximal_independent_sets(g)}
    return sorted(covers, key=lambda m: (m.bit_count(), tuple(bits(m))))


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: first line n, then 1-based "u v" lines; '#' comments."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(f"line {lineno}: expected vertex count, got {line!r}") from None
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"line {lineno}: vertex out of range in {line!r}")
        if u == v:
            raise ParseError(f"line {lineno}: loop edge {u}")
        edges.append((u - 1, v - 1))
    if n is None:
        raise ParseError("empty input: missing vertex count line")
    return Graph.from_edges(n, edges)


def parse_graph6(line: str) -> Graph:
    """One graph in standard graph6 encoding (read-only ingestion)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise ParseError("graph6 byte out of range at offset 0")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        body = data[8:]
    else:
        raise ParseError("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 length mismatch for n={n}: got {len(body)} data bytes")
    bitstream = []
    for x in body:
        bitstream.extend((x >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream[k]:
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n, edges)


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    if fmt in ("edge-list", "edges"):
        return parse_edge_list(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty graph6 input")
        return parse_graph6(lines[0])
    raise ValueError(f"unknown graph format {fmt!r}")


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
