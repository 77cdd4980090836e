"""Immutable simple graphs backed by integer bitsets.

Vertices are ``0..n-1``. Vertex sets travel through the public API as
``frozenset[int]``; internally most routines work on Python ints used as
bitmasks (bit ``v`` set iff vertex ``v`` is a member).
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

VertexSet = frozenset

INFINITE = math.inf


class GraphError(ValueError):
    """Raised for malformed graph construction requests."""


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


# -- bitmask helpers ---------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_set(mask: int) -> frozenset[int]:
    return frozenset(members(mask))


def canonical(vertices: Iterable[int] | int) -> tuple[int, ...]:
    """Sorted-tuple serialization used for dedup and tie-breaking."""
    if isinstance(vertices, int):
        return tuple(members(vertices))
    return tuple(sorted(vertices))


# -- the graph type ----------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    _full: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_full", (1 << self.n) - 1)
        # symmetric, loop-free, degree sum = 2m
        for u, row in enumerate(self.adj):
            assert not (row >> u) & 1, "self-loop"
            for v in members(row):
                assert (self.adj[v] >> u) & 1, "asymmetric adjacency"
        assert sum(r.bit_count() for r in self.adj) == 2 * len(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full(self) -> int:
        return self._full

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return to_set(self.adj[v])

    def check_subset(self, S: Iterable[int]) -> int:
        """Return the bitmask of ``S``, rejecting out-of-range vertices."""
        m = mask_of(S)
        if m & ~self._full:
            raise GraphError(f"vertex set {sorted(S)} not within 0..{self.n - 1}")
        return m

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, edges={list(self.edges)})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple undirected graph; duplicate pairs are collapsed."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    seen = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            continue
        seen.add(e)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(sorted(seen)))


# -- mask-level structure ----------------------------------------------------

def component_of(adj: tuple[int, ...], mask: int, start: int) -> int:
    """Component of ``start`` in the subgraph induced by ``mask``."""
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= adj[v]
        nxt &= mask & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def components(adj: tuple[int, ...], mask: int) -> list[int]:
    out = []
    rest = mask
    while rest:
        c = component_of(adj, mask, (rest & -rest).bit_length() - 1)
        out.append(c)
        rest &= ~c
    return out


def connected_mask(adj: tuple[int, ...], mask: int) -> bool:
    if mask == 0:
        return True
    return component_of(adj, mask, (mask & -mask).bit_length() - 1) == mask


def edge_count_mask(adj: tuple[int, ...], mask: int) -> int:
    return sum((adj[v] & mask).bit_count() for v in members(mask)) // 2


def forest_mask(adj: tuple[int, ...], mask: int) -> bool:
    return edge_count_mask(adj, mask) == mask.bit_count() - len(components(adj, mask))


def edgeless_mask(adj: tuple[int, ...], mask: int) -> bool:
    return all(not (adj[v] & mask) for v in members(mask))


def two_coloring_mask(adj: tuple[int, ...], mask: int) -> tuple[int, int] | None:
    """Return sides ``(A, B)`` of a proper 2-coloring of ``G[mask]`` or None."""
    side_a = side_b = 0
    rest = mask
    while rest:
        start = (rest & -rest).bit_length() - 1
        layer, parity = 1 << start, 0
        seen = layer
        while layer:
            if parity == 0:
                side_a |= layer
            else:
                side_b |= layer
            nxt = 0
            for v in members(layer):
                nxt |= adj[v]
            nxt &= mask
            # an edge inside the current layer means an odd closed walk
            if nxt & layer:
                return None
            nxt &= ~seen
            seen |= nxt
            layer, parity = nxt, parity ^ 1
        rest &= ~seen
    return side_a, side_b


def bipartite_mask(adj: tuple[int, ...], mask: int) -> bool:
    return two_coloring_mask(adj, mask) is not None


# -- public predicates -------------------------------------------------------

def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G[S]`` together with the relabelling old vertex -> new vertex."""
    mask = G.check_subset(S)
    order = list(members(mask))
    relabel = {v: i for i, v in enumerate(order)}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel]
    return build_graph(len(order), edges), relabel


def is_connected_set(G: Graph, S: Iterable[int]) -> bool:
    """True iff ``G[S]`` has at most one component (so the empty set counts)."""
    return connected_mask(G.adj, G.check_subset(S))


def is_connected(G: Graph) -> bool:
    return connected_mask(G.adj, G.full)


def is_acyclic(G: Graph) -> bool:
    return forest_mask(G.adj, G.full)


def is_bipartite(G: Graph) -> bool:
    return bipartite_mask(G.adj, G.full)


def bipartition(G: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    sides = two_coloring_mask(G.adj, G.full)
    if sides is None:
        return None
    return to_set(sides[0]), to_set(sides[1])


def shortest_cycle(G: Graph) -> list[int] | None:
    """A shortest cycle as a vertex sequence, or None for forests.

    BFS from every vertex; a non-tree edge ``xy`` met from root ``r`` closes
    a closed walk of length ``d(x)+d(y)+1``, and the minimum over all roots
    is attained by a genuine cycle.
    """
    best = None
    best_len = INFINITE
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best_len:
                break
            for y in members(G.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    length = dist[x] + dist[y] + 1
                    if length < best_len:
                        cyc = _close_cycle(parent, x, y)
                        if cyc is not None:
                            best_len, best = len(cyc), cyc
    return best


def _close_cycle(parent: dict[int, int], x: int, y: int) -> list[int] | None:
    px, py = [x], [y]
    while parent[px[-1]] != -1:
        px.append(parent[px[-1]])
    while parent[py[-1]] != -1:
        py.append(parent[py[-1]])
    # strip the common tail to the lowest common ancestor
    while len(px) > 1 and len(py) > 1 and px[-2] == py[-2]:
        px.pop()
        py.pop()
    if px[-1] != py[-1]:
        return None
    cyc = px + py[-2::-1]
    if len(set(cyc)) != len(cyc) or len(cyc) < 3:
        return None
    return cyc


def girth(G: Graph) -> int | float:
    cyc = shortest_cycle(G)
    return INFINITE if cyc is None else len(cyc)


def find_induced_matching(G: Graph, s: int) -> list[tuple[int, int]] | None:
    """Return ``s`` edges forming an induced matching, or None if none exists."""
    if s < 1:
        raise PreconditionError(f"s must be positive, got {s}")
    edges = G.edges
    closed = [G.adj[u] | G.adj[v] | (1 << u) | (1 << v) for u, v in edges]
    chosen: list[int] = []

    def extend(start: int, blocked: int) -> bool:
        if len(chosen) == s:
            return True
        for i in range(start, len(edges) - (s - len(chosen)) + 1):
            u, v = edges[i]
            if (blocked >> u) & 1 or (blocked >> v) & 1:
                continue
            chosen.append(i)
            if extend(i + 1, blocked | closed[i]):
                return True
            chosen.pop()
        return False

    if extend(0, 0):
        return [edges[i] for i in chosen]
    return None


def is_sp2_free(G: Graph, s: int) -> bool:
    """True iff ``G`` has no induced matching with ``s`` edges."""
    return find_induced_matching(G, s) is None


def find_induced_claw(G: Graph) -> tuple[int, int, int, int] | None:
    """Return ``(center, a, b, c)`` of an induced K1,3, or None."""
    for center in range(G.n):
        for a, b, c in combinations(members(G.adj[center]), 3):
            if not (G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c)):
                return center, a, b, c
    return None


def is_claw_free(G: Graph) -> bool:
    return find_induced_claw(G) is None


# -- transformations ---------------------------------------------------------

@dataclass(frozen=True)
class LineGraphMap:
    forward: dict[tuple[int, int], int]
    backward: tuple[tuple[int, int], ...]


def line_graph(G: Graph) -> tuple[Graph, LineGraphMap]:
    if G.m == 0:
        raise PreconditionError("line graph of an edgeless graph is empty")
    backward = G.edges
    forward = {e: i for i, e in enumerate(backward)}
    incident: list[list[int]] = [[] for _ in range(G.n)]
    for i, (u, v) in enumerate(backward):
        incident[u].append(i)
        incident[v].append(i)
    ledges = [pair for inc in incident for pair in combinations(inc, 2)]
    return build_graph(G.m, ledges), LineGraphMap(forward, backward)


def subdivide_edge(G: Graph, e: tuple[int, int], t: int) -> Graph:
    """Replace edge ``e`` by a path through ``t`` new vertices ``n, n+1, ...``."""
    u, v = e
    if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge")
    if t < 0:
        raise PreconditionError(f"subdivision count must be >= 0, got {t}")
    if t == 0:
        return G
    key = (min(u, v), max(u, v))
    edges = [x for x in G.edges if x != key]
    path = [u] + list(range(G.n, G.n + t)) + [v]
    edges.extend(zip(path, path[1:]))
    return build_graph(G.n + t, edges)


def add_path(G: Graph, u: int, v: int, length: int) -> Graph:
    """Add a fresh ``u``-``v`` path with ``length`` edges (``length >= 2``)."""
    if length < 2:
        raise PreconditionError("an added path needs at least one internal vertex")
    inner = list(range(G.n, G.n + length - 1))
    path = [u] + inner + [v]
    return build_graph(G.n + len(inner), list(G.edges) + list(zip(path, path[1:])))
