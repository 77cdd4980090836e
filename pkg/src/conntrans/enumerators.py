"""Streams of maximal independent sets and minimal transversals.

All streams are driven by bitmask generators; :class:`EnumerationStream`
wraps one, deduplicates on the mask and converts members to frozensets.
"""
from __future__ import annotations

import enum
from collections import deque
from typing import Callable, Iterator

from .graph import (
    Graph,
    PreconditionError,
    forest_mask,
    members,
    to_set,
)
from .kinds import TransversalKind

DEFAULT_ORACLE_CEILING = 16


class StreamKind(enum.Enum):
    MIS = "mis"
    MIN_VC = "vc"
    MIN_FVS = "fvs"
    MIN_OCT = "oct"


class EnumerationStream:
    """Single-consumer iterator over a family of vertex sets.

    Every emitted set is checked against its defining predicate when
    ``check`` is on (the default outside ``python -O``).
    """

    def __init__(self, graph: Graph, kind: StreamKind, source: Iterator[int], check: bool = __debug__):
        self.graph = graph
        self.kind = kind
        self.emitted = 0
        self._source = source
        self._seen: set[int] = set()
        self._check = check

    def __iter__(self):
        return self

    def __next__(self) -> frozenset[int]:
        return to_set(self.next_mask())

    def next_mask(self) -> int:
        for mask in self._source:
            if mask in self._seen:
                continue
            self._seen.add(mask)
            if self._check:
                assert _defining_predicate(self.graph, self.kind, mask), (
                    f"{self.kind.value} stream emitted invalid set {sorted(members(mask))}"
                )
            self.emitted += 1
            return mask
        raise StopIteration

    def masks(self) -> Iterator[int]:
        """Iterate the remaining sets as raw bitmasks."""
        while True:
            try:
                yield self.next_mask()
            except StopIteration:
                return


# -- maximal independent sets ------------------------------------------------

def _greedy_extend(adj: tuple[int, ...], base: int, limit: int) -> int:
    """Extend independent ``base`` by scanning ``limit`` in increasing order."""
    out = base
    for u in members(limit & ~base):
        if not adj[u] & out:
            out |= 1 << u
    return out


def iter_mis_masks(G: Graph) -> Iterator[int]:
    """Maximal independent sets via vertex-by-vertex growth.

    A node at depth ``j`` is a maximal independent set of ``G[{0..j-1}]``.
    Each node has one or two children at depth ``j+1`` and every leaf is an
    output, so the work between two outputs is O(n) nodes of O(n) bitset
    steps each.
    """
    adj, n = G.adj, G.n
    stack = [(0, 0)]
    while stack:
        j, S = stack.pop()
        if j == n:
            yield S
            continue
        bit, nv = 1 << j, adj[j]
        if not S & nv:
            stack.append((j + 1, S | bit))
            continue
        prefix = (1 << j) - 1
        T = (S & ~nv) | bit
        dominated = T
        for u in members(T):
            dominated |= adj[u]
        # T must be maximal in G[0..j] and S must be T's canonical parent
        if (prefix | bit) & ~dominated == 0 and _greedy_extend(adj, T & ~bit, prefix) == S:
            stack.append((j + 1, T))
        stack.append((j + 1, S))


def enumerate_maximal_independent_sets(G: Graph) -> EnumerationStream:
    return EnumerationStream(G, StreamKind.MIS, iter_mis_masks(G))


def enumerate_minimal_vertex_covers(G: Graph) -> EnumerationStream:
    full = G.full
    return EnumerationStream(G, StreamKind.MIN_VC, (full ^ S for S in iter_mis_masks(G)))


# -- minimal feedback vertex sets --------------------------------------------

def _extend_forest(adj: tuple[int, ...], base: int, full: int) -> int:
    out = base
    for u in members(full & ~base):
        if forest_mask(adj, out | (1 << u)):
            out |= 1 << u
    return out


def _cycle_through(adj: tuple[int, ...], rest: int, v: int) -> list[int] | None:
    """Vertices other than ``v`` on a shortest cycle through ``v`` in ``G[rest | v]``.

    ``rest`` must induce a forest, so any cycle passes through ``v``.
    """
    nbrs = adj[v] & rest
    parent: dict[int, int] = {}
    origin: dict[int, int] = {}
    queue = deque()
    for a in members(nbrs):
        parent[a] = -1
        origin[a] = a
        queue.append(a)
    while queue:
        x = queue.popleft()
        for y in members(adj[x] & rest):
            if y == parent[x]:
                continue
            if y in origin:
                if origin[y] != origin[x]:
                    path = []
                    for z in (x, y):
                        while z != -1:
                            path.append(z)
                            z = parent[z]
                    return path
                continue
            parent[y] = x
            origin[y] = origin[x]
            queue.append(y)
    return None


def _maximal_forests_with(adj: tuple[int, ...], M: int, v: int) -> Iterator[int]:
    """Maximal induced forests of ``G[M | v]`` that contain ``v``.

    Branches on the vertices of a cycle through ``v`` until no cycle is
    left; leaves whose deleted set is not inclusion-minimal are dropped.
    """
    vbit = 1 << v
    found: set[int] = set()

    def rec(removed: int):
        cyc = _cycle_through(adj, M & ~removed, v)
        if cyc is None:
            if removed in found:
                return
            found.add(removed)
            for y in members(removed):
                if forest_mask(adj, (M & ~removed) | (1 << y) | vbit):
                    return
            yield (M & ~removed) | vbit
            return
        for u in cyc:
            yield from rec(removed | (1 << u))

    yield from rec(0)


def iter_minimal_fvs_masks(G: Graph) -> Iterator[int]:
    """Minimal feedback vertex sets by traversal of the solution graph.

    Nodes are maximal induced forests (complements of minimal FVSs).  The
    successors of ``M`` are, for each ``v`` outside ``M``, the maximal
    forests of ``G[M | v]`` through ``v`` greedily extended to all of ``G``.
    This successor relation makes the solution graph strongly connected,
    so a search from any start node reaches every node.
    """
    adj, full = G.adj, G.full
    start = _extend_forest(adj, 0, full)
    seen = {start}
    stack = [start]
    yield full ^ start
    while stack:
        M = stack.pop()
        for v in members(full & ~M):
            for F in _maximal_forests_with(adj, M, v):
                X = _extend_forest(adj, F, full)
                if X not in seen:
                    seen.add(X)
                    stack.append(X)
                    yield full ^ X


def enumerate_minimal_fvs(G: Graph) -> EnumerationStream:
    return EnumerationStream(G, StreamKind.MIN_FVS, iter_minimal_fvs_masks(G))


# -- minimal odd cycle transversals ------------------------------------------

def shrink_to_minimal(G: Graph, kind: TransversalKind, S: int) -> int:
    """Repeatedly drop the lowest-indexed vertex whose removal keeps ``S`` valid.

    The predicates are superset-closed, so a vertex that cannot be dropped
    now never becomes droppable later and one ascending pass suffices.
    """
    for v in members(S):
        if kind.holds(G, S & ~(1 << v)):
            S &= ~(1 << v)
    return S


def iter_minimal_oct_masks(G: Graph) -> Iterator[int]:
    """Minimal OCTs from pairs (X, Y): X maximal independent in G, Y in G - X.

    Every minimal OCT equals ``V - (X | Y)`` for some such pair; other
    candidates are shrunk to a minimal OCT they contain.
    """
    full = G.full
    for X in iter_mis_masks(G):
        rest = full & ~X
        sub_vertices = list(members(rest))
        sub_adj = tuple(_restrict(G.adj[u], sub_vertices) for u in sub_vertices)
        sub = Graph(len(sub_vertices), sub_adj, _edges_of(sub_adj))
        for Y_local in iter_mis_masks(sub):
            Y = 0
            for i in members(Y_local):
                Y |= 1 << sub_vertices[i]
            yield shrink_to_minimal(G, TransversalKind.OCT, full & ~(X | Y))


def _restrict(row: int, order: list[int]) -> int:
    out = 0
    for i, u in enumerate(order):
        if (row >> u) & 1:
            out |= 1 << i
    return out


def _edges_of(adj: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) for u, row in enumerate(adj) for v in members(row) if u < v)


def enumerate_minimal_oct(G: Graph) -> EnumerationStream:
    return EnumerationStream(G, StreamKind.MIN_OCT, iter_minimal_oct_masks(G))


def enumerate_minimal_transversals(G: Graph, kind: TransversalKind) -> EnumerationStream:
    if kind is TransversalKind.VC:
        return enumerate_minimal_vertex_covers(G)
    if kind is TransversalKind.FVS:
        return enumerate_minimal_fvs(G)
    return enumerate_minimal_oct(G)


# -- predicates and brute force ----------------------------------------------

def _is_mis(G: Graph, S: int) -> bool:
    dominated = S
    for u in members(S):
        if G.adj[u] & S:
            return False
        dominated |= G.adj[u]
    return dominated == G.full


def _is_minimal(G: Graph, kind: TransversalKind, S: int) -> bool:
    return kind.holds(G, S) and not any(kind.holds(G, S & ~(1 << v)) for v in members(S))


_STREAM_TO_KIND = {
    StreamKind.MIN_VC: TransversalKind.VC,
    StreamKind.MIN_FVS: TransversalKind.FVS,
    StreamKind.MIN_OCT: TransversalKind.OCT,
}


def _defining_predicate(G: Graph, kind: StreamKind, S: int) -> bool:
    if kind is StreamKind.MIS:
        return _is_mis(G, S)
    return _is_minimal(G, _STREAM_TO_KIND[kind], S)


Predicate = Callable[[Graph, frozenset], bool]


def brute_force_minimal_sets(
    G: Graph,
    predicate: TransversalKind | Predicate,
    ceiling: int = DEFAULT_ORACLE_CEILING,
) -> list[frozenset[int]]:
    """All inclusion-minimal sets satisfying ``predicate``, by scanning every subset.

    ``predicate`` is either a :class:`TransversalKind` or a callable
    ``(G, S) -> bool``.  The result is sorted by (size, members).
    """
    if G.n > ceiling:
        raise PreconditionError(f"n={G.n} exceeds the brute-force ceiling {ceiling}")
    if isinstance(predicate, TransversalKind):
        kind = predicate
        table = [kind.holds(G, S) for S in range(1 << G.n)]
    else:
        table = [bool(predicate(G, to_set(S))) for S in range(1 << G.n)]
    out = []
    for S in range(1 << G.n):
        if table[S] and not any(table[S & ~(1 << v)] for v in members(S)):
            out.append(S)
    out.sort(key=lambda S: (S.bit_count(), tuple(members(S))))
    return [to_set(S) for S in out]


def brute_force_maximal_independent_sets(G: Graph, ceiling: int = DEFAULT_ORACLE_CEILING) -> list[frozenset[int]]:
    if G.n > ceiling:
        raise PreconditionError(f"n={G.n} exceeds the brute-force ceiling {ceiling}")
    return [to_set(S) for S in range(1 << G.n) if _is_mis(G, S)]

