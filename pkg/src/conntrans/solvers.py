"""Minimum and minimum connected transversals.

The connected solver enumerates every minimal transversal and pads each
one with the fewest extra vertices that make it induce a connected
subgraph.  When the input is sP2-free, the gap between the connected and
the unconstrained optimum is bounded by a constant depending only on s
(see :func:`price_constant`), which bounds the padding search.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal

from .enumerators import DEFAULT_ORACLE_CEILING, enumerate_minimal_transversals
from .graph import (
    Graph,
    PreconditionError,
    component_of,
    connected_mask,
    find_induced_matching,
    members,
    to_set,
    two_coloring_mask,
)
from .kinds import TransversalKind, satisfies

__all__ = [
    "Certificate",
    "PriceBound",
    "SolveReport",
    "brute_force_min_connected",
    "brute_force_min_transversal",
    "connect_padding",
    "exists_transversal",
    "min_connected_transversal",
    "min_transversal",
    "price_constant",
    "satisfies",
]

AUTO = "auto"


@dataclass(frozen=True)
class PriceBound:
    kind: TransversalKind
    s: int
    constant: int
    effective: int


def price_constant(kind: TransversalKind, s: int) -> PriceBound:
    """Additive price-of-connectivity constant for sP3-free graphs.

    VC and OCT: 4s^2 + 2s - 10.  FVS: 12s^2 - 2s - 2.  Negative values
    (small s) are clamped to 0 in ``effective``.
    """
    if s < 1:
        raise PreconditionError(f"s must be positive, got {s}")
    if kind is TransversalKind.FVS:
        c = 12 * s * s - 2 * s - 2
    else:
        c = 4 * s * s + 2 * s - 10
    return PriceBound(kind, s, c, max(0, c))


@dataclass(frozen=True)
class Certificate:
    """Independent evidence that ``G - S`` has the required structure.

    ``kind`` is ``edge-check``, ``forest-check`` or ``bipartition``; the
    last carries the two colour classes of ``G - S``.
    """

    kind: str
    sides: tuple[frozenset[int], frozenset[int]] | None = None

    def verify(self, G: Graph, S: Iterable[int]) -> bool:
        rest = set(range(G.n)) - set(S)
        if self.kind == "edge-check":
            return all(not (u in rest and v in rest) for u, v in G.edges)
        if self.kind == "forest-check":
            return _union_find_acyclic(G, rest)
        if self.kind == "bipartition":
            a, b = self.sides
            if a & b or (a | b) != rest:
                return False
            return all(not ((u in a and v in a) or (u in b and v in b)) for u, v in G.edges)
        return False


def _union_find_acyclic(G: Graph, rest: set[int]) -> bool:
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in G.edges:
        if u in rest and v in rest:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def _certificate(G: Graph, kind: TransversalKind, S: int) -> Certificate:
    if kind is TransversalKind.VC:
        return Certificate("edge-check")
    if kind is TransversalKind.FVS:
        return Certificate("forest-check")
    sides = two_coloring_mask(G.adj, G.full & ~S)
    assert sides is not None
    return Certificate("bipartition", (to_set(sides[0]), to_set(sides[1])))


@dataclass(frozen=True)
class SolveReport:
    kind: TransversalKind
    connected_required: bool
    size: int
    solution: frozenset[int]
    certificate: Certificate
    padding_used: int
    elapsed: float  # seconds

    def check(self, G: Graph) -> bool:
        ok = satisfies(G, self.kind, self.solution) and self.certificate.verify(G, self.solution)
        if self.connected_required:
            ok = ok and connected_mask(G.adj, G.check_subset(self.solution))
        return ok and self.size == len(self.solution)


def _report(G, kind, connected, S, padding, t0) -> SolveReport:
    return SolveReport(
        kind=kind,
        connected_required=connected,
        size=S.bit_count(),
        solution=to_set(S),
        certificate=_certificate(G, kind, S),
        padding_used=padding,
        elapsed=time.perf_counter() - t0,
    )


def _key(S: int) -> tuple[int, tuple[int, ...]]:
    return S.bit_count(), tuple(members(S))


# -- unconstrained optimum ---------------------------------------------------

def min_transversal(G: Graph, kind: TransversalKind) -> SolveReport:
    """Smallest member of the minimal-transversal family (lexicographic ties)."""
    t0 = time.perf_counter()
    best = None
    for S in enumerate_minimal_transversals(G, kind).masks():
        if best is None or _key(S) < _key(best):
            best = S
    return _report(G, kind, False, best, 0, t0)


# -- padding -----------------------------------------------------------------

def _padding_pool(adj: tuple[int, ...], S: int, budget: int, full: int) -> list[int]:
    """Vertices outside ``S`` within distance ``budget`` of ``S``."""
    reached = S
    frontier = S
    for _ in range(budget):
        nxt = 0
        for v in members(frontier):
            nxt |= adj[v]
        nxt &= full & ~reached
        if not nxt:
            break
        reached |= nxt
        frontier = nxt
    return list(members(reached & ~S))


def _pad(adj: tuple[int, ...], full: int, S: int, budget: int) -> int | None:
    if connected_mask(adj, S):
        return S
    if budget <= 0:
        return None
    pool = _padding_pool(adj, S, budget, full)
    # a connected superset must lie inside one component of G[S | pool]
    if component_of(adj, S | _mask(pool), (S & -S).bit_length() - 1) & S != S:
        return None
    for extra in range(1, min(budget, len(pool)) + 1):
        best = None
        for combo in combinations(pool, extra):
            T = S | _mask(combo)
            if connected_mask(adj, T) and (best is None or _key(T) < _key(best)):
                best = T
        if best is not None:
            return best
    return None


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _require_connected(G: Graph):
    if not connected_mask(G.adj, G.full):
        raise PreconditionError("graph is disconnected; a connected transversal is undefined")


def connect_padding(G: Graph, S: Iterable[int], budget: int) -> frozenset[int] | None:
    """Smallest connected superset of ``S`` using at most ``budget`` extra vertices.

    Ties between equally small supersets go to the lexicographically
    smallest sorted member list.  Returns None if no such superset exists.
    """
    _require_connected(G)
    if budget < 0:
        raise PreconditionError(f"padding budget must be >= 0, got {budget}")
    out = _pad(G.adj, G.full, G.check_subset(S), budget)
    return None if out is None else to_set(out)


# -- connected optimum -------------------------------------------------------

def min_connected_transversal(
    G: Graph,
    kind: TransversalKind,
    budget: int | Literal["auto"] = AUTO,
    s: int = 2,
) -> SolveReport:
    """Minimum connected transversal by enumerate-then-pad.

    With ``budget="auto"`` the graph must be sP2-free for the given ``s``
    and the padding budget is the clamped price constant; otherwise
    ``budget`` is used as given (``budget >= n`` is always exact).
    """
    t0 = time.perf_counter()
    _require_connected(G)
    if budget == AUTO:
        matching = find_induced_matching(G, s)
        if matching is not None:
            raise PreconditionError(
                f"graph is not {s}P2-free: edges {matching} form an induced matching; "
                "pass an explicit padding budget instead"
            )
        budget = price_constant(kind, s).effective
    elif not isinstance(budget, int) or budget < 0:
        raise PreconditionError(f"padding budget must be 'auto' or an integer >= 0, got {budget!r}")

    adj, full = G.adj, G.full
    best = best_base = None
    for base in enumerate_minimal_transversals(G, kind).masks():
        cap = budget
        if best is not None:
            cap = min(cap, best.bit_count() - base.bit_count())
            if cap < 0:
                continue
        T = _pad(adj, full, base, cap)
        if T is not None and (best is None or _key(T) < _key(best)):
            best, best_base = T, base
    if best is None:
        raise PreconditionError(
            f"no connected {kind.value} transversal within padding budget {budget}"
        )
    return _report(G, kind, True, best, best.bit_count() - best_base.bit_count(), t0)


# -- brute-force oracles -----------------------------------------------------

def _check_ceiling(G: Graph, ceiling: int):
    if G.n > ceiling:
        raise PreconditionError(f"n={G.n} exceeds the brute-force ceiling {ceiling}")


def brute_force_min_transversal(
    G: Graph, kind: TransversalKind, ceiling: int = DEFAULT_ORACLE_CEILING
) -> SolveReport:
    """Scan subsets by increasing size; the first valid one is optimal."""
    _check_ceiling(G, ceiling)
    t0 = time.perf_counter()
    for size in range(G.n + 1):
        for combo in combinations(range(G.n), size):
            S = _mask(combo)
            if kind.holds(G, S):
                return _report(G, kind, False, S, 0, t0)
    raise AssertionError("the full vertex set is always a transversal")


def brute_force_min_connected(
    G: Graph, kind: TransversalKind, ceiling: int = DEFAULT_ORACLE_CEILING
) -> SolveReport:
    """Scan subsets by increasing size; the first connected valid one is optimal."""
    _check_ceiling(G, ceiling)
    _require_connected(G)
    t0 = time.perf_counter()
    for size in range(G.n + 1):
        for combo in combinations(range(G.n), size):
            S = _mask(combo)
            if connected_mask(G.adj, S) and kind.holds(G, S):
                return _report(G, kind, True, S, 0, t0)
    raise AssertionError("the vertex set of a connected graph is a connected transversal")


HARD_CEILING = 24


def exists_transversal(
    G: Graph,
    kind: TransversalKind,
    k: int,
    connected: bool = False,
    ceiling: int = HARD_CEILING,
) -> frozenset[int] | None:
    """Decide whether a (connected) transversal of size at most ``k`` exists.

    Exhaustive search over the kept set ``T = V - S``, vertex by vertex.
    A branch is cut when ``G[T]`` already violates the property (the
    property is hereditary), when more than ``k`` vertices are dropped, or,
    for the connected variant, when the dropped vertices cannot end up in
    one component.  Returns a witness or None.  Works on disconnected
    graphs too.
    """
    _check_ceiling(G, ceiling)
    if k < 0:
        return None
    adj, n, full = G.adj, G.n, G.full

    def rec(i: int, kept: int, dropped: int):
        if dropped.bit_count() > k:
            return None
        if connected and dropped:
            undecided = full & ~((1 << i) - 1)
            reach = component_of(adj, dropped | undecided, (dropped & -dropped).bit_length() - 1)
            if reach & dropped != dropped:
                return None
        if i == n:
            if connected and not connected_mask(adj, dropped):
                return None
            return dropped
        bit = 1 << i
        if kind.residual_ok(adj, kept | bit):
            found = rec(i + 1, kept | bit, dropped)
            if found is not None:
                return found
        return rec(i + 1, kept, dropped | bit)

    out = rec(0, 0, 0)
    return None if out is None else to_set(out)
