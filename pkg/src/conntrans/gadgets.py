"""Reduction instances for the hardness results, with brute-force checks.

Each ``gadget_*`` constructor maps a source instance to a target graph and
budget; :func:`verify_gadget` decides both sides exhaustively and reports
whether the claimed equivalence holds on that instance.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import (
    Graph,
    PreconditionError,
    add_path,
    build_graph,
    girth,
    line_graph,
    members,
    shortest_cycle,
    subdivide_edge,
)
from .kinds import TransversalKind
from .solvers import HARD_CEILING, exists_transversal

DEFAULT_ECF_CEILING = 14
DEFAULT_HAMILTON_CEILING = 16


class Provenance(enum.Enum):
    T_OCT = "oct-line"
    T_COCT = "coct-line"
    T_CFVS = "cfvs-line"
    T_OCT_GIRTH = "oct-girth"
    T_COCT_GIRTH = "coct-girth"
    T_CFVS_GIRTH = "cfvs-girth"


@dataclass(frozen=True)
class GadgetInstance:
    graph: Graph
    budget_k: int
    provenance: Provenance
    labels: tuple[str, ...]  # role of each constructed vertex

    def __post_init__(self):
        assert len(self.labels) == self.graph.n


@dataclass(frozen=True)
class CycleFactor:
    cycles: tuple[tuple[int, ...], ...]

    def is_valid(self, G: Graph, even: bool = True) -> bool:
        covered = [v for c in self.cycles for v in c]
        if sorted(covered) != list(range(G.n)):
            return False
        for c in self.cycles:
            if len(c) < 3 or (even and len(c) % 2):
                return False
            if not all(G.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))):
                return False
        return True


# -- source-problem oracles --------------------------------------------------

def _two_factors(G: Graph):
    """Yield every spanning 2-regular edge subset, as lists of edges."""
    edges = G.edges
    last_use = {}
    for i, (u, v) in enumerate(edges):
        last_use[u] = i
        last_use[v] = i
    deg = [0] * G.n
    chosen: list[tuple[int, int]] = []

    def rec(i: int):
        if i == len(edges):
            if all(d == 2 for d in deg):
                yield list(chosen)
            return
        u, v = edges[i]
        for take in (True, False):
            if take:
                if deg[u] == 2 or deg[v] == 2:
                    continue
                deg[u] += 1
                deg[v] += 1
                chosen.append(edges[i])
            # every vertex whose last edge was just decided must be saturated
            if (last_use[u] != i or deg[u] == 2) and (last_use[v] != i or deg[v] == 2):
                yield from rec(i + 1)
            if take:
                deg[u] -= 1
                deg[v] -= 1
                chosen.pop()

    if any(G.degree(v) < 2 for v in range(G.n)):
        return
    yield from rec(0)


def _cycles_of(n: int, edges: list[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        prev, cur = s, nbrs[s][0]
        while cur != s:
            cyc.append(cur)
            seen[cur] = True
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        out.append(tuple(cyc))
    return tuple(out)


def has_even_cycle_factor(G: Graph, ceiling: int = DEFAULT_ECF_CEILING) -> CycleFactor | None:
    """An even cycle factor of ``G`` found by exhaustive 2-factor search, or None."""
    if G.n > ceiling:
        raise PreconditionError(f"n={G.n} exceeds the cycle-factor ceiling {ceiling}")
    if G.n == 0:
        return CycleFactor(())
    for edges in _two_factors(G):
        cycles = _cycles_of(G.n, edges)
        if all(len(c) % 2 == 0 for c in cycles):
            return CycleFactor(cycles)
    return None


def has_hamiltonian_path(G: Graph, ceiling: int = DEFAULT_HAMILTON_CEILING) -> list[int] | None:
    """Subset dynamic programming over path endpoints; returns a path or None."""
    n = G.n
    if n > ceiling:
        raise PreconditionError(f"n={n} exceeds the Hamiltonian-path ceiling {ceiling}")
    if n == 0:
        return []
    # reach[S] = bitmask of vertices v such that some path covers S and ends at v
    reach = [0] * (1 << n)
    for v in range(n):
        reach[1 << v] = 1 << v
    for S in range(1, 1 << n):
        ends = reach[S]
        if not ends:
            continue
        for v in members(ends):
            for w in members(G.adj[v] & ~S):
                reach[S | (1 << w)] |= 1 << w
    full = (1 << n) - 1
    if not reach[full]:
        return None
    v = (reach[full] & -reach[full]).bit_length() - 1
    path, S = [v], full
    while S != 1 << v:
        S &= ~(1 << v)
        v = (reach[S] & G.adj[v] & -(reach[S] & G.adj[v])).bit_length() - 1
        path.append(v)
    return path


# -- line-graph gadgets ------------------------------------------------------

def _edge_labels(Gp: Graph, names: list[str]) -> tuple[str, ...]:
    return tuple(f"{names[u]}-{names[v]}" for u, v in Gp.edges)


def gadget_oct_linegraph(G: Graph) -> GadgetInstance:
    """``L(G)`` with budget ``m - n``: odd cycle transversal from even cycle factor."""
    if G.m == 0:
        raise PreconditionError("source graph must have at least one edge")
    L, _ = line_graph(G)
    names = [f"v{u}" for u in range(G.n)]
    return GadgetInstance(L, G.m - G.n, Provenance.T_OCT, _edge_labels(G, names))


def gadget_coct_linegraph(G: Graph) -> GadgetInstance:
    """Apex ``x`` on all of ``G`` plus a 4-cycle ``x y1 y2 y3``; target ``L(G')``, budget m."""
    if G.m == 0:
        raise PreconditionError("source graph must have at least one edge")
    n, m = G.n, G.m
    x, y1, y2, y3 = n, n + 1, n + 2, n + 3
    edges = list(G.edges) + [(u, x) for u in range(n)]
    edges += [(x, y1), (y1, y2), (y2, y3), (y3, x)]
    Gp = build_graph(n + 4, edges)
    assert Gp.n == n + 4 and Gp.m == m + n + 4
    L, _ = line_graph(Gp)
    names = [f"v{u}" for u in range(n)] + ["x", "y1", "y2", "y3"]
    return GadgetInstance(L, m, Provenance.T_COCT, _edge_labels(Gp, names))


def gadget_cfvs_linegraph(G: Graph) -> GadgetInstance:
    """Apexes ``x``, ``y`` on all of ``G`` with pendants ``x'``, ``y'``; budget m+n-1."""
    n, m = G.n, G.m
    if n < 3:
        raise PreconditionError(f"source graph needs at least 3 vertices, got {n}")
    x, y, xp, yp = n, n + 1, n + 2, n + 3
    edges = list(G.edges) + [(u, x) for u in range(n)] + [(u, y) for u in range(n)]
    edges += [(xp, x), (yp, y)]
    Gp = build_graph(n + 4, edges)
    assert Gp.n == n + 4 and Gp.m == m + 2 * n + 2
    L, _ = line_graph(Gp)
    names = [f"v{u}" for u in range(n)] + ["x", "y", "x'", "y'"]
    return GadgetInstance(L, m + n - 1, Provenance.T_CFVS, _edge_labels(Gp, names))


# -- girth gadgets -----------------------------------------------------------

def _original_labels(n_orig: int, n: int) -> tuple[str, ...]:
    return tuple("original" if v < n_orig else "path-internal" for v in range(n))


def gadget_oct_girth(G: Graph, p: int, k: int) -> GadgetInstance:
    """Double-subdivide edges of shortest cycles until the girth is at least ``p``.

    Each double subdivision preserves the minimum OCT size, so ``k`` carries over.
    """
    if p < 3:
        raise PreconditionError(f"girth target must be >= 3, got {p}")
    H = G
    while True:
        cyc = shortest_cycle(H)
        if cyc is None or len(cyc) >= p:
            break
        ring = list(zip(cyc, cyc[1:] + cyc[:1]))
        u, v = min((min(a, b), max(a, b)) for a, b in ring)
        H = subdivide_edge(H, (u, v), 2)
    assert girth(H) >= p
    return GadgetInstance(H, k, Provenance.T_OCT_GIRTH, _original_labels(G.n, H.n))


def _require_girth(G: Graph, p: int):
    if p < 3:
        raise PreconditionError(f"girth target must be >= 3, got {p}")
    g = girth(G)
    if g < p:
        raise PreconditionError(f"source graph has girth {g} < p={p}")


def gadget_coct_girth(G: Graph, p: int, k: int) -> GadgetInstance:
    """Add a parallel path with ``2*floor(p/2)`` edges beside every edge."""
    _require_girth(G, p)
    if G.m < 2:
        raise PreconditionError("source graph needs at least two edges")
    H = G
    for u, v in G.edges:
        H = add_path(H, u, v, 2 * (p // 2))
    assert girth(H) >= p
    return GadgetInstance(H, k, Provenance.T_COCT_GIRTH, _original_labels(G.n, H.n))


def gadget_cfvs_girth(G: Graph, p: int, k: int) -> GadgetInstance:
    """Add a parallel path with ``p - 1`` edges beside every edge (each edge closes a p-cycle)."""
    _require_girth(G, p)
    H = G
    for u, v in G.edges:
        H = add_path(H, u, v, p - 1)
    assert girth(H) >= p
    return GadgetInstance(H, k, Provenance.T_CFVS_GIRTH, _original_labels(G.n, H.n))


GADGETS = {
    Provenance.T_OCT: gadget_oct_linegraph,
    Provenance.T_COCT: gadget_coct_linegraph,
    Provenance.T_CFVS: gadget_cfvs_linegraph,
    Provenance.T_OCT_GIRTH: gadget_oct_girth,
    Provenance.T_COCT_GIRTH: gadget_coct_girth,
    Provenance.T_CFVS_GIRTH: gadget_cfvs_girth,
}


def build_gadget(name: str | Provenance, G: Graph, p: int | None = None, k: int | None = None) -> GadgetInstance:
    prov = Provenance(name) if isinstance(name, str) else name
    fn = GADGETS[prov]
    if prov in (Provenance.T_OCT, Provenance.T_COCT, Provenance.T_CFVS):
        return fn(G)
    if p is None or k is None:
        raise PreconditionError(f"gadget {prov.value} needs both p and k")
    return fn(G, p, k)


# -- verification ------------------------------------------------------------

def source_holds(inst: GadgetInstance, source: Graph, ceiling: int = HARD_CEILING) -> bool:
    """Decide the source problem of ``inst`` on ``source`` by brute force."""
    prov, k = inst.provenance, inst.budget_k
    if prov in (Provenance.T_OCT, Provenance.T_COCT):
        return has_even_cycle_factor(source, min(ceiling, DEFAULT_ECF_CEILING)) is not None
    if prov is Provenance.T_CFVS:
        return has_hamiltonian_path(source, min(ceiling, DEFAULT_HAMILTON_CEILING)) is not None
    if prov is Provenance.T_OCT_GIRTH:
        return exists_transversal(source, TransversalKind.OCT, k, ceiling=ceiling) is not None
    return exists_transversal(source, TransversalKind.VC, k, connected=True, ceiling=ceiling) is not None


_TARGET = {
    Provenance.T_OCT: (TransversalKind.OCT, False),
    Provenance.T_COCT: (TransversalKind.OCT, True),
    Provenance.T_CFVS: (TransversalKind.FVS, True),
    Provenance.T_OCT_GIRTH: (TransversalKind.OCT, False),
    Provenance.T_COCT_GIRTH: (TransversalKind.OCT, True),
    Provenance.T_CFVS_GIRTH: (TransversalKind.FVS, True),
}


def target_holds(inst: GadgetInstance, ceiling: int = HARD_CEILING) -> bool:
    kind, connected = _TARGET[inst.provenance]
    return exists_transversal(inst.graph, kind, inst.budget_k, connected, ceiling) is not None


def verify_gadget(inst: GadgetInstance, source: Graph, ceiling: int = HARD_CEILING) -> bool:
    """True iff the source answer equals the target answer on this instance."""
    return source_holds(inst, source, ceiling) == target_holds(inst, ceiling)
