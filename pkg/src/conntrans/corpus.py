"""Named graph families and seeded test corpora."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, PreconditionError, build_graph, is_connected, is_sp2_free

FAMILIES = ("path", "cycle", "complete", "complete-multipartite", "random-filtered-sP2free", "petersen")


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(parts: list[int]) -> Graph:
    label = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(label)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@dataclass(frozen=True)
class CorpusGraph:
    name: str
    graph: Graph
    s: int | None = None  # verified sP2-freeness parameter, when filtered


def generate_corpus(family: str, params: dict | None = None, seed: int = 0) -> list[CorpusGraph]:
    """Deterministic list of graphs from one family.

    ``params`` by family: ``n`` (path/cycle/complete), ``parts``
    (complete-multipartite), and for ``random-filtered-sP2free``: ``n``,
    ``s``, ``count`` (default 10), ``p`` (edge probability; drawn from
    [0.3, 0.9] per attempt when absent), ``connected`` (default True) and
    ``max_attempts`` (default 10000).
    """
    params = dict(params or {})
    if family == "path":
        n = params.get("n", 5)
        return [CorpusGraph(f"P{n}", path_graph(n))]
    if family == "cycle":
        n = params.get("n", 5)
        return [CorpusGraph(f"C{n}", cycle_graph(n))]
    if family == "complete":
        n = params.get("n", 4)
        return [CorpusGraph(f"K{n}", complete_graph(n))]
    if family == "complete-multipartite":
        parts = list(params.get("parts", [2, 2, 2]))
        return [CorpusGraph("K" + ",".join(map(str, parts)), complete_multipartite(parts))]
    if family == "petersen":
        return [CorpusGraph("petersen", petersen_graph())]
    if family == "random-filtered-sP2free":
        return _random_filtered(seed, **params)
    raise PreconditionError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def _random_filtered(seed, n=10, s=2, count=10, p=None, connected=True, max_attempts=10000):
    if s < 1:
        raise PreconditionError(f"s must be positive, got {s}")
    rng = random.Random(seed)
    out = []
    for _ in range(max_attempts):
        if len(out) == count:
            return out
        prob = p if p is not None else rng.uniform(0.3, 0.9)
        G = random_graph(n, prob, rng)
        if connected and not is_connected(G):
            continue
        if is_sp2_free(G, s):
            out.append(CorpusGraph(f"rand-{s}P2free-n{n}-{len(out)}", G, s))
    if len(out) < count:
        raise PreconditionError(
            f"found only {len(out)} of {count} {s}P2-free graphs within the attempt cap {max_attempts}"
        )
    return out


def connected_random_corpus(count: int, n_range: tuple[int, int], seed: int) -> list[CorpusGraph]:
    """Connected Erdos-Renyi graphs with sizes drawn from ``n_range`` (inclusive)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(*n_range)
        G = random_graph(n, rng.uniform(0.15, 0.85), rng)
        if is_connected(G):
            out.append(CorpusGraph(f"rand-n{n}-{len(out)}", G))
    return out


def named_graphs() -> list[CorpusGraph]:
    return [
        CorpusGraph("P2", path_graph(2)),
        CorpusGraph("P3", path_graph(3)),
        CorpusGraph("P5", path_graph(5)),
        CorpusGraph("C3", cycle_graph(3)),
        CorpusGraph("C4", cycle_graph(4)),
        CorpusGraph("C5", cycle_graph(5)),
        CorpusGraph("C6", cycle_graph(6)),
        CorpusGraph("K4", complete_graph(4)),
        CorpusGraph("K1,3", star_graph(3)),
        CorpusGraph("K1,4", star_graph(4)),
        CorpusGraph("octahedron", complete_multipartite([2, 2, 2])),
        CorpusGraph("petersen", petersen_graph()),
    ]
