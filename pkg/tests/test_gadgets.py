import networkx as nx
import pytest

from conntrans.corpus import complete_graph, cycle_graph, path_graph, star_graph
from conntrans.gadgets import (
    CycleFactor,
    Provenance,
    build_gadget,
    gadget_cfvs_girth,
    gadget_cfvs_linegraph,
    gadget_coct_girth,
    gadget_coct_linegraph,
    gadget_oct_girth,
    gadget_oct_linegraph,
    has_even_cycle_factor,
    has_hamiltonian_path,
    source_holds,
    target_holds,
    verify_gadget,
)
from conntrans.graph import PreconditionError, build_graph, girth, line_graph
from conntrans.kinds import TransversalKind as K
from conntrans.solvers import brute_force_min_connected, brute_force_min_transversal, exists_transversal

from corpora import atlas, to_nx


def min_oct(G):
    return brute_force_min_transversal(G, K.OCT).size


def test_even_cycle_factor_examples():
    f = has_even_cycle_factor(cycle_graph(4))
    assert f is not None and f.is_valid(cycle_graph(4)) and len(f.cycles) == 1
    assert has_even_cycle_factor(cycle_graph(3)) is None
    f = has_even_cycle_factor(complete_graph(4))
    assert f.is_valid(complete_graph(4)) and [len(c) for c in f.cycles] == [4]
    assert has_even_cycle_factor(cycle_graph(6)) is not None
    two_squares = build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)])
    assert len(has_even_cycle_factor(two_squares).cycles) == 2
    with pytest.raises(PreconditionError):
        has_even_cycle_factor(cycle_graph(16))


def brute_even_cycle_factor(G):
    """Search over all edge subsets (independent of the backtracking search)."""
    from itertools import combinations
    for edges in combinations(G.edges, G.n):
        deg = [0] * G.n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if any(d != 2 for d in deg):
            continue
        g = nx.Graph(list(edges))
        if all(len(c) % 2 == 0 for c in nx.connected_components(g)):
            return True
    return False


def test_even_cycle_factor_matches_edge_subset_search():
    for entry in atlas():
        G = entry.graph
        if G.n <= 6 and G.m <= 12:
            got = has_even_cycle_factor(G)
            assert (got is not None) == brute_even_cycle_factor(G), entry.name
            if got is not None:
                assert got.is_valid(G)


def test_cycle_factor_validation():
    C4 = cycle_graph(4)
    assert not CycleFactor(((0, 2, 1, 3),)).is_valid(C4)
    assert not CycleFactor(((0, 1, 2),)).is_valid(cycle_graph(3))
    assert CycleFactor(((0, 1, 2),)).is_valid(cycle_graph(3), even=False)


def test_hamiltonian_path_examples():
    path = has_hamiltonian_path(path_graph(4))
    assert path in ([0, 1, 2, 3], [3, 2, 1, 0])
    assert has_hamiltonian_path(star_graph(3)) is None
    p = has_hamiltonian_path(complete_graph(4))
    assert sorted(p) == [0, 1, 2, 3]


def test_hamiltonian_path_matches_permutation_search():
    from itertools import permutations
    for entry in atlas():
        G = entry.graph
        if G.n > 6:
            continue
        expected = any(all(G.has_edge(a, b) for a, b in zip(p, p[1:])) for p in permutations(range(G.n)))
        got = has_hamiltonian_path(G)
        assert (got is not None) == expected, entry.name
        if got is not None:
            assert sorted(got) == list(range(G.n))
            assert all(G.has_edge(a, b) for a, b in zip(got, got[1:]))


def test_oct_linegraph_examples():
    inst = gadget_oct_linegraph(complete_graph(4))
    assert inst.provenance is Provenance.T_OCT
    assert nx.is_isomorphic(to_nx(inst.graph), nx.octahedral_graph())
    assert inst.budget_k == 2 and min_oct(inst.graph) == 2
    assert verify_gadget(inst, complete_graph(4))
    c3 = gadget_oct_linegraph(cycle_graph(3))
    assert (c3.graph.n, c3.budget_k) == (3, 0) and not target_holds(c3) and not source_holds(c3, cycle_graph(3))
    c4 = gadget_oct_linegraph(cycle_graph(4))
    assert (c4.graph.n, c4.budget_k) == (4, 0) and target_holds(c4) and source_holds(c4, cycle_graph(4))
    with pytest.raises(PreconditionError):
        gadget_oct_linegraph(build_graph(3, []))


@pytest.mark.parametrize("G, n_target, k, holds", [
    (complete_graph(4), 14, 6, True),
    (cycle_graph(3), 10, 3, False),
    (cycle_graph(4), 12, 4, True),
])
def test_coct_linegraph_examples(G, n_target, k, holds):
    inst = gadget_coct_linegraph(G)
    assert (inst.graph.n, inst.budget_k) == (n_target, k)
    assert inst.graph.n == G.m + G.n + 4
    assert target_holds(inst) is holds
    assert source_holds(inst, G) is holds
    assert verify_gadget(inst, G)


@pytest.mark.parametrize("G, n_target, k, holds", [
    (path_graph(3), 10, 4, True),
    (star_graph(3), 13, 6, False),
    (complete_graph(3), 11, 5, True),
])
def test_cfvs_linegraph_examples(G, n_target, k, holds):
    inst = gadget_cfvs_linegraph(G)
    assert (inst.graph.n, inst.budget_k) == (n_target, k)
    assert inst.graph.n == G.m + 2 * G.n + 2
    assert target_holds(inst) is holds
    assert source_holds(inst, G) is holds


def test_cfvs_linegraph_needs_three_vertices():
    with pytest.raises(PreconditionError, match="at least 3"):
        gadget_cfvs_linegraph(path_graph(2))


def test_gadget_labels_partition_vertices():
    inst = gadget_coct_linegraph(cycle_graph(3))
    assert len(inst.labels) == inst.graph.n == len(set(inst.labels))
    assert "x-y1" in inst.labels and "v0-x" in inst.labels
    inst = gadget_cfvs_girth(path_graph(3), 3, 1)
    assert inst.labels.count("original") == 3 and inst.labels.count("path-internal") == 2


def test_oct_girth_examples():
    inst = gadget_oct_girth(cycle_graph(3), 5, 1)
    assert nx.is_isomorphic(to_nx(inst.graph), nx.cycle_graph(5))
    assert min_oct(inst.graph) == 1
    same = gadget_oct_girth(cycle_graph(3), 3, 1)
    assert same.graph == cycle_graph(3)
    k4 = gadget_oct_girth(complete_graph(4), 5, 2)
    assert girth(k4.graph) >= 5 and min_oct(k4.graph) == 2 == min_oct(complete_graph(4))
    assert verify_gadget(k4, complete_graph(4))


def test_coct_girth_examples():
    inst = gadget_coct_girth(cycle_graph(5), 5, 4)
    assert inst.graph.n == 20 and girth(inst.graph) >= 5
    assert brute_force_min_connected(cycle_graph(5), K.VC).size == 4
    assert verify_gadget(inst, cycle_graph(5))
    assert target_holds(inst) and not target_holds(gadget_coct_girth(cycle_graph(5), 5, 3))
    p3 = gadget_coct_girth(path_graph(3), 3, 1)
    assert target_holds(p3) and verify_gadget(p3, path_graph(3))
    # connected vertex cover of C4 has size 3: {0, 2} covers but is disconnected
    assert brute_force_min_connected(cycle_graph(4), K.VC).size == 3
    for k, holds in ((2, False), (3, True)):
        c4 = gadget_coct_girth(cycle_graph(4), 3, k)
        assert verify_gadget(c4, cycle_graph(4)) and target_holds(c4) is holds


def test_cfvs_girth_examples():
    inst = gadget_cfvs_girth(path_graph(3), 3, 1)
    G = inst.graph
    assert (G.n, G.m) == (5, 6)
    assert exists_transversal(G, K.FVS, 1, connected=True) == {1}
    for H, p, k in ((cycle_graph(4), 4, 3), (cycle_graph(5), 5, 4)):
        cvc = brute_force_min_connected(H, K.VC).size
        assert cvc == k
        for kk in (k - 1, k):
            assert verify_gadget(gadget_cfvs_girth(H, p, kk), H)


def test_girth_gadgets_enforce_preconditions():
    with pytest.raises(PreconditionError, match="girth"):
        gadget_coct_girth(complete_graph(4), 4, 3)
    with pytest.raises(PreconditionError, match="girth"):
        gadget_cfvs_girth(cycle_graph(4), 5, 2)
    with pytest.raises(PreconditionError, match="two edges"):
        gadget_coct_girth(path_graph(2), 3, 1)
    with pytest.raises(PreconditionError):
        gadget_oct_girth(cycle_graph(3), 2, 1)


def test_build_gadget_dispatch():
    inst = build_gadget("cfvs-girth", cycle_graph(4), p=4, k=2)
    assert inst.provenance is Provenance.T_CFVS_GIRTH
    with pytest.raises(PreconditionError, match="needs both"):
        build_gadget("coct-girth", cycle_graph(4))


def test_double_subdivision_keeps_min_oct():
    from conntrans.graph import subdivide_edge
    for entry in atlas()[::7]:
        G = entry.graph
        before = min_oct(G)
        for e in G.edges:
            assert min_oct(subdivide_edge(G, e, 2)) == before, (entry.name, e)


def test_line_lemma_small_graphs():
    """If L(G) has an OCT of size <= m - n then G has an even cycle factor."""
    for entry in atlas():
        G = entry.graph
        if not 1 <= G.m <= 12:
            continue
        L, _ = line_graph(G)
        if exists_transversal(L, K.OCT, G.m - G.n) is not None:
            assert has_even_cycle_factor(G) is not None, entry.name
