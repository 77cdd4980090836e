import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from conntrans.corpus import complete_graph, cycle_graph, path_graph, star_graph
from conntrans.enumerators import (
    EnumerationStream,
    brute_force_maximal_independent_sets,
    brute_force_minimal_sets,
    enumerate_maximal_independent_sets,
    enumerate_minimal_fvs,
    enumerate_minimal_oct,
    enumerate_minimal_transversals,
    enumerate_minimal_vertex_covers,
)
from conntrans.graph import PreconditionError, build_graph, is_acyclic, is_bipartite, induced_subgraph
from conntrans.kinds import TransversalKind as K

from corpora import to_nx
from test_graph import graphs


def fs(*sets):
    return {frozenset(s) for s in sets}


def test_mis_examples():
    assert set(enumerate_maximal_independent_sets(cycle_graph(5))) == fs(
        {0, 2}, {1, 3}, {2, 4}, {3, 0}, {4, 1})
    assert set(enumerate_maximal_independent_sets(complete_graph(4))) == fs({0}, {1}, {2}, {3})
    assert set(enumerate_maximal_independent_sets(cycle_graph(4))) == fs({0, 2}, {1, 3})


def test_min_vc_examples():
    covers = list(enumerate_minimal_vertex_covers(cycle_graph(5)))
    assert len(covers) == 5 and all(len(c) == 3 for c in covers)
    assert set(enumerate_minimal_vertex_covers(path_graph(2))) == fs({0}, {1})
    assert list(enumerate_minimal_vertex_covers(build_graph(3, []))) == [frozenset()]


def test_min_fvs_examples():
    assert set(enumerate_minimal_fvs(cycle_graph(4))) == fs({0}, {1}, {2}, {3})
    assert set(enumerate_minimal_fvs(complete_graph(4))) == {frozenset(p) for p in itertools.combinations(range(4), 2)}
    assert list(enumerate_minimal_fvs(star_graph(3))) == [frozenset()]
    assert list(enumerate_minimal_fvs(path_graph(6))) == [frozenset()]


def test_min_oct_examples():
    assert set(enumerate_minimal_oct(cycle_graph(3))) == fs({0}, {1}, {2})
    assert list(enumerate_minimal_oct(cycle_graph(6))) == [frozenset()]
    assert set(enumerate_minimal_oct(complete_graph(4))) == {frozenset(p) for p in itertools.combinations(range(4), 2)}


def test_brute_force_examples():
    assert set(brute_force_minimal_sets(cycle_graph(4), K.FVS)) == fs({0}, {1}, {2}, {3})
    vcs = brute_force_minimal_sets(cycle_graph(5), K.VC)
    assert len(vcs) == 5 and all(len(c) == 3 for c in vcs)
    assert set(brute_force_minimal_sets(cycle_graph(3), K.OCT)) == fs({0}, {1}, {2})


def test_brute_force_callable_predicate():
    def is_fvs(G, S):
        return is_acyclic(induced_subgraph(G, set(range(G.n)) - S)[0])
    G = complete_graph(4)
    assert set(brute_force_minimal_sets(G, is_fvs)) == set(brute_force_minimal_sets(G, K.FVS))


def test_brute_force_ceiling():
    with pytest.raises(PreconditionError, match="ceiling"):
        brute_force_minimal_sets(path_graph(17), K.VC)
    brute_force_minimal_sets(path_graph(5), K.VC, ceiling=5)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_mis_matches_networkx_cliques_of_complement(G):
    expected = {frozenset(c) for c in nx.find_cliques(nx.complement(to_nx(G)))} if G.n else {frozenset()}
    got = list(enumerate_maximal_independent_sets(G))
    assert len(got) == len(set(got))
    assert set(got) == expected


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_streams_match_brute_force(G):
    assert set(enumerate_maximal_independent_sets(G)) == set(brute_force_maximal_independent_sets(G))
    for kind in K:
        got = list(enumerate_minimal_transversals(G, kind))
        assert len(got) == len(set(got))
        assert set(got) == set(brute_force_minimal_sets(G, kind))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_mis_vc_bijection(G):
    full = frozenset(range(G.n))
    mis = set(enumerate_maximal_independent_sets(G))
    vcs = set(enumerate_minimal_vertex_covers(G))
    assert {full - S for S in mis} == vcs


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_minimality_of_emitted_fvs_and_oct(G):
    full = set(range(G.n))
    for S in enumerate_minimal_fvs(G):
        assert is_acyclic(induced_subgraph(G, full - S)[0])
        for v in S:
            assert not is_acyclic(induced_subgraph(G, full - (S - {v}))[0])
    for S in enumerate_minimal_oct(G):
        assert is_bipartite(induced_subgraph(G, full - S)[0])
        for v in S:
            assert not is_bipartite(induced_subgraph(G, full - (S - {v}))[0])


def test_stream_counts_and_is_single_pass():
    stream = enumerate_maximal_independent_sets(cycle_graph(7))
    assert isinstance(stream, EnumerationStream)
    first = list(stream)
    assert stream.emitted == len(first) == 7
    assert list(stream) == []


def test_stream_predicate_check_catches_bad_source():
    G = cycle_graph(4)
    bad = EnumerationStream(G, enumerate_minimal_fvs(G).kind, iter([0b0011]), check=True)
    with pytest.raises(AssertionError):
        list(bad)


def test_completeness_on_nine_and_ten_vertices():
    from conntrans.corpus import connected_random_corpus
    for entry in connected_random_corpus(12, (9, 10), seed=77):
        G = entry.graph
        for kind in K:
            got = list(enumerate_minimal_transversals(G, kind))
            assert len(got) == len(set(got))
            assert set(got) == set(brute_force_minimal_sets(G, kind)), (entry.name, kind)


def test_minimal_fvs_count_is_polynomial_on_2p2_free():
    # loose ceiling: the family of minimal FVS of a 2P2-free graph is polynomial
    from corpora import sp2free_corpus
    for entry in sp2free_corpus(2, 12):
        G = entry.graph
        count = sum(1 for _ in enumerate_minimal_fvs(G).masks())
        assert count <= G.n ** 14, entry.name
