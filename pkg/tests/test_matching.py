from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from nicecubic.catalog import k4, k33, triangular_prism
from nicecubic.errors import DomainError
from nicecubic.graphs import Graph
from nicecubic.matching import (
    count_perfect_matchings,
    has_perfect_matching,
    is_matching_covered,
    make_matching,
    maximum_matching,
    nice_check,
    perfect_matchings,
    tutte_condition_holds,
)

from .strategies import multigraphs, simple_graphs


def _brute_force_maximum(g):
    best = 0
    m = len(g.edges)
    for size in range(m, -1, -1):
        if size <= best:
            break
        for subset in combinations(range(m), size):
            seen = set()
            ok = True
            for i in subset:
                u, v = g.edges[i]
                if u in seen or v in seen:
                    ok = False
                    break
                seen.add(u)
                seen.add(v)
            if ok:
                best = max(best, size)
                break
    return best


def test_k2_matches_its_edge():
    m = maximum_matching(Graph(2, [(0, 1)]))
    assert m.edge_indices == (0,)


def test_k4_maximum_is_perfect():
    m = maximum_matching(k4())
    assert m.is_perfect(k4())


def test_odd_cycle_maximum():
    c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert len(maximum_matching(c5).edge_indices) == 2


def test_maximum_matching_is_deterministic():
    g = triangular_prism()
    assert maximum_matching(g) == maximum_matching(g)


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=7))
def test_maximum_matching_optimal_by_brute_force(g):
    found = maximum_matching(g)
    assert len(found.edge_indices) == _brute_force_maximum(g)


@settings(max_examples=100, deadline=None)
@given(simple_graphs(max_n=9))
def test_maximum_matching_agrees_with_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    expected = len(nx.max_weight_matching(nxg, maxcardinality=True))
    assert len(maximum_matching(g).edge_indices) == expected


@settings(max_examples=100, deadline=None)
@given(simple_graphs(max_n=9))
def test_existence_agrees_with_exhaustive_deletion_test(g):
    assert has_perfect_matching(g) == tutte_condition_holds(g)


def test_perfect_matching_counts_with_independent_oracle():
    # Oracle: sweep all edge subsets of the right size.
    def oracle(g):
        count = 0
        for subset in combinations(range(len(g.edges)), g.n // 2):
            seen = set()
            for i in subset:
                u, v = g.edges[i]
                if u in seen or v in seen:
                    break
                seen.add(u)
                seen.add(v)
            else:
                count += 1
        return count

    assert count_perfect_matchings(k4()) == oracle(k4()) == 3
    assert count_perfect_matchings(k33()) == oracle(k33()) == 6
    assert count_perfect_matchings(triangular_prism()) == oracle(triangular_prism())


def test_perfect_matchings_odd_order_empty():
    c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert perfect_matchings(c5) == []


def test_perfect_matchings_distinguish_parallel_edges():
    triple = Graph(2, [(0, 1)] * 3)
    assert len(perfect_matchings(triple)) == 3


def test_perfect_matchings_limit_and_order():
    all_of_them = perfect_matchings(k33())
    limited = perfect_matchings(k33(), limit=2)
    assert limited == all_of_them[:2]


def test_empty_graph_has_the_empty_perfect_matching():
    assert perfect_matchings(Graph(0)) == [make_matching(Graph(0), ())]
    assert has_perfect_matching(Graph(0))


def test_matching_covered_examples():
    assert is_matching_covered(k4())
    c6 = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    assert is_matching_covered(c6)
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert not is_matching_covered(star)


def test_matching_covered_requires_two_vertices():
    with pytest.raises(DomainError):
        is_matching_covered(Graph(1))


def test_nice_check_trivial_sets():
    assert nice_check(k4(), set())
    assert nice_check(k4(), range(4))
    assert nice_check(k4(), k4().closed_neighborhood(0))


def test_make_matching_rejects_shared_vertices():
    with pytest.raises(ValueError):
        make_matching(k4(), (0, 1))  # edges (0,1) and (0,2) share vertex 0


def test_maximum_matching_exhaustive_up_to_5_vertices():
    for n in range(0, 6):
        pool = list(combinations(range(n), 2))
        for bits in range(1 << len(pool)):
            edges = [pool[i] for i in range(len(pool)) if bits >> i & 1]
            g = Graph(n, edges)
            assert len(maximum_matching(g).edge_indices) == _brute_force_maximum(g)


def test_returned_matchings_are_vertex_disjoint():
    for g in (k4(), k33(), triangular_prism()):
        make_matching(g, maximum_matching(g).edge_indices)
        for pm in perfect_matchings(g):
            make_matching(g, pm.edge_indices)  # raises on overlap
