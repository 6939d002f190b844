import pytest

from nicecubic.catalog import h44, k4, k33, triangular_prism
from nicecubic.enumeration import enumerate_cubic
from nicecubic.errors import DomainError
from nicecubic.graph6 import parse_graph6
from nicecubic.graphs import bipartition, connectivity_profile, is_connected
from nicecubic.isomorphism import is_isomorphic

# Connected cubic graph counts by order, from the published sequence.
KNOWN_CONNECTED_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def test_odd_order_rejected():
    with pytest.raises(DomainError):
        enumerate_cubic(5)


def test_tiny_orders_empty():
    assert enumerate_cubic(0, use_cache=False) == []
    assert enumerate_cubic(2, use_cache=False) == []


def test_n4_is_k4(cache_dir):
    entries = enumerate_cubic(4, cache_dir=cache_dir)
    assert len(entries) == 1
    assert is_isomorphic(entries[0].graph, k4()) is not None


def test_n6_is_k33_and_prism(cache_dir):
    entries = enumerate_cubic(6, cache_dir=cache_dir)
    assert len(entries) == 2
    found = {
        "k33": any(is_isomorphic(e.graph, k33()) for e in entries),
        "prism": any(is_isomorphic(e.graph, triangular_prism()) for e in entries),
    }
    assert all(found.values())


def test_counts_match_published_sequence(corpus12):
    by_order = {}
    for entry in corpus12:
        by_order[entry.graph.n] = by_order.get(entry.graph.n, 0) + 1
    assert by_order == KNOWN_CONNECTED_COUNTS


def test_corpus_is_duplicate_free(corpus10):
    for i, a in enumerate(corpus10):
        for b in corpus10[i + 1:]:
            if a.graph.n == b.graph.n:
                assert is_isomorphic(a.graph, b.graph) is None


def test_all_entries_connected_cubic(corpus10):
    for entry in corpus10:
        assert entry.graph.is_cubic
        assert entry.graph.simple
        assert is_connected(entry.graph)


def test_ids_are_canonical_and_sorted(corpus10):
    for entry in corpus10:
        assert parse_graph6(entry.graph6) == entry.graph
    for n in (4, 6, 8, 10):
        ids = [e.graph6 for e in corpus10 if e.graph.n == n]
        assert ids == sorted(ids)


def test_unique_3_connected_bipartite_on_8_vertices(cache_dir):
    hits = [
        e.graph
        for e in enumerate_cubic(8, cache_dir=cache_dir)
        if bipartition(e.graph) is not None
        and connectivity_profile(e.graph).three_connected
    ]
    assert len(hits) == 1
    assert is_isomorphic(hits[0], h44()) is not None


def test_bipartite_members_up_to_10_are_3_connected(corpus10):
    for entry in corpus10:
        if bipartition(entry.graph) is not None:
            assert connectivity_profile(entry.graph).three_connected


def test_cache_round_trip(tmp_path):
    fresh = enumerate_cubic(6, cache_dir=tmp_path)
    assert (tmp_path / "cubic-n6-connected.g6").is_file()
    cached = enumerate_cubic(6, cache_dir=tmp_path)
    assert [e.graph6 for e in cached] == [e.graph6 for e in fresh]
    assert all(e.provenance == "file" for e in cached)


def test_corrupt_cache_regenerated(tmp_path):
    path = tmp_path / "cubic-n4-connected.g6"
    path.write_text("not graph6 at all\x01\n")
    entries = enumerate_cubic(4, cache_dir=tmp_path)
    assert len(entries) == 1
    assert entries[0].provenance == "enumerated"


def test_disconnected_enumeration(cache_dir):
    entries = enumerate_cubic(10, connected_only=False, cache_dir=cache_dir)
    connected = enumerate_cubic(10, cache_dir=cache_dir)
    # partitions of 10 into parts >= 4: {4, 6} is the only disconnected shape
    assert len(entries) == len(connected) + 1 * 2
    disconnected = [e for e in entries if not is_connected(e.graph)]
    assert len(disconnected) == 2
    for entry in disconnected:
        assert entry.graph.is_cubic


def test_profile_edge_route_matches_vertex_route_on_corpus(corpus10):
    from itertools import combinations

    from nicecubic.graphs import connected_components

    for entry in corpus10:
        g = entry.graph
        profile = connectivity_profile(g)
        two = is_connected(g) and g.n >= 3 and all(
            len(connected_components(g, {v})) == 1 for v in range(g.n)
        )
        three = two and g.n >= 4 and all(
            len(connected_components(g, pair)) == 1
            for pair in combinations(range(g.n), 2)
        )
        assert profile.two_connected == two
        assert profile.three_connected == three
