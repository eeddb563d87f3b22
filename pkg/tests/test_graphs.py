"""Immutable bitset graphs, realization, embedding, surgery."""

from __future__ import annotations

import pytest

import helpers
from potgraph.errors import DomainError
from potgraph.graphs import (
    Graph,
    contains_subgraph,
    degree_sequence_of,
    disjoint_union,
    find_embedding,
    havel_hakimi_realize,
    merge_vertices,
    pattern_k6_c5,
)
from potgraph.sequences import DegreeSequence, is_graphic_eg


def test_constructor_validates():
    with pytest.raises(DomainError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(DomainError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(DomainError):
        Graph(2, (0b00,))  # wrong row count
    with pytest.raises(DomainError):
        Graph(2, (0b100, 0b000))  # bit beyond order
    with pytest.raises(DomainError):
        Graph(-1, ())
    with pytest.raises(DomainError):
        Graph(65, (0,) * 65)


def test_basic_constructors():
    k4 = Graph.complete(4)
    assert k4.edge_count == 6
    assert k4.degrees() == (3, 3, 3, 3)
    c5 = Graph.cycle(5)
    assert c5.degrees() == (2, 2, 2, 2, 2)
    assert c5.edge_count == 5
    with pytest.raises(DomainError):
        Graph.cycle(2)
    assert Graph.empty(3).edge_count == 0

    g = Graph.from_edges(4, [(0, 1), (1, 0), (2, 3)])
    assert g.edge_count == 2  # duplicate orientation collapses
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(1, 1)])


def test_edges_listing_and_with_edge():
    g = Graph.from_edges(4, [(2, 3), (0, 1)])
    assert g.edges() == [(0, 1), (2, 3)]
    g2 = g.with_edge(0, 2)
    assert g2.has_edge(0, 2) and not g.has_edge(0, 2)
    assert g2.degree(0) == 2


def test_text_round_trip():
    g = Graph.from_edges(5, [(0, 1), (1, 4), (2, 3)])
    text = g.to_text()
    assert text.startswith("n=5")
    assert text.endswith("\n")
    assert Graph.from_text(text) == g
    commented = "# witness\nn=3\n0 1\n# done\n"
    assert Graph.from_text(commented).edges() == [(0, 1)]
    with pytest.raises(DomainError):
        Graph.from_text("0 1\n")  # missing header
    with pytest.raises(DomainError):
        Graph.from_text("n=3\n0\n")
    with pytest.raises(DomainError):
        Graph.from_text("n=3\n0 5\n")


def test_wheel_pattern_shape():
    pat = pattern_k6_c5()
    g = pat.graph
    assert pat.name == "K6-C5"
    assert g.n == 6
    assert g.edge_count == 10
    assert g.degrees() == (5, 3, 3, 3, 3, 3)
    # hub sees every rim vertex
    for v in range(1, 6):
        assert g.has_edge(0, v)
    # exactly the five cycle chords are absent
    missing = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    present = [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
    assert all(not g.has_edge(u, v) for u, v in missing)
    assert all(g.has_edge(u, v) for u, v in present)
    assert sorted(g.edges()) == sorted(
        tuple(sorted(e)) for e in helpers.WHEEL_EDGES
    )


def test_havel_hakimi_realizes_every_graphic_sequence():
    for n in range(1, 7):
        for terms in helpers.all_degree_vectors(n):
            seq = DegreeSequence(terms)
            if not is_graphic_eg(seq):
                with pytest.raises(DomainError):
                    havel_hakimi_realize(seq)
                continue
            g = havel_hakimi_realize(seq)
            assert degree_sequence_of(g) == seq, terms


def test_embedding_positive_and_negative():
    pat = pattern_k6_c5()
    assert contains_subgraph(Graph.complete(6), pat)
    assert not contains_subgraph(Graph.cycle(6), pat)
    assert not contains_subgraph(Graph.complete(5), pat)
    # K5 plus an isolated vertex has six vertices but no degree-5 hub
    k5_pad = disjoint_union(Graph.complete(5), Graph.empty(1))
    assert not contains_subgraph(k5_pad, pat)
    assert contains_subgraph(pat.graph, pat)


def test_embedding_maps_edges():
    pat = pattern_k6_c5()
    host = disjoint_union(Graph.cycle(3), pat.graph)
    mapping = find_embedding(host, pat)
    assert mapping is not None
    assert len(set(mapping)) == 6
    for u, v in pat.graph.edges():
        assert host.has_edge(mapping[u], mapping[v])
    # deterministic: repeated searches return the identical embedding
    assert find_embedding(host, pat) == mapping


def test_embedding_accepts_plain_graphs():
    triangle = Graph.complete(3)
    host = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    mapping = find_embedding(host, triangle)
    assert mapping is not None
    assert not contains_subgraph(Graph.from_edges(3, [(0, 1), (1, 2)]), triangle)


def test_disjoint_union():
    a = Graph.complete(3)
    b = Graph.cycle(4)
    u = disjoint_union(a, b)
    assert u.n == 7
    assert u.degrees() == (2, 2, 2, 2, 2, 2, 2)
    assert u.edge_count == a.edge_count + b.edge_count
    assert u.has_edge(0, 1) and u.has_edge(3, 4) and not u.has_edge(2, 3)
    with pytest.raises(DomainError):
        disjoint_union(Graph.empty(33), Graph.empty(32))


def test_merge_vertices():
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    merged = merge_vertices(p4, 0, 3)
    assert merged.n == 3
    assert sorted(merged.degrees()) == [2, 2, 2]
    assert merged.edge_count == 3  # the path closes into a triangle
    with pytest.raises(DomainError):
        merge_vertices(p4, 1, 1)
    with pytest.raises(DomainError):
        merge_vertices(p4, 0, 1)  # adjacent
    with pytest.raises(DomainError):
        merge_vertices(p4, 0, 2)  # share neighbor 1
    with pytest.raises(DomainError):
        merge_vertices(p4, 0, 4)


def test_merge_vertices_index_shift():
    g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    merged = merge_vertices(g, 0, 2)
    # vertex 2 disappears, vertices 3 and 4 slide down to 2 and 3
    assert merged.n == 4
    assert merged.has_edge(0, 1)
    assert merged.has_edge(0, 2)  # inherited 2-3
    assert merged.has_edge(2, 3)  # old 3-4
