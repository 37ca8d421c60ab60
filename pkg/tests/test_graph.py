import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubic_genetics import (
    BRIDGE10,
    K4,
    K33,
    PETERSEN,
    CubicGraph,
    decode_graph6,
    from_edge_list,
    parse_edge_list_text,
    parse_graph6,
    read_graph,
    relabel,
    to_edge_list_text,
    to_graph6,
)
from cubic_genetics.errors import (
    BadVertexId,
    MalformedEncoding,
    NotConnected,
    NotCubic,
    NotSimple,
    OddOrder,
)


def circular_ladder(k):
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return from_edge_list(2 * k, edges)


def test_k4_graph6_is_c_tilde():
    assert to_graph6(K4) == b"C~"
    assert parse_graph6("C~") == K4
    assert parse_graph6(b">>graph6<<C~\n") == K4


def test_basic_accessors():
    assert K4.m == 6
    assert K4.neighbors(0) == (1, 2, 3)
    assert K33.has_edge(0, 3) and not K33.has_edge(0, 1)
    with pytest.raises(BadVertexId):
        K4.neighbors(4)


@pytest.mark.parametrize(
    "n, edges, err",
    [
        (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], NotCubic),
        (4, [(0, 0), (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 1)], NotSimple),
        (4, [(0, 1), (0, 1), (0, 2), (1, 3), (2, 3), (2, 3)], NotSimple),
        (5, [(0, 1)], OddOrder),
        (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 9)], BadVertexId),
        (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, -1)], BadVertexId),
    ],
)
def test_validation_errors(n, edges, err):
    with pytest.raises(err):
        from_edge_list(n, edges)


def test_disconnected_rejected():
    k4k4 = [(a + s, b + s) for s in (0, 4) for a, b in K4.edges]
    with pytest.raises(NotConnected):
        from_edge_list(8, k4k4)


@pytest.mark.parametrize(
    "text",
    [
        "C",  # truncated
        "C~~",  # too long
        "C\x7f",  # out of range
        "",
    ],
)
def test_malformed_graph6(text):
    with pytest.raises((MalformedEncoding, NotCubic)):
        parse_graph6(text)


def test_nonzero_padding_rejected():
    # K33 needs 15 bits = 3 chars with 3 padding bits; flip a padding bit
    code = bytearray(to_graph6(K33))
    code[-1] = ((code[-1] - 63) | 1) + 63
    with pytest.raises(MalformedEncoding):
        decode_graph6(bytes(code))


def test_four_regular_is_not_cubic():
    octahedron = nx.to_graph6_bytes(nx.octahedral_graph(), header=False).strip()
    with pytest.raises(NotCubic):
        parse_graph6(octahedron)


@pytest.mark.parametrize("k", [2, 3, 5, 31, 32, 40])
def test_graph6_matches_networkx(k):
    if k == 2:
        g = K4
    else:
        g = circular_ladder(k)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    ref = nx.to_graph6_bytes(nxg, header=False).strip()
    assert to_graph6(g) == ref
    assert parse_graph6(ref) == g


def test_large_order_uses_long_size_field():
    g = circular_ladder(40)  # 80 vertices > 62
    code = to_graph6(g)
    assert code[0] == 126
    assert parse_graph6(code) == g


def test_edge_list_text_round_trip():
    text = to_edge_list_text(PETERSEN)
    assert text.splitlines()[0] == "10"
    assert parse_edge_list_text(text) == PETERSEN
    assert read_graph(text) == PETERSEN
    assert read_graph(to_graph6(BRIDGE10).decode()) == BRIDGE10


def test_equality_and_hash_follow_labelled_edges():
    g = relabel(K33, [1, 0, 2, 3, 4, 5])
    assert g == K33 and hash(g) == hash(K33)
    h = relabel(K33, [0, 3, 1, 2, 4, 5])
    assert h != K33
    with pytest.raises(BadVertexId):
        relabel(K4, [0, 0, 1, 2])


def test_repr_mentions_graph6():
    assert "C~" in repr(K4)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=12).map(lambda k: 2 * k), st.randoms(use_true_random=False))
def test_random_cubic_round_trip(n, rnd):
    nxg = nx.random_regular_graph(3, n, seed=rnd.randrange(2**31))
    if not nx.is_connected(nxg):
        return
    g = from_edge_list(n, nxg.edges())
    assert isinstance(g, CubicGraph)
    perm = list(range(n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert parse_graph6(to_graph6(h)) == h
    m, edges = decode_graph6(to_graph6(h))
    assert (m, sorted(edges)) == (n, list(h.edges))
