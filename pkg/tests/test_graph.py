import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forcinglab.graph import (ContractEdge, Coalescence, DeleteEdge, DeleteVertex, DisjointUnion, EdgeSum,
                              GraphError, Join, SubdivideEdge, VertexSum, apply_edit, bits, build_graph,
                              complement, compose, empty_graph, mask_of, popcount)

from conftest import graphs


def test_bit_helpers():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert mask_of([0, 3]) == 0b1001
    assert popcount(0b111) == 3


def test_build_rejects_bad_edges():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])


def test_components_and_induced():
    g = build_graph(5, [(0, 1), (1, 2), (3, 4)])
    assert sorted(g.components()) == [0b00111, 0b11000]
    h = g.induced([1, 2, 3])
    assert h.n == 3 and h.edges() == [(0, 1)]
    assert not g.is_connected()
    assert empty_graph(0).components() == []


@given(graphs())
def test_complement_is_involution(g):
    c = complement(g)
    assert complement(c) == g
    assert g.m + c.m == g.n * (g.n - 1) // 2


@given(graphs(min_n=1))
def test_degree_sum(g):
    assert sum(g.degrees()) == 2 * g.m


@given(graphs(min_n=2), st.data())
def test_edits_change_sizes(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    h = apply_edit(g, DeleteVertex(v))
    assert h.n == g.n - 1 and h.m == g.m - g.degree(v)
    if g.m:
        u, w = data.draw(st.sampled_from(g.edges()))
        assert apply_edit(g, DeleteEdge(u, w)).m == g.m - 1
        s = apply_edit(g, SubdivideEdge(u, w))
        assert (s.n, s.m) == (g.n + 1, g.m + 1)
        c = apply_edit(g, ContractEdge(u, w))
        common = popcount(g.adj[u] & g.adj[w])
        assert (c.n, c.m) == (g.n - 1, g.m - 1 - common)


def test_edit_errors():
    g = build_graph(3, [(0, 1)])
    with pytest.raises(GraphError):
        apply_edit(g, DeleteEdge(1, 2))
    with pytest.raises(GraphError):
        apply_edit(g, DeleteVertex(5))


@settings(max_examples=50)
@given(graphs(min_n=1, max_n=5), graphs(min_n=1, max_n=5), st.data())
def test_compositions(g, h, data):
    a = data.draw(st.integers(0, g.n - 1))
    b = data.draw(st.integers(0, h.n - 1))
    vs = compose(g, h, VertexSum(a, b))
    assert (vs.n, vs.m) == (g.n + h.n - 1, g.m + h.m)
    assert vs.degree(a) == g.degree(a) + h.degree(b)
    es = compose(g, h, EdgeSum(a, b))
    assert (es.n, es.m) == (g.n + h.n, g.m + h.m + 1)
    j = compose(g, h, Join())
    assert j.m == g.m + h.m + g.n * h.n
    du = compose(g, h, DisjointUnion())
    assert len(du.components()) == len(g.components()) + len(h.components())


def test_coalescence_along_clique():
    k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    co = compose(k4, k4, Coalescence((0, 1, 2), (0, 1, 2)))
    assert (co.n, co.m) == (5, 9)
    with pytest.raises(GraphError):
        compose(build_graph(3, [(0, 1)]), build_graph(3, [(0, 1), (1, 2)]), Coalescence((0, 1), (0, 2)))
