import networkx as nx
import pytest
from hypothesis import given

from forcinglab.io import (Graph6Error, Graph6SizeError, edgelist_decode, edgelist_encode, graph6_decode,
                           graph6_encode, iter_edgelists, read_corpus)

from conftest import graphs
from oracles import to_nx


def test_hand_encodings():
    assert graph6_decode("A_").edges() == [(0, 1)]
    assert graph6_decode("A?").n == 2 and graph6_decode("A?").m == 0
    assert graph6_decode("C~").m == 6
    assert graph6_decode(">>graph6<<A_").m == 1


def test_c5_string():
    g = graph6_decode("Dhc")
    assert g.n == 5 and sorted(g.degrees()) == [2] * 5 and g.is_connected()


@given(graphs(max_n=12))
def test_roundtrip_and_networkx_agreement(g):
    s = graph6_encode(g)
    assert graph6_decode(s) == g
    assert s == nx.to_graph6_bytes(to_nx(g.n, g.edges()), header=False).decode().strip()


@pytest.mark.parametrize("bad", ["", "A", "A__", "A\x7f", "B`a b"])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        graph6_decode(bad)


def test_bad_size_header():
    with pytest.raises(Graph6SizeError):
        graph6_decode("~???")


@given(graphs(max_n=8))
def test_edgelist_roundtrip(g):
    assert edgelist_decode(edgelist_encode(g)) == g


def test_corpus_reports_line_numbers():
    gs, errs = read_corpus("A_\nnot graph6 at all\n\nC~\n")
    assert [g.n for g in gs] == [2, 4]
    assert [e.line for e in errs] == [2]


def test_iter_edgelists_blocks():
    text = "2 1\n0 1\n\n3 0\n"
    assert [g.n for g in iter_edgelists(text.splitlines())] == [2, 3]
