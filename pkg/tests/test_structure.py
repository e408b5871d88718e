import math

import networkx as nx
import pytest
from hypothesis import given, settings

from forcinglab import corpus as corp
from forcinglab import families as fam
from forcinglab.graph import bits
from forcinglab.structure import (NotKTreeError, analyze, blocks, cut_vertices, degeneracy, diameter, has_minor,
                                  is_block_cycle, is_chordal, is_k_tree, is_outerplanar, k_tree_order,
                                  recognize_cluster, vertex_connectivity)

from conftest import connected_graphs, graphs
from oracles import to_nx


def nxg(g):
    return to_nx(g.n, g.edges())


def outerplanar_oracle(h: nx.Graph) -> bool:
    apex = h.copy()
    apex.add_edges_from(("apex", v) for v in list(h))
    return nx.check_planarity(apex)[0]


def k4_minor_free_oracle(h: nx.Graph) -> bool:
    """Series-parallel reduction: drop degree<=1 vertices, suppress degree 2."""
    h = nx.Graph(h)
    while h:
        v = next((v for v in h if h.degree(v) <= 2), None)
        if v is None:
            return False
        nb = list(h[v])
        h.remove_node(v)
        if len(nb) == 2:
            h.add_edge(*nb)
    return True


@given(graphs(max_n=8))
def test_outerplanar_matches_apex_planarity(g):
    assert is_outerplanar(g) == outerplanar_oracle(nxg(g))


@given(graphs(max_n=8))
def test_small_minors(g):
    h = nxg(g)
    assert has_minor(g, "K4") == (not k4_minor_free_oracle(h))
    assert has_minor(g, "K3") == (g.n > 0 and not nx.is_forest(h))
    outer = outerplanar_oracle(h)
    assert (has_minor(g, "K4") or has_minor(g, "K2,3")) == (not outer)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_wagner_minors(g):
    planar = nx.check_planarity(nxg(g))[0]
    assert planar == (not (has_minor(g, "K5") or has_minor(g, "K3,3")))


def test_minor_targets_on_named_graphs():
    assert has_minor(fam.complete(5), "K5")
    assert not has_minor(fam.complete_multipartite([3, 3]), "K5")
    assert has_minor(fam.petersen(), "K5") and has_minor(fam.petersen(), "K3,3")
    with pytest.raises(ValueError):
        has_minor(fam.path(3), "K7")


@given(graphs(max_n=9))
def test_blocks_and_cut_vertices(g):
    h = nxg(g)
    want = {frozenset(b) for b in nx.biconnected_components(h)} | {frozenset([v]) for v in h if h.degree(v) == 0}
    assert {frozenset(bits(b)) for b in blocks(g)} == want
    assert set(bits(cut_vertices(g))) == set(nx.articulation_points(h))


@given(graphs(max_n=9))
def test_chordality_and_bipartite(g):
    h = nxg(g)
    tags = analyze(g)
    assert is_chordal(g) == nx.is_chordal(h)
    assert tags.bipartite == nx.is_bipartite(h)
    assert tags.connected == (g.n == 0 or nx.is_connected(h))


@given(connected_graphs(min_n=1, max_n=8))
def test_connectivity_and_diameter(g):
    h = nxg(g)
    assert vertex_connectivity(g) == (g.n - 1 if nx.is_isomorphic(h, nx.complete_graph(g.n))
                                      else nx.node_connectivity(h))
    assert diameter(g) == nx.diameter(h)


def test_disconnected_diameter_and_degeneracy():
    g = fam.random_gnp(6, 0.0, 1)
    assert diameter(g) == math.inf
    assert degeneracy(fam.complete(5)) == 4
    assert degeneracy(fam.petersen()) == 3


def test_block_cycle_examples():
    assert is_block_cycle(fam.cycle(7))
    assert is_block_cycle(corp.block_cycle_corpus(1, 12, 3)[0])
    assert not is_block_cycle(fam.complete(4))


def test_k_trees():
    for k in (1, 2, 3):
        for seed in range(4):
            g = fam.random_ktree(k, k + 5, seed)
            assert is_k_tree(g, k) and k_tree_order(g) == k
    assert k_tree_order(fam.cycle(5)) is None
    assert k_tree_order(fam.path(6)) == 1


def test_cluster_recognition():
    g = fam.ktree_cluster(3, [0, 1, 2])
    info = recognize_cluster(g, 3)
    assert info is not None and info.size == 3 and info.base == (0, 1, 2, 3)
    with pytest.raises(NotKTreeError):
        recognize_cluster(fam.cycle(5), 2)


def test_structure_tags_json():
    tags = analyze(fam.cycle(5)).to_json()
    assert tags["outerplanar"] and tags["block_cycle"] and tags["unicyclic"]
    assert tags["k_tree"] is None and tags["diameter"] == 2
    assert analyze(fam.random_gnp(4, 0.0, 0)).to_json()["diameter"] is None
