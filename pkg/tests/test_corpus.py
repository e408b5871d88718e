import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from forcinglab import corpus as corp
from forcinglab import families as fam
from forcinglab.structure import is_block_cycle, is_outerplanar, k_tree_order
from forcinglab.solvers import Param, cached

from oracles import to_nx


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_enumeration_matches_pruefer_classes(n):
    trees = corp.trees_of_order(n)
    forms = [corp.tree_canonical_form(t) for t in trees]
    assert len(set(forms)) == len(forms)
    assert set(forms) == corp.pruefer_tree_classes(n)


def test_tree_counts_against_networkx():
    assert len(corp.trees_of_order(1)) == 1
    for n in range(2, 11):
        assert len(corp.trees_of_order(n)) == sum(1 for _ in nx.nonisomorphic_trees(n))
    assert len(corp.trees_up_to(8)) == 48


@given(st.integers(2, 12), st.integers(0, 2**32 - 1))
def test_canonical_form_is_label_invariant(n, seed):
    t = fam.random_tree(n, seed)
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    assert corp.tree_canonical_form(t) == corp.tree_canonical_form(t.relabel(perm))


def test_corpora_are_seeded():
    assert corp.gnp_corpus(5, (3, 8), (0.3,), 1) == corp.gnp_corpus(5, (3, 8), (0.3,), 1)
    assert corp.vertex_sum_pairs(3, (2, 6), 9) == corp.vertex_sum_pairs(3, (2, 6), 9)


def test_corpus_families_have_their_structure():
    assert all(is_block_cycle(g) for g in corp.block_cycle_corpus(20, 12, 2))
    assert all(is_outerplanar(g) and nx.is_connected(to_nx(g.n, g.edges()))
               for g in corp.outerplanar_corpus(20, (3, 10), 2))
    for inst in corp.vertex_sum_pairs(10, (2, 7), 4):
        assert inst.graph.n == inst.g.n + inst.h.n - 1


@pytest.mark.parametrize("k,t", [(2, 1), (2, 2), (3, 2), (4, 1)])
def test_cluster_chain_is_a_k_tree(k, t):
    g = corp.cluster_chain(k, t)
    assert k_tree_order(g) == k
    assert cached(g, Param.ZPLUS).value == k + t
    with pytest.raises(ValueError):
        corp.cluster_chain(k, t, extra=2)
