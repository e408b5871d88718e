import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forcinglab import families as fam
from forcinglab.forcing import (IncompleteRunError, Rule, chains, closure, derived_set, forcing_trees,
                                is_forcing_set, psd_closure, reversal, sequential_derived, standard_closure,
                                tree_count_check)
from forcinglab.graph import bits, build_graph, mask_of, popcount
from forcinglab.solvers import _is_induced_path

from conftest import graphs
from oracles import psd_closure as oracle_psd
from oracles import standard_closure as oracle_std
from oracles import to_nx

# vertices v1..v5 as 0..4
FIVE = build_graph(5, [(0, 2), (2, 3), (1, 2), (1, 3), (1, 4)])
# vertices v1..v10 as 0..9
TEN = build_graph(10, [(7, 8), (7, 6), (8, 0), (6, 5), (0, 2), (5, 4), (8, 6), (0, 5), (2, 4), (2, 3),
                       (4, 3), (8, 9), (0, 9), (0, 1), (2, 1)])


def test_path_from_endpoint():
    run = standard_closure(fam.path(5), [0])
    assert run.complete and len(run.events) == 4
    assert chains(run).chains == [(0, 1, 2, 3, 4)]


def test_five_vertex_example_chains():
    run = standard_closure(FIVE, [0, 1])
    assert run.complete
    assert sorted(chains(run).chains) == [(0, 2, 3), (1, 4)]


def test_k4_single_vertex_blocks():
    run = standard_closure(fam.complete(4), [0])
    assert run.events == [] and run.derived == 1


def test_psd_examples():
    assert psd_closure(fam.star(5), [0]).complete
    assert len(psd_closure(fam.star(5), [0]).events[0].forced) == 4
    assert psd_closure(fam.cycle(6), [0, 1]).complete
    for seed in range(5):
        t = fam.random_tree(9, seed)
        assert psd_closure(t, [seed % 9]).complete


def test_forcing_set_examples():
    c4 = fam.cycle(4)
    assert is_forcing_set(c4, [0, 1])
    assert not is_forcing_set(c4, [0])
    k23 = fam.complete_multipartite([2, 3])
    assert is_forcing_set(k23, [0, 2, 3])


def test_ten_vertex_pzfs():
    assert is_forcing_set(TEN, [0, 2, 9], Rule.PSD)
    forest = forcing_trees(psd_closure(TEN, [0, 2, 9]))
    assert len(forest.trees) == 3 and tree_count_check(forest, TEN)


@given(graphs(max_n=8), st.data())
def test_closures_match_oracle(g, data):
    b = data.draw(st.integers(0, (1 << g.n) - 1)) if g.n else 0
    ng = to_nx(g.n, g.edges())
    assert derived_set(g, b, Rule.STANDARD) == mask_of(oracle_std(ng, bits(b)))
    assert derived_set(g, b, Rule.PSD) == mask_of(oracle_psd(ng, bits(b)))


@given(graphs(max_n=9), st.integers(0, 2**16))
def test_order_independence(g, seed):
    rng = random.Random(seed)
    b = rng.getrandbits(g.n) if g.n else 0
    for rule in Rule:
        assert sequential_derived(g, b, rule, rng) == derived_set(g, b, rule)


@given(graphs(max_n=9), st.data())
def test_standard_inside_psd(g, data):
    b = data.draw(st.integers(0, (1 << g.n) - 1)) if g.n else 0
    assert derived_set(g, b, Rule.STANDARD) & ~derived_set(g, b, Rule.PSD) == 0


@given(graphs(min_n=1, max_n=9), st.data())
def test_chains_partition_into_induced_paths(g, data):
    extra = data.draw(st.integers(0, (1 << g.n) - 1))
    b = extra | g.full if data.draw(st.booleans()) else extra
    run = standard_closure(g, b)
    if not run.complete:
        with pytest.raises(IncompleteRunError):
            chains(run)
        return
    cs = chains(run).chains
    assert len(cs) == popcount(b)
    assert sorted(v for c in cs for v in c) == list(range(g.n))
    assert all(_is_induced_path(g, mask_of(c)) for c in cs)
    rev = reversal(run)
    assert popcount(rev) == popcount(b) and is_forcing_set(g, rev)


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=9), st.data())
def test_forcing_trees_are_induced_trees(g, data):
    b = data.draw(st.integers(0, (1 << g.n) - 1)) | 1
    run = closure(g, b, Rule.PSD)
    if not run.complete:
        return
    forest = forcing_trees(run)
    assert len(forest.trees) == popcount(b)
    if not forest.anomaly:
        assert tree_count_check(forest, g)


def test_trace_rendering():
    text = standard_closure(fam.path(3), [0]).trace()
    assert text.splitlines()[0].startswith("round 1: 0 -> {1}")
