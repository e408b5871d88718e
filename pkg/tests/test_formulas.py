import pytest
from hypothesis import given
from hypothesis import strategies as st

from forcinglab import families as fam
from forcinglab.formulas import (FormulaId, HypothesisError, Kind, PredictedValue, clique_chain_zm,
                                 cluster_zplus_t, coalescence_kn, corona_corollary_values, join_z, multipartite_z,
                                 p2_bound, predict, vertex_sum_p, vertex_sum_z)
from forcinglab.graph import join, vertex_sum
from forcinglab.solvers import Param, cached


def val(g, p):
    return cached(g, p).value


@given(st.lists(st.integers(1, 4), min_size=2, max_size=4).filter(lambda ps: max(ps) > 1 and sum(ps) <= 10))
def test_multipartite_matches_solver(parts):
    assert multipartite_z(parts)["Z"] == val(fam.complete_multipartite(parts), Param.Z)


def test_multipartite_hypotheses():
    with pytest.raises(HypothesisError):
        multipartite_z([1, 1, 1])
    with pytest.raises(HypothesisError):
        multipartite_z([5])


def test_join_on_named_pairs():
    for g, h in ((fam.path(3), fam.cycle(4)), (fam.complete(3), fam.path(4)), (fam.star(4), fam.cycle(5))):
        pred = join_z(g.n, val(g, Param.Z), h.n, val(h, Param.Z))
        assert pred["Z"] == val(join(g, h), Param.Z)
    with pytest.raises(HypothesisError):
        join_z(2, 2, 3, 1, connected_g=False)


def test_vertex_sum_cases():
    # paths glued at endpoints give a longer path
    assert vertex_sum_z(1, 1, True, True)["Z"] == val(vertex_sum(fam.path(3), fam.path(4), 0, 0), Param.Z)
    assert vertex_sum_z(2, 2, False, False).case == "neither"
    pred = vertex_sum_p(1, 1, False, True, False, True)
    assert pred.case == "endpoints-both"
    assert pred["P"] == val(vertex_sum(fam.path(3), fam.path(4), 0, 0), Param.P)
    assert vertex_sum_p(2, 2, True, True, False, False).case == "singleton-G"
    with pytest.raises(HypothesisError):
        vertex_sum_p(1, 1, True, False, False, False)


def test_clique_chain_matches_solver():
    for sizes, overlaps in (([3, 3], [1]), ([4, 5, 3], [2, 1]), ([3, 4, 4, 3], [1, 2, 1])):
        pred = clique_chain_zm(sizes, overlaps)
        g = fam.clique_chain(sizes, overlaps)
        assert pred["Z"] == val(g, Param.Z)
        assert pred["CC"] == val(g, Param.CC)
    with pytest.raises(HypothesisError):
        clique_chain_zm([3, 3], [3])


def test_corona_corollary_on_small_cases():
    # K_3 with a P_3 on one vertex and a K_3 on another
    g = fam.generalized_corona(fam.complete(3), [fam.path(3), fam.complete(3), None])
    pred = corona_corollary_values("K", 3, [3], [3])
    assert pred["Z"] == val(g, Param.Z) and pred["CC"] == val(g, Param.CC)
    with pytest.raises(HypothesisError):
        corona_corollary_values("C", 3, [], [])


def test_cluster_and_coalescence():
    assert cluster_zplus_t(3, 4).values == {"Zplus": (4, 4)}
    assert cluster_zplus_t(2, 3)["T"] == 3
    assert coalescence_kn(3, 1)["T"] == 5
    with pytest.raises(HypothesisError):
        coalescence_kn(2, 3)


def test_interval_predictions():
    bound = p2_bound(3, 5)
    assert bound.kind is Kind.INTERVAL and bound.admits("Z", 2) and not bound.admits("Z", 5)
    with pytest.raises(KeyError):
        bound["Z"]
    with pytest.raises(ValueError):
        PredictedValue(FormulaId.P2Bound, Kind.INTERVAL, {"Z": (3, 2)})


def test_dispatch():
    assert predict(FormulaId.TreeAll, n=6, p=2)["mr"] == 4
    assert predict(FormulaId.OddKTreeT, k=5)["T"] == 3
