import networkx as nx
import numpy as np
from hypothesis import given

from forcinglab import corpus as corp
from forcinglab import families as fam
from forcinglab.solvers import Param, cached
from forcinglab.spectral import (EXAMPLE_TRIDIAGONAL, M_bounds, adjacency_spectrum, corner_entries,
                                 group_eigenvalues, inertia_alpha_upper, mr_bounds, tridiagonal_power_check)

from conftest import graphs
from oracles import to_nx


@given(graphs(min_n=1, max_n=9))
def test_spectrum_matches_networkx(g):
    want = np.sort(np.real(nx.adjacency_spectrum(to_nx(g.n, g.edges()))))
    got = [v for v, m in adjacency_spectrum(g).eigenvalues for _ in range(m)]
    assert np.allclose(got, want, atol=1e-7)


def test_grouping():
    grouped = group_eigenvalues([1.0, 1.0 + 1e-12, -2.0])
    assert [m for _, m in grouped] == [1, 2] and abs(grouped[1][0] - 1.0) < 1e-9
    pos, neg, zero = adjacency_spectrum(fam.complete_multipartite([2, 3])).inertia()
    assert (pos, neg, zero) == (1, 1, 3)


@given(graphs(max_n=8))
def test_spectral_bounds(g):
    assert inertia_alpha_upper(g) >= cached(g, Param.ALPHA).value
    b = mr_bounds(g)
    assert b.lo >= g.n - cached(g, Param.Z).value
    m = M_bounds(g)
    assert (m.lo, m.hi) == (g.n - b.hi, g.n - b.lo)


def test_known_minimum_ranks():
    for n in range(2, 9):
        assert (mr_bounds(fam.path(n)).lo, mr_bounds(fam.path(n)).hi) == (n - 1, n - 1)
        assert (mr_bounds(fam.complete(n)).lo, mr_bounds(fam.complete(n)).hi) == (1, 1)
    for n in range(3, 9):
        assert 3 <= n and n - 2 in mr_bounds(fam.cycle(n))
    for t in corp.trees_up_to(7):
        b = mr_bounds(t)
        assert b.exact and b.lo == t.n - cached(t, Param.P).value


def test_tridiagonal_corner_entries():
    entries = corner_entries(EXAMPLE_TRIDIAGONAL)
    assert entries[:3] == [0.0, 0.0, 0.0]
    assert abs(entries[3] - (-1 * 2 * 1)) < 1e-12
    assert tridiagonal_power_check(4, matrix=EXAMPLE_TRIDIAGONAL)
    assert all(tridiagonal_power_check(n, s) for n in range(1, 10) for s in range(10))
    broken = EXAMPLE_TRIDIAGONAL.copy()
    broken[0, 2] = 1.0
    assert not tridiagonal_power_check(4, matrix=broken)
