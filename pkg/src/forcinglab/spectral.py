"""Adjacency spectra, the inertia bound and certified minimum-rank intervals."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .graph import Graph
from .solvers import (DEFAULT_BUDGETS, BudgetExceeded, Budgets, clique_cover_number,
                      path_cover_number, zero_forcing_number)
from .structure import blocks_and_cut_vertices, diameter

GROUP_TOL = 1e-6


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


@dataclass(frozen=True)
class SpectrumSummary:
    # (eigenvalue, multiplicity), increasing
    eigenvalues: tuple[tuple[float, int], ...]
    tol: float

    @property
    def max_multiplicity(self) -> int:
        return max((m for _, m in self.eigenvalues), default=0)

    def inertia(self) -> tuple[int, int, int]:
        """(positive, negative, zero) eigenvalue counts."""
        pos = sum(m for v, m in self.eigenvalues if v > self.tol)
        neg = sum(m for v, m in self.eigenvalues if v < -self.tol)
        zero = sum(m for v, m in self.eigenvalues) - pos - neg
        return pos, neg, zero

    def to_json(self) -> dict:
        return {"eigenvalues": [[round(v, 10), m] for v, m in self.eigenvalues], "tol": self.tol}


def group_eigenvalues(values, tol: float = GROUP_TOL) -> tuple[tuple[float, int], ...]:
    out: list[list[float]] = []
    for x in sorted(values):
        if out and x - out[-1][-1] <= tol:
            out[-1].append(x)
        else:
            out.append([x])
    return tuple((float(np.mean(c)), len(c)) for c in out)


def adjacency_spectrum(g: Graph, tol: float = GROUP_TOL) -> SpectrumSummary:
    if g.n == 0:
        return SpectrumSummary((), tol)
    vals = np.linalg.eigvalsh(adjacency_matrix(g))
    return SpectrumSummary(group_eigenvalues(vals, tol), tol)


def inertia_alpha_upper(g: Graph) -> int:
    """n - max(i+, i-) for the adjacency matrix; bounds the independence number from above."""
    pos, neg, _ = adjacency_spectrum(g).inertia()
    return g.n - max(pos, neg)


def nullity_lower_bound_M(g: Graph) -> int:
    """Largest eigenvalue multiplicity of A(G): A - lambda I has the pattern of G."""
    return adjacency_spectrum(g).max_multiplicity


# ---------------------------------------------------------------- intervals


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int
    # (bound name, side "lo"/"hi", value)
    provenance: tuple[tuple[str, str, int], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}] from {self.provenance}")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "provenance": [list(p) for p in self.provenance]}


def _is_path_graph(g: Graph) -> bool:
    return g.n >= 1 and g.is_connected() and g.m == g.n - 1 and all(d <= 2 for d in g.degrees())


def _is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and all(d == 2 for d in g.degrees())


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


@lru_cache(maxsize=8192)
def _connected_mr(g: Graph, budgets: Budgets, exact_cases: bool) -> Interval:
    n = g.n
    if n == 1:
        return Interval(0, 0, (("single vertex", "lo", 0), ("single vertex", "hi", 0)))
    lo = [("has an edge", "lo", 1), ("diameter", "lo", int(diameter(g)))]
    hi = [("n-1", "hi", n - 1)]
    try:
        lo.append(("n-Z", "lo", n - zero_forcing_number(g, budgets).value))
    except BudgetExceeded:
        pass
    try:
        hi.append(("CC", "hi", clique_cover_number(g, budgets).value))
    except BudgetExceeded:
        pass
    hi.append(("n-max eigenvalue multiplicity", "hi", n - nullity_lower_bound_M(g)))
    if exact_cases:
        exact = None
        if _is_path_graph(g):
            exact = ("path", n - 1)
        elif _is_complete(g):
            exact = ("complete", 1)
        elif _is_cycle_graph(g):
            exact = ("cycle", n - 2)
        elif g.m == n - 1:
            try:
                exact = ("tree n-P", n - path_cover_number(g, budgets).value)
            except BudgetExceeded:
                pass
        if exact is not None:
            lo.append((exact[0], "lo", exact[1]))
            hi.append((exact[0], "hi", exact[1]))
    cut = blocks_and_cut_vertices(g)[1]
    if cut:
        v = (cut & -cut).bit_length() - 1
        lo_v, hi_v, name = _cut_vertex_reduction(g, v, budgets, exact_cases)
        lo.append((name, "lo", lo_v))
        hi.append((name, "hi", hi_v))
    a = max(x for _, _, x in lo)
    b = min(x for _, _, x in hi)
    return Interval(a, b, tuple(lo + hi))


def _cut_vertex_reduction(g: Graph, v: int, budgets: Budgets, exact_cases: bool) -> tuple[int, int, str]:
    """Interval form of mr(G) = sum mr(G_i - v) + min(sum r_v(G_i), 2)."""
    rest = g.full & ~(1 << v)
    base_lo = base_hi = 0
    r_lo = r_hi = 0
    for w in g.components(rest):
        gi = g.induced(w | 1 << v)
        gi_minus = g.induced(w)
        a = mr_bounds(gi, budgets, exact_cases)
        c = mr_bounds(gi_minus, budgets, exact_cases)
        base_lo += c.lo
        base_hi += c.hi
        r_lo += max(0, a.lo - c.hi)
        r_hi += min(2, a.hi - c.lo)
    return base_lo + min(r_lo, 2), base_hi + min(r_hi, 2), f"cut-vertex reduction at {v}"


def mr_bounds(g: Graph, budgets: Budgets = DEFAULT_BUDGETS, exact_cases: bool = True) -> Interval:
    """Certified interval for the minimum rank; components add."""
    if g.n == 0:
        return Interval(0, 0, (("empty", "lo", 0), ("empty", "hi", 0)))
    comps = g.components()
    if len(comps) == 1:
        return _connected_mr(g, budgets, exact_cases)
    parts = [_connected_mr(g.induced(c), budgets, exact_cases) for c in comps]
    lo = sum(p.lo for p in parts)
    hi = sum(p.hi for p in parts)
    return Interval(lo, hi, (("sum over components", "lo", lo), ("sum over components", "hi", hi)))


def M_bounds(g: Graph, budgets: Budgets = DEFAULT_BUDGETS, exact_cases: bool = True) -> Interval:
    """Maximum nullity interval from ``mr + M = n``."""
    mr = mr_bounds(g, budgets, exact_cases)
    return Interval(g.n - mr.hi, g.n - mr.lo, (("n - mr", "lo", g.n - mr.hi), ("n - mr", "hi", g.n - mr.lo)))


# ---------------------------------------------------------------- tridiagonal powers


EXAMPLE_TRIDIAGONAL = np.array([[4.0, -1, 0, 0], [-1, 3, 2, 0], [0, 2, 1, 1], [0, 0, 1, -5]])


def random_tridiagonal(n: int, seed: int) -> np.ndarray:
    rng = random.Random(seed)

    def off() -> float:
        return rng.choice((-1, 1)) * rng.uniform(0.5, 2.0)

    a = np.zeros((n, n))
    for i in range(n):
        a[i, i] = rng.uniform(-2.0, 2.0)
    for i in range(n - 1):
        a[i, i + 1] = off()
        a[i + 1, i] = off()
    return a


def corner_entries(a: np.ndarray) -> list[float]:
    """(A^r)_{1,n} for r = 0..n-1."""
    n = a.shape[0]
    out, p = [], np.eye(n)
    for _ in range(n):
        out.append(float(p[0, n - 1]))
        p = p @ a
    return out


def tridiagonal_power_check(n: int, seed: int = 0, matrix: np.ndarray | None = None) -> bool:
    """The (1,n) entry of A^r vanishes for r <= n-2 and not for r = n-1."""
    a = random_tridiagonal(n, seed) if matrix is None else np.asarray(matrix, dtype=float)
    n = a.shape[0]
    if n == 1:
        return True
    entries = corner_entries(a)
    scale = max(1.0, float(np.abs(a).max())) ** (n - 1)
    zero = all(abs(x) <= 1e-9 * scale for x in entries[:-1])
    return zero and abs(entries[-1]) > 1e-9 * scale
