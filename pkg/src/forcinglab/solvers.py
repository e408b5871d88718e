"""Exact solvers for Z, Z+, P, T, chi, alpha and CC, each returning a witness.

Every solver refuses graphs above its configured size budget by raising
``BudgetExceeded``; nothing here falls back to an approximation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

from .forcing import Rule, psd_derived, standard_derived
from .graph import Graph, bits, complement, mask_of, popcount


class Param(enum.Enum):
    Z = "Z"
    ZPLUS = "Zplus"
    P = "P"
    T = "T"
    CHI = "Chi"
    ALPHA = "Alpha"
    CC = "CC"


@dataclass(frozen=True)
class Budgets:
    """Largest vertex count each solver accepts."""

    z: int = 24
    zplus: int = 24
    paths: int = 16
    trees: int = 14
    chi: int = 24
    alpha: int = 24
    cc: int = 16
    enumerate: int = 14
    minor: int = 16

    def __post_init__(self):
        for name, value in self.__dict__.items():
            if value <= 0 or value > 64:
                raise ValueError(f"budget {name}={value} must lie in 1..64")


DEFAULT_BUDGETS = Budgets()


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, n: int, budget: int):
        super().__init__(f"{what}: n={n} exceeds budget {budget}")
        self.what, self.n, self.budget = what, n, budget


def _check(what: str, g: Graph, budget: int) -> None:
    if g.n > budget:
        raise BudgetExceeded(what, g.n, budget)


@dataclass(frozen=True)
class CertifiedValue:
    parameter: Param
    value: int
    # forcing set / independent set: sorted vertex tuple
    # path or tree partition, clique cover: tuple of sorted vertex tuples
    # colouring: tuple colour[v]
    witness: tuple

    def to_json(self) -> dict:
        return {"parameter": self.parameter.value, "value": self.value, "witness": _jsonable(self.witness)}


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


# ---------------------------------------------------------------- forcing numbers


def _kernel(rule: Rule) -> Callable[[tuple[int, ...], int, int], int]:
    return standard_derived if rule is Rule.STANDARD else psd_derived


def _forcing_sets_of_size(g: Graph, k: int, rule: Rule, fixed: int = 0) -> Iterator[int]:
    kern = _kernel(rule)
    pool = [v for v in range(g.n) if not fixed >> v & 1]
    for combo in combinations(pool, k):
        b = fixed | mask_of(combo)
        if kern(g.adj, g.full, b) == g.full:
            yield b


def _forcing_number(g: Graph, rule: Rule) -> tuple[int, int]:
    for k in range(g.n + 1):
        for b in _forcing_sets_of_size(g, k, rule):
            return k, b
    raise AssertionError("the full vertex set always forces")


def zero_forcing_number(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> CertifiedValue:
    """Minimum standard forcing set, lexicographically smallest among minimum ones."""
    _check("Z", g, budgets.z)
    k, b = _forcing_number(g, Rule.STANDARD)
    return CertifiedValue(Param.Z, k, tuple(bits(b)))


def positive_zero_forcing_number(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> CertifiedValue:
    _check("Zplus", g, budgets.zplus)
    k, b = _forcing_number(g, Rule.PSD)
    return CertifiedValue(Param.ZPLUS, k, tuple(bits(b)))


def minimum_forcing_sets(g: Graph, rule: Rule = Rule.STANDARD, budgets: Budgets = DEFAULT_BUDGETS,
                         size: int | None = None) -> list[int]:
    """All minimum forcing sets as bitmasks, in lexicographic order."""
    _check("enumerate", g, budgets.enumerate)
    if size is None:
        size, _ = _forcing_number(g, rule)
    return list(_forcing_sets_of_size(g, size, rule))


def in_some_minimum_forcing_set(g: Graph, v: int, rule: Rule = Rule.STANDARD,
                                size: int | None = None) -> bool:
    if size is None:
        size, _ = _forcing_number(g, rule)
    if size == 0:
        return False
    return next(_forcing_sets_of_size(g, size - 1, rule, fixed=1 << v), None) is not None


# ---------------------------------------------------------------- partitions into induced paths / trees


def _is_induced_path(g: Graph, s: int) -> bool:
    k = popcount(s)
    if k == 0 or g.edge_count_within(s) != k - 1:
        return False
    if any(popcount(g.adj[v] & s) > 2 for v in bits(s)):
        return False
    return g.component_of((s & -s).bit_length() - 1, s) == s


def _is_induced_tree(g: Graph, s: int) -> bool:
    k = popcount(s)
    return k > 0 and g.edge_count_within(s) == k - 1 and g.component_of((s & -s).bit_length() - 1, s) == s


def induced_paths_through(g: Graph, v: int, within: int, endpoint: bool = False) -> set[int]:
    """Vertex sets of the induced paths of ``g[within]`` containing ``v``.

    With ``endpoint`` only paths having ``v`` as an end (including the
    one-vertex path) are returned.
    """
    out = set()

    def grow(end: int, other: int, s: int, phase: int):
        out.add(s)
        for w in bits(g.adj[end] & within & ~s):
            # w may touch only the vertex it extends from
            if g.adj[w] & s == 1 << end:
                grow(w, other, s | 1 << w, phase)
        if phase == 0 and not endpoint and s != 1 << v:
            # switch to growing the other arm from v
            for w in bits(g.adj[v] & within & ~s):
                if g.adj[w] & s == 1 << v:
                    grow(w, end, s | 1 << w, 1)

    grow(v, v, 1 << v, 0)
    return out


def induced_trees_through(g: Graph, v: int, within: int) -> list[int]:
    """Vertex sets of the induced subtrees of ``g[within]`` containing ``v``."""
    out = []

    def rec(s: int, banned: int):
        frontier = 0
        for u in bits(s):
            frontier |= g.adj[u]
        frontier &= within & ~s & ~banned
        # vertices with two neighbours in s can never join
        cand = 0
        for w in bits(frontier):
            if popcount(g.adj[w] & s) == 1:
                cand |= 1 << w
        if not cand:
            out.append(s)
            return
        w = (cand & -cand).bit_length() - 1
        rec(s | 1 << w, banned)
        rec(s, banned | 1 << w)

    rec(1 << v, 0)
    return out


class _PartitionSolver:
    """Minimum partition of a vertex set into induced paths or trees."""

    def __init__(self, g: Graph, kind: str):
        self.g = g
        self.kind = kind
        self.whole = _is_induced_path if kind == "path" else _is_induced_tree
        self.memo: dict[int, int] = {}
        self.parts_memo: dict[tuple[int, int], list[int]] = {}

    def parts(self, v: int, comp: int) -> list[int]:
        key = (v, comp)
        if key not in self.parts_memo:
            if self.kind == "path":
                ps = induced_paths_through(self.g, v, comp)
            else:
                ps = induced_trees_through(self.g, v, comp)
            self.parts_memo[key] = sorted(ps, key=lambda s: (-popcount(s), s))
        return self.parts_memo[key]

    def value(self, r: int) -> int:
        if not r:
            return 0
        if r in self.memo:
            return self.memo[r]
        comps = self.g.components(r)
        if len(comps) > 1:
            val = sum(self.value(c) for c in comps)
        elif self.whole(self.g, r):
            val = 1
        else:
            v = (r & -r).bit_length() - 1
            val = popcount(r)
            for s in self.parts(v, r):
                if val <= 2:
                    break  # a non-path / non-tree component needs at least two parts
                val = min(val, 1 + self.value(r & ~s))
        self.memo[r] = val
        return val

    def witness(self, r: int) -> list[int]:
        out = []
        for c in self.g.components(r):
            if self.whole(self.g, c):
                out.append(c)
                continue
            target = self.value(c)
            v = (c & -c).bit_length() - 1
            for s in self.parts(v, c):
                if 1 + self.value(c & ~s) == target:
                    out.append(s)
                    out.extend(self.witness(c & ~s))
                    break
            else:
                raise AssertionError("memo inconsistent")
        return out

    def all_minimum(self, r: int) -> list[list[int]]:
        """Every minimum partition of ``r`` (parts as bitmasks, lowest vertex first)."""
        if not r:
            return [[]]
        target = self.value(r)
        v = (r & -r).bit_length() - 1
        comp = self.g.component_of(v, r)
        cand = induced_paths_through(self.g, v, comp) if self.kind == "path" else induced_trees_through(self.g, v, comp)
        out = []
        for s in sorted(cand):
            rest = r & ~s
            if 1 + self.value(rest) == target:
                out.extend([s] + tail for tail in self.all_minimum(rest))
        return out


def _partition_value(g: Graph, kind: str, param: Param) -> CertifiedValue:
    solver = _PartitionSolver(g, kind)
    val = solver.value(g.full)
    parts = sorted(tuple(bits(s)) for s in solver.witness(g.full))
    return CertifiedValue(param, val, tuple(parts))


def path_cover_number(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> CertifiedValue:
    _check("P", g, budgets.paths)
    return _partition_value(g, "path", Param.P)


def tree_cover_number(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> CertifiedValue:
    _check("T", g, budgets.trees)
    return _partition_value(g, "tree", Param.T)


def minimum_path_covers(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> list[list[int]]:
    _check("enumerate", g, budgets.enumerate)
    return _PartitionSolver(g, "path").all_minimum(g.full)


def minimum_tree_covers(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> list[list[int]]:
    _check("enumerate", g, budgets.enumerate)
    return _PartitionSolver(g, "tree").all_minimum(g.full)


def singleton_in_some_minimum_path_cover(g: Graph, v: int) -> bool:
    solver = _PartitionSolver(g, "path")
    return 1 + solver.value(g.full & ~(1 << v)) == solver.value(g.full)


def endpoint_in_some_minimum_path_cover(g: Graph, v: int) -> bool:
    """Some minimum path cover has ``v`` as an end of its path (a lone ``v`` counts)."""
    solver = _PartitionSolver(g, "path")
    target = solver.value(g.full)
    comp = g.component_of(v)
    rest = solver.value(g.full & ~comp)
    for s in induced_paths_through(g, v, comp, endpoint=True):
        if rest + 1 + solver.value(comp & ~s) == target:
            return True
    return False


# ---------------------------------------------------------------- colouring, cliques


def maximal_cliques(g: Graph, within: int | None = None) -> list[int]:
    """Bron-Kerbosch with pivoting over bitmasks."""
    out = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pu = p | x
        pivot = max(bits(pu), key=lambda u: popcount(g.adj[u] & p))
        for v in bits(p & ~g.adj[pivot]):
            bk(r | 1 << v, p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    start = g.full if within is None else within
    if start:
        bk(0, start, 0)
    return out


def _max_clique(g: Graph) -> int:
    best = 0

    def expand(r: int, p: int):
        nonlocal best
        if not p:
            if popcount(r) > popcount(best):
                best = r
            return
        # greedy colouring bound
        order, colour = [], []
        rest, c = p, 0
        while rest:
            c += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                colour.append(c)
                rest &= ~low
                avail &= ~low & ~g.adj[v]
        for v, c in zip(reversed(order), reversed(colour)):
            if popcount(r) + c <= popcount(best):
                return
            expand(r | 1 << v, p & g.adj[v])
            p &= ~(1 << v)

    expand(0, g.full)
    return best


def independence_number(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> CertifiedValue:
    _check("Alpha", g, budgets.alpha)
    s = _max_clique(complement(g))
    return CertifiedValue(Param.ALPHA, popcount(s), tuple(bits(s)))


def clique_number(g: Graph) -> int:
    return popcount(_max_clique(g))


def chromatic_number(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> CertifiedValue:
    """DSATUR branch and bound seeded with the greedy DSATUR colouring."""
    _check("Chi", g, budgets.chi)
    n = g.n
    if n == 0:
        return CertifiedValue(Param.CHI, 0, ())
    lower = clique_number(g)
    best_col = _dsatur_greedy(g)
    best = max(best_col) + 1
    colour = [-1] * n

    def pick() -> int:
        bestv, key = -1, None
        for v in range(n):
            if colour[v] >= 0:
                continue
            sat = len({colour[u] for u in bits(g.adj[v]) if colour[u] >= 0})
            k = (sat, popcount(g.adj[v]), -v)
            if key is None or k > key:
                bestv, key = v, k
        return bestv

    def rec(done: int, used: int):
        nonlocal best, best_col
        if best == lower:
            return
        if done == n:
            if used < best:
                best, best_col = used, list(colour)
            return
        v = pick()
        forbidden = {colour[u] for u in bits(g.adj[v]) if colour[u] >= 0}
        for c in range(min(used + 1, best - 1)):
            if c in forbidden:
                continue
            colour[v] = c
            rec(done + 1, max(used, c + 1))
            colour[v] = -1

    if best > lower:
        rec(0, 0)
    return CertifiedValue(Param.CHI, best, tuple(best_col))


def _dsatur_greedy(g: Graph) -> list[int]:
    colour = [-1] * g.n
    for _ in range(g.n):
        v = max((u for u in range(g.n) if colour[u] < 0),
                key=lambda u: (len({colour[w] for w in bits(g.adj[u]) if colour[w] >= 0}), popcount(g.adj[u]), -u))
        taken = {colour[w] for w in bits(g.adj[v])}
        colour[v] = next(c for c in range(g.n) if c not in taken)
    return colour


def clique_cover_number(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> CertifiedValue:
    """Fewest cliques covering every edge; an edgeless graph needs none."""
    _check("CC", g, budgets.cc)
    edges = g.edges()
    if not edges:
        return CertifiedValue(Param.CC, 0, ())
    cliques = [c for c in maximal_cliques(g) if popcount(c) >= 2]
    index = {e: i for i, e in enumerate(edges)}

    def edge_mask(c: int) -> int:
        m = 0
        vs = list(bits(c))
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                m |= 1 << index[(a, b)]
        return m

    cover = [edge_mask(c) for c in cliques]
    all_edges = (1 << len(edges)) - 1
    by_edge = [[i for i, cm in enumerate(cover) if cm >> e & 1] for e in range(len(edges))]
    biggest = max(popcount(cm) for cm in cover)

    def search(left: int, depth: int, chosen: list[int]) -> list[int] | None:
        if not left:
            return chosen
        if depth == 0 or -(-popcount(left) // biggest) > depth:
            return None
        e = (left & -left).bit_length() - 1
        for i in sorted(by_edge[e], key=lambda i: -popcount(cover[i] & left)):
            got = search(left & ~cover[i], depth - 1, chosen + [i])
            if got is not None:
                return got
        return None

    k = 1
    while True:
        got = search(all_edges, k, [])
        if got is not None:
            parts = sorted(tuple(bits(cliques[i])) for i in got)
            return CertifiedValue(Param.CC, k, tuple(parts))
        k += 1


# ---------------------------------------------------------------- witness verification


def verify(g: Graph, cv: CertifiedValue) -> bool:
    """Re-check a witness independently of the search that produced it."""
    w = cv.witness
    if cv.parameter in (Param.Z, Param.ZPLUS):
        kern = standard_derived if cv.parameter is Param.Z else psd_derived
        return len(w) == cv.value and kern(g.adj, g.full, mask_of(w)) == g.full
    if cv.parameter in (Param.P, Param.T):
        pred = _is_induced_path if cv.parameter is Param.P else _is_induced_tree
        masks = [mask_of(p) for p in w]
        covered = 0
        for m in masks:
            if covered & m or not pred(g, m):
                return False
            covered |= m
        return covered == g.full and len(masks) == cv.value
    if cv.parameter is Param.CHI:
        if len(w) != g.n:
            return False
        if any(w[u] == w[v] for u, v in g.edges()):
            return False
        return all(0 <= c < cv.value for c in w)
    if cv.parameter is Param.ALPHA:
        m = mask_of(w)
        return len(w) == cv.value and all(not g.adj[v] & m for v in w)
    if cv.parameter is Param.CC:
        covered = set()
        for c in w:
            m = mask_of(c)
            if any((g.adj[v] | 1 << v) & m != m for v in c):
                return False
            covered |= {(a, b) for i, a in enumerate(c) for b in c[i + 1:]}
        return covered == set(g.edges()) and len(w) == cv.value
    raise ValueError(cv.parameter)


SOLVERS: dict[Param, Callable[..., CertifiedValue]] = {
    Param.Z: zero_forcing_number,
    Param.ZPLUS: positive_zero_forcing_number,
    Param.P: path_cover_number,
    Param.T: tree_cover_number,
    Param.CHI: chromatic_number,
    Param.ALPHA: independence_number,
    Param.CC: clique_cover_number,
}


def solve(g: Graph, param: Param, budgets: Budgets = DEFAULT_BUDGETS) -> CertifiedValue:
    return SOLVERS[param](g, budgets)


@lru_cache(maxsize=4096)
def cached(g: Graph, param: Param, budgets: Budgets = DEFAULT_BUDGETS) -> CertifiedValue:
    """Memoized ``solve``; graphs are hashable values."""
    return solve(g, param, budgets)
