"""Graph corpora: exhaustive trees, seeded random families and theorem instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from . import families as fam
from .graph import Graph, bits, build_graph, vertex_sum


# ---------------------------------------------------------------- trees up to isomorphism


def tree_centers(g: Graph) -> list[int]:
    alive = g.full
    while bin(alive).count("1") > 2:
        leaves = [v for v in bits(alive) if bin(g.adj[v] & alive).count("1") <= 1]
        for v in leaves:
            alive &= ~(1 << v)
    return list(bits(alive))


def _rooted_code(g: Graph, root: int, parent: int) -> str:
    kids = sorted(_rooted_code(g, c, root) for c in bits(g.adj[root]) if c != parent)
    return "(" + "".join(kids) + ")"


def tree_canonical_form(g: Graph) -> str:
    """AHU encoding rooted at the centre (the smaller code for two centres)."""
    if g.n == 0:
        return ""
    return min(_rooted_code(g, c, -1) for c in tree_centers(g))


def trees_of_order(n: int) -> list[Graph]:
    """All non-isomorphic trees on ``n`` vertices, grown leaf by leaf."""
    if n < 1:
        return []
    level = {"()": fam.path(1)}
    for size in range(2, n + 1):
        nxt: dict[str, Graph] = {}
        for t in level.values():
            for v in range(t.n):
                g = build_graph(size, t.edges() + [(v, size - 1)])
                nxt.setdefault(tree_canonical_form(g), g)
        level = nxt
    return [level[k] for k in sorted(level)]


def trees_up_to(max_n: int) -> list[Graph]:
    return [t for n in range(1, max_n + 1) for t in trees_of_order(n)]


def pruefer_tree_classes(n: int) -> set[str]:
    """Canonical forms of all labelled trees on ``n`` vertices (oracle for small n)."""
    if n <= 2:
        return {tree_canonical_form(fam.path(n))} if n >= 1 else set()
    return {tree_canonical_form(fam.prufer_tree(seq)) for seq in product(range(n), repeat=n - 2)}


# ---------------------------------------------------------------- seeded corpora


def gnp_corpus(count: int, n_range: tuple[int, int], ps: tuple[float, ...], seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [fam.random_gnp(rng.randint(*n_range), rng.choice(ps), rng.randrange(2**32)) for _ in range(count)]


def connected_gnp_corpus(count: int, n_range: tuple[int, int], ps: tuple[float, ...], seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [fam.random_connected_gnp(rng.randint(*n_range), rng.choice(ps), rng.randrange(2**32))
            for _ in range(count)]


def block_cycle_corpus(count: int, max_n: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        sizes, n = [], 1
        while True:
            b = rng.choice((2, 3, 3, 4, 4, 5, 6))
            if n + b - 1 > max_n:
                break
            sizes.append(b)
            n += b - 1
            if rng.random() < 0.15:
                break
        if sizes:
            out.append(fam.random_block_cycle(sizes, rng.randrange(2**32)))
    return out


def outerplanar_corpus(count: int, n_range: tuple[int, int], seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [fam.random_outerplanar(rng.randint(*n_range), rng.randrange(2**32),
                                   keep_chord=rng.choice((0.3, 0.6, 1.0)))
            for _ in range(count)]


# ---------------------------------------------------------------- pairs and constructed instances


@dataclass(frozen=True)
class VertexSumInstance:
    g: Graph
    h: Graph
    v_g: int
    v_h: int

    @property
    def graph(self) -> Graph:
        return vertex_sum(self.g, self.h, self.v_g, self.v_h)


def vertex_sum_pairs(count: int, n_range: tuple[int, int], seed: int, connected: bool = True) -> list[VertexSumInstance]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        gs = []
        for _ in range(2):
            n = rng.randint(*n_range)
            p = rng.choice((0.25, 0.4, 0.6))
            s = rng.randrange(2**32)
            gs.append(fam.random_connected_gnp(n, p, s) if connected else fam.random_gnp(n, p, s))
        g, h = gs
        out.append(VertexSumInstance(g, h, rng.randrange(g.n), rng.randrange(h.n)))
    return out


def zp_equal_family(max_n: int, seed: int, count: int) -> list[Graph]:
    """Trees, cycles and block-cycle graphs (all satisfy Z = P)."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        kind = i % 3
        n = rng.randint(2, max_n)
        if kind == 0:
            out.append(fam.random_tree(n, rng.randrange(2**32)))
        elif kind == 1:
            out.append(fam.cycle(max(3, n)))
        else:
            out.append(block_cycle_corpus(1, max_n, rng.randrange(2**32))[0])
    return out


def cluster_instances(k: int) -> Iterator[tuple[int, Graph]]:
    """One cluster per |S| in 1..k+1, one new vertex per used subclique."""
    for s in range(1, k + 2):
        yield s, fam.ktree_cluster(k, list(range(s)))


def cluster_chain(k: int, t: int, extra: int = 3) -> Graph:
    """A k-tree holding ``t`` clusters with ``|S| >= 3`` in a chain.

    Cluster 1 is ``K_{k+1}`` with one vertex on each of ``extra`` subcliques.
    Each later cluster takes as its base the last added vertex ``x`` with its
    ``k`` neighbours and attaches ``extra`` new vertices to distinct
    ``k``-subcliques of that base, those containing ``x`` first.
    """
    if not 3 <= extra <= k + 1:
        raise ValueError("extra must lie in 3..k+1")
    adj: dict[int, set[int]] = {v: set(range(k + 1)) - {v} for v in range(k + 1)}

    def add(nbrs) -> int:
        v = len(adj)
        adj[v] = set(nbrs)
        for u in nbrs:
            adj[u].add(v)
        return v

    base = list(range(k + 1))
    last = None
    for c in range(t):
        if c == 0:
            subs = [[u for u in base if u != base[i]] for i in range(extra)]
        else:
            x = last
            others = [u for u in base if u != x]
            subs = [[x] + [u for u in others if u != o] for o in others] + [others]
            subs = subs[:extra]
        for sub in subs:
            last = add(sub)
        base = sorted(adj[last] | {last})
    edges = [(u, v) for u in adj for v in adj[u] if u < v]
    return build_graph(len(adj), edges)
