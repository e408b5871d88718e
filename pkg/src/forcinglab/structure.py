"""Structural predicates: blocks, connectivity, k-trees, clusters and small minors."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, bits, mask_of, popcount


# ---------------------------------------------------------------- distances and peeling


def bfs_distances(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    frontier, seen, d = 1 << s, 1 << s, 0
    while frontier:
        d += 1
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        nxt &= ~seen
        for u in bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return dist


def diameter(g: Graph) -> float:
    """Largest distance; ``math.inf`` for a disconnected graph, 0 for n <= 1."""
    if not g.is_connected():
        return math.inf
    return max((max(bfs_distances(g, v)) for v in range(g.n)), default=0)


def degeneracy(g: Graph) -> int:
    """Largest minimum degree over induced subgraphs, by min-degree peeling."""
    alive = g.full
    best = 0
    while alive:
        v = min(bits(alive), key=lambda u: popcount(g.adj[u] & alive))
        best = max(best, popcount(g.adj[v] & alive))
        alive &= ~(1 << v)
    return best


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in bits(g.adj[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """Reverse maximum cardinality search order if it is a perfect elimination order."""
    weight = [0] * g.n
    unnumbered = g.full
    order = []
    while unnumbered:
        v = max(bits(unnumbered), key=lambda u: (weight[u], -u))
        order.append(v)
        unnumbered &= ~(1 << v)
        for w in bits(g.adj[v] & unnumbered):
            weight[w] += 1
    peo = order[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in bits(g.adj[v]) if pos[u] > pos[v]]
        if later:
            p = min(later, key=pos.__getitem__)
            rest = mask_of(later) & ~(1 << p)
            if rest & ~g.adj[p]:
                return None
    return peo


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def is_clique(g: Graph, mask: int) -> bool:
    return all((g.adj[v] | 1 << v) & mask == mask for v in bits(mask))


# ---------------------------------------------------------------- blocks


def blocks_and_cut_vertices(g: Graph) -> tuple[list[int], int]:
    """Blocks as vertex bitmasks (an isolated vertex is its own block) and the cut-vertex mask."""
    index = [-1] * g.n
    low = [0] * g.n
    counter = 0
    blocks, cut = [], 0
    edge_stack: list[tuple[int, int]] = []

    for root in range(g.n):
        if index[root] >= 0:
            continue
        if not g.adj[root]:
            index[root] = counter
            counter += 1
            blocks.append(1 << root)
            continue
        index[root] = low[root] = counter
        counter += 1
        children = 0
        stack = [(root, -1, iter(bits(g.adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if index[w] < 0:
                    edge_stack.append((u, w))
                    index[w] = low[w] = counter
                    counter += 1
                    if u == root:
                        children += 1
                    stack.append((w, u, iter(bits(g.adj[w]))))
                    advanced = True
                    break
                if w != parent and index[w] < index[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], index[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= index[parent]:
                    if parent != root:
                        cut |= 1 << parent
                    comp = 0
                    while True:
                        a, b = edge_stack.pop()
                        comp |= 1 << a | 1 << b
                        if (a, b) == (parent, u):
                            break
                    blocks.append(comp)
        if children > 1:
            cut |= 1 << root
    return blocks, cut


def blocks(g: Graph) -> list[int]:
    return blocks_and_cut_vertices(g)[0]


def cut_vertices(g: Graph) -> int:
    return blocks_and_cut_vertices(g)[1]


def is_block_cycle(g: Graph) -> bool:
    """Every block is a vertex, an edge or a cycle."""
    for b in blocks(g):
        k = popcount(b)
        if k >= 3 and g.edge_count_within(b) != k:
            return False
    return True


# ---------------------------------------------------------------- vertex connectivity


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent)."""
    # vertex v split into v_in = 2v, v_out = 2v+1 with unit capacity
    cap: dict[tuple[int, int], int] = {}

    def add(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    big = g.n + 1
    for v in range(g.n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for w in bits(g.adj[v]):
            add(2 * v + 1, 2 * w, big)
    nbrs: dict[int, list[int]] = {}
    for a, b in cap:
        nbrs.setdefault(a, []).append(b)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {src: None}
        queue = [src]
        for a in queue:
            if a == snk:
                break
            for b in nbrs.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if snk not in prev:
            return flow
        b = snk
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); n-1 for complete graphs and 0 for disconnected graphs or n <= 1."""
    if g.n <= 1 or not g.is_connected():
        return 0
    best = g.n - 1
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, _local_connectivity(g, s, t))
    return best


# ---------------------------------------------------------------- k-trees and clusters


class NotKTreeError(ValueError):
    pass


def is_k_tree(g: Graph, k: int) -> bool:
    """Peel simplicial vertices of degree ``k`` until ``K_{k+1}`` remains."""
    if k < 0 or g.n < k + 1:
        return False
    if g.m != k * g.n - k * (k + 1) // 2:
        return False
    alive = g.full
    while popcount(alive) > k + 1:
        for v in bits(alive):
            nb = g.adj[v] & alive
            if popcount(nb) == k and is_clique(g, nb):
                alive &= ~(1 << v)
                break
        else:
            return False
    return is_clique(g, alive)


def k_tree_order(g: Graph) -> int | None:
    """The ``k`` for which ``g`` is a k-tree, or None."""
    if g.n == 0:
        return None
    k = g.min_degree()
    return k if is_k_tree(g, k) else None


@dataclass(frozen=True)
class ClusterInfo:
    k: int
    base: tuple[int, ...]
    # distinct k-subsets of the base used by outside vertices
    attachments: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.attachments)


def recognize_cluster(g: Graph, k: int) -> ClusterInfo | None:
    """Base clique and attachment family if ``g`` is a cluster k-tree, else None."""
    if not is_k_tree(g, k):
        raise NotKTreeError(f"graph is not a {k}-tree")
    from .solvers import maximal_cliques

    for base in sorted(maximal_cliques(g)):
        if popcount(base) != k + 1:
            continue
        used = set()
        for v in bits(g.full & ~base):
            nb = g.adj[v]
            if nb & ~base or popcount(nb) != k:
                break
            used.add(tuple(bits(nb)))
        else:
            return ClusterInfo(k, tuple(bits(base)), tuple(sorted(used)))
    return None


# ---------------------------------------------------------------- minors


MINOR_TARGETS = ("K1", "K2", "K3", "K4", "K5", "K6", "K2,3", "K3,3")


class MinorBudgetExceeded(RuntimeError):
    pass


def _adj_dict(g: Graph) -> dict[int, set[int]]:
    return {v: set(bits(g.adj[v])) for v in range(g.n)}


def has_k4_minor(g: Graph) -> bool:
    """Series-parallel reduction: strip vertices of degree <= 1, suppress degree 2."""
    adj = _adj_dict(g)
    work = list(adj)
    while work:
        v = work.pop()
        if v not in adj:
            continue
        d = len(adj[v])
        if d <= 1:
            for u in adj.pop(v):
                adj[u].discard(v)
                work.append(u)
        elif d == 2:
            a, b = adj.pop(v)
            adj[a].discard(v)
            adj[b].discard(v)
            adj[a].add(b)
            adj[b].add(a)
            work += [a, b]
    return bool(adj)


def _two_connected_outerplanar(g: Graph, block: int) -> bool:
    """Ear reduction for a 2-connected block with at least three vertices.

    A degree-2 vertex of an outerplanar block lies between its two neighbours
    on the outer cycle; removing it leaves uw on the outer face. Each edge can
    border at most two triangles, counting those of ears already removed.
    """
    adj = {v: set(bits(g.adj[v] & block)) for v in bits(block)}
    ears: dict[frozenset, int] = {}
    if sum(len(s) for s in adj.values()) // 2 > 2 * len(adj) - 3:
        return False
    while len(adj) > 2:
        v = next((u for u in sorted(adj) if len(adj[u]) == 2), None)
        if v is None:
            return False
        a, b = adj.pop(v)
        adj[a].discard(v)
        adj[b].discard(v)
        for e in (frozenset((a, v)), frozenset((b, v))):
            if ears.pop(e, 0) >= 2:
                return False
        e = frozenset((a, b))
        ears[e] = ears.get(e, 0) + 1
        if ears[e] > 2:
            return False
        adj[a].add(b)
        adj[b].add(a)
    return True


def is_outerplanar(g: Graph) -> bool:
    return not has_k4_minor(g) and not has_k23_minor(g)


def has_k23_minor(g: Graph) -> bool:
    """A 2-connected graph without a K_{2,3} minor is outerplanar or K_4."""
    for b in blocks(g):
        k = popcount(b)
        if k < 5:
            continue
        if not _two_connected_outerplanar(g, b):
            return True
    return False


def _target_graph(name: str) -> tuple[int, int, int]:
    """(vertices, edges, minimum degree) of a minor target."""
    if name.startswith("K") and "," not in name:
        t = int(name[1:])
        return t, t * (t - 1) // 2, t - 1
    p, q = map(int, name[1:].split(","))
    return p + q, p * q, min(p, q)


def _contains_subgraph(adj: dict[int, set[int]], name: str) -> bool:
    vs = sorted(adj)
    if "," not in name:
        t = int(name[1:])

        def grow(clique: list[int], cand: set[int]) -> bool:
            if len(clique) == t:
                return True
            for v in sorted(cand):
                if grow(clique + [v], {u for u in cand if u > v and u in adj[v]}):
                    return True
            return False

        return grow([], set(vs))
    p, q = map(int, name[1:].split(","))
    for xs in combinations(vs, p):
        common = set.intersection(*(adj[x] for x in xs))
        if len(common) >= q:
            return True
    return False


def _generic_minor(g: Graph, name: str, budget: int) -> bool:
    """Branch on each edge: contract it, or fix it as permanent.

    ``g`` has the minor iff some contraction of it contains the target as a
    subgraph, so deletions never need to be branched on.
    """
    h_n, h_m, h_delta = _target_graph(name)
    memo: set[tuple[frozenset, frozenset]] = set()
    calls = 0

    def edge(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def reduce(adj: dict[int, set[int]], fixed: set) -> None:
        # a vertex of degree < 2 never helps; one of degree 2 can be contracted
        changed = True
        while changed:
            changed = False
            for v in list(adj):
                d = len(adj[v])
                if d < 2 or (d == 2 and h_delta >= 3):
                    nb = adj.pop(v)
                    for u in nb:
                        adj[u].discard(v)
                        fixed.discard(edge(u, v))
                    if d == 2:
                        a, b = nb
                        adj[a].add(b)
                        adj[b].add(a)
                    changed = True

    def rec(adj: dict[int, set[int]], fixed: set) -> bool:
        nonlocal calls
        reduce(adj, fixed)
        m = sum(len(s) for s in adj.values()) // 2
        if len(adj) < h_n or m < h_m:
            return False
        if _contains_subgraph(adj, name):
            return True
        free = [edge(a, b) for a in adj for b in adj[a] if a < b and edge(a, b) not in fixed]
        if not free:
            return False
        k = (frozenset(edge(a, b) for a in adj for b in adj[a] if a < b), frozenset(fixed))
        if k in memo:
            return False
        memo.add(k)
        calls += 1
        if calls > 200_000:
            raise MinorBudgetExceeded(name)
        a, b = min(free, key=lambda e: (len(adj[e[0]]) + len(adj[e[1]]), e))
        # contract ab into a
        c = {v: set(s) for v, s in adj.items() if v != b}
        cf = {e for e in fixed if b not in e}
        for u in adj[b]:
            if u != a:
                c[u].discard(b)
                c[u].add(a)
                c[a].add(u)
                if edge(u, b) in fixed:
                    cf.add(edge(u, a))
        c[a].discard(b)
        if rec(c, cf):
            return True
        return rec({v: set(s) for v, s in adj.items()}, fixed | {(a, b)})

    return rec(_adj_dict(g), set())


def has_minor(g: Graph, target: str, budget: int = 16) -> bool:
    if target not in MINOR_TARGETS:
        raise ValueError(f"unsupported minor target {target!r}")
    if target == "K1":
        return g.n >= 1
    if target == "K2":
        return g.m >= 1
    if target == "K3":
        return g.m > g.n - len(g.components())
    if target == "K4":
        return has_k4_minor(g)
    if target == "K2,3":
        return has_k23_minor(g)
    if g.n > budget:
        raise MinorBudgetExceeded(f"{target}: n={g.n} exceeds budget {budget}")
    # the remaining targets are 2-connected, so one block must carry the minor
    return any(popcount(b) >= _target_graph(target)[0] and _generic_minor(g.induced(b), target, budget)
               for b in blocks(g))


# ---------------------------------------------------------------- summary


@dataclass
class StructureTags:
    n: int
    m: int
    connected: bool
    bipartite: bool
    chordal: bool
    tree: bool
    forest: bool
    unicyclic: bool
    block_cycle: bool
    outerplanar: bool
    k_tree: int | None
    components: list[tuple[int, ...]] = field(default_factory=list)
    blocks: list[tuple[int, ...]] = field(default_factory=list)
    cut_vertices: tuple[int, ...] = ()
    diameter: float = 0
    degeneracy: int = 0
    vertex_connectivity: int = 0
    min_degree: int = 0

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["diameter"] = None if d["diameter"] == math.inf else d["diameter"]
        d["components"] = [list(c) for c in self.components]
        d["blocks"] = [list(b) for b in self.blocks]
        d["cut_vertices"] = list(self.cut_vertices)
        return d


def analyze(g: Graph) -> StructureTags:
    """All structural tags. The empty graph is connected with diameter 0."""
    comps = g.components()
    bl, cut = blocks_and_cut_vertices(g)
    connected = len(comps) <= 1
    forest = g.m == g.n - len(comps)
    return StructureTags(
        n=g.n,
        m=g.m,
        connected=connected,
        bipartite=is_bipartite(g),
        chordal=is_chordal(g),
        tree=connected and g.n >= 1 and forest,
        forest=forest,
        unicyclic=connected and g.n >= 3 and g.m == g.n,
        block_cycle=is_block_cycle(g),
        outerplanar=is_outerplanar(g),
        k_tree=k_tree_order(g),
        components=[tuple(bits(c)) for c in comps],
        blocks=sorted(tuple(bits(b)) for b in bl),
        cut_vertices=tuple(bits(cut)),
        diameter=diameter(g),
        degeneracy=degeneracy(g),
        vertex_connectivity=vertex_connectivity(g),
        min_degree=g.min_degree(),
    )
