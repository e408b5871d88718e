"""Brute-force reference implementations on networkx graphs.

Nothing here imports the package solvers; these are deliberately naive and
only meant for graphs with at most about eight vertices.
"""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx


def to_nx(n: int, edges) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def standard_closure(g: nx.Graph, black) -> set:
    black = set(black)
    changed = True
    while changed:
        changed = False
        for u in list(black):
            white = [w for w in g[u] if w not in black]
            if len(white) == 1:
                black.add(white[0])
                changed = True
    return black


def psd_closure(g: nx.Graph, black) -> set:
    black = set(black)
    changed = True
    while changed:
        changed = False
        comps = list(nx.connected_components(g.subgraph(set(g) - black)))
        for comp in comps:
            for u in list(black):
                white = [w for w in g[u] if w in comp]
                if len(white) == 1 and white[0] not in black:
                    black.add(white[0])
                    changed = True
    return black


def forcing_number(g: nx.Graph, psd: bool = False) -> int:
    close = psd_closure if psd else standard_closure
    nodes = sorted(g)
    for k in range(len(nodes) + 1):
        for s in combinations(nodes, k):
            if len(close(g, s)) == len(nodes):
                return k
    raise AssertionError


def _partitions(items: list):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k in range(len(rest) + 1):
        for others in combinations(rest, k):
            block = {first, *others}
            remaining = [x for x in rest if x not in block]
            for tail in _partitions(remaining):
                yield [block] + tail


def _is_path(g: nx.Graph, s: set) -> bool:
    h = g.subgraph(s)
    return nx.is_connected(h) and h.number_of_edges() == len(s) - 1 and max(d for _, d in h.degree()) <= 2


def _is_tree(g: nx.Graph, s: set) -> bool:
    return nx.is_tree(g.subgraph(s))


def cover_number(g: nx.Graph, kind: str = "path") -> int:
    ok = _is_path if kind == "path" else _is_tree
    best = len(g)
    for part in _partitions(sorted(g)):
        if len(part) < best and all(ok(g, b) for b in part):
            best = len(part)
    return best


def chromatic_number(g: nx.Graph) -> int:
    nodes = sorted(g)
    if not nodes:
        return 0
    for k in range(1, len(nodes) + 1):
        for col in product(range(k), repeat=len(nodes)):
            c = dict(zip(nodes, col))
            if all(c[u] != c[v] for u, v in g.edges()):
                return k
    raise AssertionError


def independence_number(g: nx.Graph) -> int:
    return max((len(c) for c in nx.find_cliques(nx.complement(g))), default=0)


def clique_cover_number(g: nx.Graph) -> int:
    """Fewest cliques covering every edge (choose among all cliques)."""
    edges = {frozenset(e) for e in g.edges()}
    if not edges:
        return 0
    cliques = [frozenset(c) for c in nx.enumerate_all_cliques(g) if len(c) >= 2]
    for k in range(1, len(edges) + 1):
        for choice in combinations(cliques, k):
            covered = {frozenset(p) for c in choice for p in combinations(sorted(c), 2)}
            if edges <= covered:
                return k
    raise AssertionError


def all_values(n: int, edges) -> dict:
    g = to_nx(n, edges)
    return {
        "Z": forcing_number(g),
        "Zplus": forcing_number(g, psd=True),
        "P": cover_number(g, "path"),
        "T": cover_number(g, "tree"),
        "Chi": chromatic_number(g),
        "Alpha": independence_number(g),
        "CC": clique_cover_number(g),
    }
