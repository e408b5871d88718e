"""Graph families and seeded random generators."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError, build_graph, disjoint_union, join


def path(n: int) -> Graph:
    _positive(n, "path")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _positive(n, "complete graph")
    return build_graph(n, combinations(range(n), 2))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError("part sizes must be positive")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` on ``n`` vertices, centre 0."""
    _positive(n, "star")
    return build_graph(n, [(0, i) for i in range(1, n)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to a cycle on the other ``n - 1`` vertices."""
    if n < 4:
        raise GraphError("a wheel needs at least 4 vertices")
    return join(complete(1), cycle(n - 1))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def generalized_corona(g: Graph, hs: Sequence[Graph | None]) -> Graph:
    """Join every vertex of ``hs[i]`` to vertex ``i`` of ``g``.

    Copies of the ``hs`` are appended after ``g`` in order; ``None`` or an
    empty graph attaches nothing.
    """
    if len(hs) != g.n:
        raise GraphError(f"need {g.n} attached graphs, got {len(hs)}")
    out = g
    edges = []
    for i, h in enumerate(hs):
        if h is None or h.n == 0:
            continue
        base = out.n
        out = disjoint_union(out, h)
        edges += [(i, base + j) for j in range(h.n)]
    return build_graph(out.n, out.edges() + edges)


def corona(g: Graph, h: Graph) -> Graph:
    return generalized_corona(g, [h] * g.n)


def ktree_cluster(k: int, attachments: Sequence[int | Sequence[int]]) -> Graph:
    """A cluster on base clique ``0..k``: one new vertex per attachment.

    Each attachment is a ``k``-subset of the base clique, or a single integer
    naming the base vertex the new vertex is *not* adjacent to.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    base = list(combinations(range(k + 1), 2))
    edges = list(base)
    n = k + 1
    for att in attachments:
        if isinstance(att, int):
            if not 0 <= att <= k:
                raise GraphError(f"missing vertex {att} outside the base clique")
            sub = [v for v in range(k + 1) if v != att]
        else:
            sub = sorted(set(att))
            if len(sub) != k or any(not 0 <= v <= k for v in sub):
                raise GraphError(f"attachment {att} is not a {k}-subset of the base clique")
        edges += [(v, n) for v in sub]
        n += 1
    return build_graph(n, edges)


def clique_chain(sizes: Sequence[int], overlaps: Sequence[int]) -> Graph:
    """Cliques ``K_{sizes[i]}`` in a line, consecutive ones sharing ``overlaps[i]`` vertices.

    Requires ``overlaps[i-1] + overlaps[i] <= sizes[i]`` so that no vertex lies in
    three cliques, and ``overlaps[i] < min(sizes[i], sizes[i+1])``.
    """
    if len(overlaps) != len(sizes) - 1:
        raise GraphError("need one overlap per consecutive pair of cliques")
    if any(s < 2 for s in sizes):
        raise GraphError("clique sizes must be at least 2")
    for i, k in enumerate(overlaps):
        if not 0 <= k < min(sizes[i], sizes[i + 1]):
            raise GraphError(f"overlap {k} between cliques {i} and {i + 1} is not proper")
    for i in range(1, len(sizes) - 1):
        if overlaps[i - 1] + overlaps[i] > sizes[i]:
            raise GraphError(f"clique {i} would share a vertex with both neighbours")
    cliques = []
    nxt = 0
    prev: list[int] = []
    for i, s in enumerate(sizes):
        shared = prev[len(prev) - overlaps[i - 1]:] if i else []
        fresh = list(range(nxt, nxt + s - len(shared)))
        nxt += len(fresh)
        members = shared + fresh
        cliques.append(members)
        prev = members
    edges = {(min(a, b), max(a, b)) for c in cliques for a, b in combinations(c, 2)}
    return build_graph(nxt, sorted(edges))


def p2_family(m: int, n: int, joined: int) -> Graph:
    """Paths ``P_m`` (vertices ``0..m-1``) and ``P_n`` with the first ``joined``
    vertices of the first path adjacent to every vertex of the second."""
    if not 1 <= m <= n:
        raise GraphError("need 1 <= m <= n")
    if not 0 <= joined <= m:
        raise GraphError("joined must lie in [0, m]")
    edges = [(i, i + 1) for i in range(m - 1)] + [(m + i, m + i + 1) for i in range(n - 1)]
    edges += [(i, m + j) for i in range(joined) for j in range(n)]
    return build_graph(m + n, edges)


# ---------------------------------------------------------------- random


def random_gnp(n: int, p: float, seed: int) -> Graph:
    _positive(n, "G(n,p)")
    if not 0.0 <= p <= 1.0:
        raise GraphError("p must lie in [0, 1]")
    rng = random.Random(seed)
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def prufer_tree(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return build_graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    _positive(n, "tree")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    return prufer_tree([rng.randrange(n) for _ in range(n - 2)])


def random_connected_gnp(n: int, p: float, seed: int, tries: int = 1000) -> Graph:
    """Rejection-sample a connected ``G(n, p)``; falls back to a random tree
    plus ``G(n, p)`` edges if no sample connects."""
    rng = random.Random(seed)
    for _ in range(tries):
        g = random_gnp(n, p, rng.randrange(2**32))
        if g.is_connected():
            return g
    t = random_tree(n, rng.randrange(2**32))
    extra = random_gnp(n, p, rng.randrange(2**32))
    return build_graph(n, set(t.edges()) | set(extra.edges()))


def random_outerplanar(n: int, seed: int, keep_chord: float = 0.5, keep_outer: float = 1.0) -> Graph:
    """Random triangulated polygon with chords kept with probability ``keep_chord``.

    Vertices are shuffled so the outer cycle is not ``0, 1, ..., n-1``.
    """
    _positive(n, "outerplanar graph")
    rng = random.Random(seed)
    if n <= 2:
        return path(n)
    outer = [(i, (i + 1) % n) for i in range(n)]
    chords = []
    stack = [list(range(n))]
    while stack:
        poly = stack.pop()
        if len(poly) <= 3:
            continue
        # split by a chord from a random vertex to a non-adjacent one
        i = rng.randrange(len(poly))
        j = (i + rng.randrange(2, len(poly) - 1)) % len(poly)
        a, b = sorted((i, j))
        chords.append((poly[a], poly[b]))
        stack.append(poly[a:b + 1])
        stack.append(poly[b:] + poly[:a + 1])
    edges = [e for e in outer if rng.random() < keep_outer] + [c for c in chords if rng.random() < keep_chord]
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_block_cycle(blocks: Sequence[int], seed: int) -> Graph:
    """Glue blocks one at a time at a random existing vertex.

    A block of size 2 is an edge, size ``s >= 3`` a cycle ``C_s``.
    """
    if not blocks or any(b < 2 for b in blocks):
        raise GraphError("block sizes must be at least 2")
    rng = random.Random(seed)
    edges = []
    n = 1
    for b in blocks:
        anchor = rng.randrange(n)
        ring = [anchor] + list(range(n, n + b - 1))
        n += b - 1
        if b == 2:
            edges.append((ring[0], ring[1]))
        else:
            edges += [(ring[i], ring[(i + 1) % b]) for i in range(b)]
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_ktree(k: int, n: int, seed: int) -> Graph:
    """Random ``k``-tree on ``n >= k + 1`` vertices."""
    if n < k + 1:
        raise GraphError("a k-tree has at least k + 1 vertices")
    rng = random.Random(seed)
    edges = list(combinations(range(k + 1), 2))
    cliques = [tuple(c) for c in combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        base = rng.choice(cliques)
        edges += [(u, v) for u in base]
        for drop in range(k):
            cliques.append(tuple(sorted(base[:drop] + base[drop + 1:] + (v,))))
    return build_graph(n, edges)


# ---------------------------------------------------------------- specs


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class CompleteMultipartite:
    parts: tuple[int, ...]


@dataclass(frozen=True)
class Star:
    n: int


@dataclass(frozen=True)
class Wheel:
    n: int


@dataclass(frozen=True)
class Corona:
    g: Graph
    h: Graph


@dataclass(frozen=True)
class GeneralizedCorona:
    g: Graph
    hs: tuple[Graph | None, ...]


@dataclass(frozen=True)
class KTreeCluster:
    k: int
    attachments: tuple


@dataclass(frozen=True)
class RandomGnp:
    n: int
    p: float
    seed: int


@dataclass(frozen=True)
class RandomTree:
    n: int
    seed: int


@dataclass(frozen=True)
class RandomOuterplanar:
    n: int
    seed: int


@dataclass(frozen=True)
class RandomBlockCycle:
    blocks: tuple[int, ...]
    seed: int


FamilySpec = (
    Path | Cycle | Complete | CompleteMultipartite | Star | Wheel | Corona | GeneralizedCorona
    | KTreeCluster | RandomGnp | RandomTree | RandomOuterplanar | RandomBlockCycle
)


def make_family(spec: FamilySpec) -> Graph:
    match spec:
        case Path(n):
            return path(n)
        case Cycle(n):
            return cycle(n)
        case Complete(n):
            return complete(n)
        case CompleteMultipartite(parts):
            return complete_multipartite(parts)
        case Star(n):
            return star(n)
        case Wheel(n):
            return wheel(n)
        case Corona(g, h):
            return corona(g, h)
        case GeneralizedCorona(g, hs):
            return generalized_corona(g, hs)
        case KTreeCluster(k, attachments):
            return ktree_cluster(k, attachments)
        case RandomGnp(n, p, seed):
            return random_gnp(n, p, seed)
        case RandomTree(n, seed):
            return random_tree(n, seed)
        case RandomOuterplanar(n, seed):
            return random_outerplanar(n, seed)
        case RandomBlockCycle(blocks, seed):
            return random_block_cycle(blocks, seed)
    raise TypeError(f"unknown family description {spec!r}")


_SIMPLE = {"path": path, "cycle": cycle, "complete": complete, "star": star, "wheel": wheel}


def parse_family(text: str) -> Graph:
    """Parse a short textual family description.

    Accepted forms: ``path 5``, ``P5``, ``C5``, ``K4``, ``K2,3``, ``K2,2,2``,
    ``star 4``, ``wheel 5``, ``petersen``, ``corona C5 K1``,
    ``cluster K S0 S1 ...`` (missing-vertex attachments), ``gnp N P SEED``,
    ``tree N SEED``, ``outerplanar N SEED``, ``blockcycle SEED B1 B2 ...``.
    """
    words = text.replace("(", " ").replace(")", " ").split()
    if not words:
        raise GraphError("empty family description")
    head, rest = words[0].lower(), words[1:]
    try:
        if head in _SIMPLE:
            return _SIMPLE[head](int(rest[0]))
        if head == "petersen":
            return petersen()
        if head == "corona":
            return corona(parse_family(rest[0]), parse_family(rest[1]))
        if head == "cluster":
            return ktree_cluster(int(rest[0]), [int(x) for x in rest[1:]])
        if head == "gnp":
            return random_gnp(int(rest[0]), float(rest[1]), int(rest[2]))
        if head == "tree":
            return random_tree(int(rest[0]), int(rest[1]))
        if head == "outerplanar":
            return random_outerplanar(int(rest[0]), int(rest[1]))
        if head == "blockcycle":
            return random_block_cycle([int(x) for x in rest[1:]], int(rest[0]))
        if not rest:
            tag, num = words[0][0].upper(), words[0][1:]
            if tag == "P":
                return path(int(num))
            if tag == "C":
                return cycle(int(num))
            if tag == "K" and "," in num:
                return complete_multipartite([int(x) for x in num.split(",")])
            if tag == "K":
                return complete(int(num))
    except (IndexError, ValueError) as exc:
        raise GraphError(f"cannot parse family {text!r}: {exc}") from exc
    raise GraphError(f"unknown family {text!r}")


def _positive(n: int, what: str) -> None:
    if n < 1:
        raise GraphError(f"{what} needs at least one vertex")
