"""Immutable simple graphs with bitmask adjacency, edits and compositions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph construction or reference to a missing vertex/edge."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask. Python integers are
    unbounded, so graphs above 64 vertices work for I/O and structure; the
    solvers refuse them through their budgets.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def induced(self, vertices: Sequence[int] | int) -> Graph:
        """Induced subgraph, vertices renumbered in increasing order."""
        keep = list(bits(vertices)) if isinstance(vertices, int) else sorted(vertices)
        index = {v: i for i, v in enumerate(keep)}
        kmask = mask_of(keep)
        adj = tuple(mask_of(index[u] for u in bits(self.adj[v] & kmask)) for v in keep)
        return Graph(len(keep), adj)

    def edge_count_within(self, mask: int) -> int:
        return sum(popcount(self.adj[v] & mask) for v in bits(mask)) // 2

    def component_of(self, v: int, within: int | None = None) -> int:
        within = self.full if within is None else within
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & within & ~comp
            comp |= frontier
        return comp

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``within`` (bitmasks)."""
        rest = self.full if within is None else within
        out = []
        while rest:
            v = (rest & -rest).bit_length() - 1
            c = self.component_of(v, rest)
            out.append(c)
            rest &= ~c
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or self.component_of(0) == self.full

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = mask_of(perm[u] for u in bits(self.adj[v]))
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    if n < 0:
        raise GraphError("negative vertex count")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


# ---------------------------------------------------------------- edits


@dataclass(frozen=True)
class DeleteVertex:
    v: int


@dataclass(frozen=True)
class DeleteEdge:
    u: int
    v: int


@dataclass(frozen=True)
class ContractEdge:
    u: int
    v: int


@dataclass(frozen=True)
class SubdivideEdge:
    u: int
    v: int


EditOp = DeleteVertex | DeleteEdge | ContractEdge | SubdivideEdge


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph on {g.n} vertices")


def _check_edge(g: Graph, u: int, v: int) -> None:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not in graph")


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return g.induced(g.full & ~(1 << v))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    _check_edge(g, u, v)
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Merge ``u`` and ``v`` into the smaller index; the larger one is removed."""
    _check_edge(g, u, v)
    keep, drop = min(u, v), max(u, v)
    adj = list(g.adj)
    merged = (adj[keep] | adj[drop]) & ~(1 << keep) & ~(1 << drop)
    for w in bits(adj[drop]):
        adj[w] &= ~(1 << drop)
    for w in bits(merged):
        adj[w] |= 1 << keep
    adj[keep] = merged
    adj[drop] = 0
    return Graph(g.n, tuple(adj)).induced(g.full & ~(1 << drop))


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace ``uv`` by a path ``u w v`` with the new vertex ``w = n``."""
    _check_edge(g, u, v)
    edges = [e for e in g.edges() if set(e) != {u, v}]
    return build_graph(g.n + 1, edges + [(u, g.n), (g.n, v)])


def apply_edit(g: Graph, op: EditOp) -> Graph:
    if isinstance(op, DeleteVertex):
        return delete_vertex(g, op.v)
    if isinstance(op, DeleteEdge):
        return delete_edge(g, op.u, op.v)
    if isinstance(op, ContractEdge):
        return contract_edge(g, op.u, op.v)
    if isinstance(op, SubdivideEdge):
        return subdivide_edge(g, op.u, op.v)
    raise TypeError(f"unknown edit {op!r}")


# ---------------------------------------------------------------- compositions


@dataclass(frozen=True)
class DisjointUnion:
    pass


@dataclass(frozen=True)
class VertexSum:
    v_g: int
    v_h: int


@dataclass(frozen=True)
class EdgeSum:
    """Join ``v_g`` of the first graph to ``v_h`` of the second by a new edge."""

    v_g: int
    v_h: int


@dataclass(frozen=True)
class Join:
    pass


@dataclass(frozen=True)
class Coalescence:
    """Identify ``emb_g[i]`` with ``emb_h[i]`` for each vertex ``i`` of the shared subgraph."""

    emb_g: tuple[int, ...]
    emb_h: tuple[int, ...]


ComposeOp = DisjointUnion | VertexSum | EdgeSum | Join | Coalescence


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.adj + tuple(a << g.n for a in h.adj))


def _glue(g: Graph, h: Graph, pairs: Sequence[tuple[int, int]]) -> Graph:
    # vertices of h mapped onto g's for each (vg, vh) pair, the rest appended in order
    target = {vh: vg for vg, vh in pairs}
    index = {}
    nxt = g.n
    for w in range(h.n):
        if w in target:
            index[w] = target[w]
        else:
            index[w] = nxt
            nxt += 1
    edges = set(g.edges())
    for a, b in h.edges():
        x, y = index[a], index[b]
        edges.add((min(x, y), max(x, y)))
    return build_graph(nxt, sorted(edges))


def vertex_sum(g: Graph, h: Graph, v_g: int, v_h: int) -> Graph:
    """Identify ``v_g`` with ``v_h``: the merged vertex keeps index ``v_g``; the
    other vertices of ``h`` follow those of ``g`` in their original order."""
    _check_vertex(g, v_g)
    _check_vertex(h, v_h)
    return _glue(g, h, [(v_g, v_h)])


def edge_sum(g: Graph, h: Graph, v_g: int, v_h: int) -> Graph:
    _check_vertex(g, v_g)
    _check_vertex(h, v_h)
    u = disjoint_union(g, h)
    return build_graph(u.n, u.edges() + [(v_g, g.n + v_h)])


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    hmask = ((1 << h.n) - 1) << g.n
    adj = [a | hmask if v < g.n else a | g.full for v, a in enumerate(u.adj)]
    return Graph(u.n, tuple(adj))


def coalescence(g: Graph, h: Graph, emb_g: Sequence[int], emb_h: Sequence[int]) -> Graph:
    """Glue ``g`` and ``h`` along a common induced subgraph.

    ``emb_g`` and ``emb_h`` list the images of the shared subgraph's vertices;
    the two induced subgraphs must coincide under the pairing.
    """
    if len(emb_g) != len(emb_h):
        raise GraphError("embeddings of different sizes")
    if len(set(emb_g)) != len(emb_g) or len(set(emb_h)) != len(emb_h):
        raise GraphError("embedding is not injective")
    for v in emb_g:
        _check_vertex(g, v)
    for v in emb_h:
        _check_vertex(h, v)
    for i in range(len(emb_g)):
        for j in range(i + 1, len(emb_g)):
            if g.has_edge(emb_g[i], emb_g[j]) != h.has_edge(emb_h[i], emb_h[j]):
                raise GraphError("embedded subgraphs are not isomorphic under the pairing")
    return _glue(g, h, list(zip(emb_g, emb_h)))


def compose(g: Graph, h: Graph, op: ComposeOp) -> Graph:
    if isinstance(op, DisjointUnion):
        return disjoint_union(g, h)
    if isinstance(op, VertexSum):
        return vertex_sum(g, h, op.v_g, op.v_h)
    if isinstance(op, EdgeSum):
        return edge_sum(g, h, op.v_g, op.v_h)
    if isinstance(op, Join):
        return join(g, h)
    if isinstance(op, Coalescence):
        return coalescence(g, h, op.emb_g, op.emb_h)
    raise TypeError(f"unknown composition {op!r}")
