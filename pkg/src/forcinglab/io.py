"""graph6 and edge-list text formats."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, GraphError, build_graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


class Graph6SizeError(Graph6Error):
    """The size header is malformed or out of range."""


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    # upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


MAX_ORDER = 68719476735


def _size_header(n: int) -> list[str]:
    if n <= 62:
        return [chr(n + 63)]
    if n <= 258047:
        return [chr(126)] + [chr((n >> s & 63) + 63) for s in (12, 6, 0)]
    if n <= MAX_ORDER:
        return [chr(126), chr(126)] + [chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0)]
    raise Graph6SizeError(f"n={n} exceeds the graph6 limit")


def graph6_encode(g: Graph) -> str:
    bitlist = [1 if g.has_edge(i, j) else 0 for i, j in _pairs(g.n)]
    bitlist += [0] * (-len(bitlist) % 6)
    out = _size_header(g.n)
    for k in range(0, len(bitlist), 6):
        val = 0
        for b in bitlist[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line")
    codes = [ord(c) for c in line]
    bad = [c for c in codes if not 63 <= c <= 126]
    if bad:
        raise Graph6Error(f"byte {bad[0]} outside the graph6 range 63..126")
    if codes[0] != 126:
        n, payload = codes[0] - 63, codes[1:]
    else:
        wide = len(codes) > 1 and codes[1] == 126
        start, width = (2, 6) if wide else (1, 3)
        head = codes[start:start + width]
        if len(head) < width:
            raise Graph6SizeError("truncated size header")
        n = 0
        for c in head:
            n = n << 6 | (c - 63)
        if n <= (258047 if wide else 62):
            raise Graph6SizeError(f"size {n} is not in canonical form for this header")
        payload = codes[start + width:]
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: {len(payload)} bytes, need {need}")
    if len(payload) > need:
        raise Graph6Error(f"trailing bytes: {len(payload)} bytes, need {need}")
    edges = []
    for k, (i, j) in enumerate(_pairs(n)):
        if (payload[k // 6] - 63) >> (5 - k % 6) & 1:
            edges.append((i, j))
    return build_graph(n, edges)


def edgelist_encode(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def edgelist_decode(text: str) -> Graph:
    """Parse ``"n m"`` then ``m`` lines ``"u v"``; blank lines and ``#`` comments ignored."""
    return next(iter_edgelists(text.splitlines()))


def iter_edgelists(lines: Iterable[str]) -> Iterator[Graph]:
    """Yield graphs from consecutive edge-list records."""
    rows = [ln.split("#", 1)[0].split() for ln in lines]
    rows = [r for r in rows if r]
    i = 0
    if not rows:
        raise GraphError("no edge-list record")
    while i < len(rows):
        head = rows[i]
        if len(head) != 2:
            raise GraphError(f"bad header {' '.join(head)!r}")
        n, m = int(head[0]), int(head[1])
        body = rows[i + 1:i + 1 + m]
        if len(body) < m:
            raise GraphError(f"expected {m} edges, found {len(body)}")
        yield build_graph(n, [(int(a), int(b)) for a, b in body])
        i += 1 + m


@dataclass
class CorpusError:
    line: int
    text: str
    message: str


def read_graph6_lines(lines: Iterable[str]) -> tuple[list[Graph], list[CorpusError]]:
    """Decode a graph6 corpus, collecting malformed lines instead of stopping."""
    graphs, errors = [], []
    for num, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        try:
            graphs.append(graph6_decode(s))
        except (Graph6Error, GraphError) as exc:
            errors.append(CorpusError(num, s, str(exc)))
    return graphs, errors


def read_corpus(text: str, fmt: str = "graph6") -> tuple[list[Graph], list[CorpusError]]:
    if fmt == "graph6":
        return read_graph6_lines(text.splitlines())
    if fmt == "edgelist":
        try:
            return list(iter_edgelists(text.splitlines())), []
        except (GraphError, ValueError) as exc:
            return [], [CorpusError(0, "", str(exc))]
    raise ValueError(f"unknown format {fmt!r}")
