"""Standard and positive semidefinite colour-change rules.

The ``*_derived`` kernels work on raw bitmasks and are what the solvers call in
their inner loops. ``standard_closure`` / ``psd_closure`` produce full traces.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, bits, mask_of, popcount


class Rule(enum.Enum):
    STANDARD = "standard"
    PSD = "psd"


class IncompleteRunError(ValueError):
    """The operation needs a run whose derived set is the whole vertex set."""


def standard_derived(adj: tuple[int, ...], full: int, black: int) -> int:
    active = black
    while True:
        white = full & ~black
        new = 0
        m = active
        while m:
            low = m & -m
            m ^= low
            t = adj[low.bit_length() - 1] & white
            if not t:
                active ^= low  # no white neighbours now, none later
            elif not t & (t - 1):
                new |= t
                active ^= low  # it forces its last white neighbour
        if not new:
            return black
        black |= new
        active |= new


def white_components(adj: tuple[int, ...], white: int) -> list[int]:
    comps = []
    rest = white
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nb = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nb |= adj[low.bit_length() - 1]
            frontier = nb & rest & ~comp
            comp |= frontier
        rest &= ~comp
        comps.append(comp)
    return comps


def psd_derived(adj: tuple[int, ...], full: int, black: int) -> int:
    while True:
        white = full & ~black
        if not white:
            return black
        new = 0
        for comp in white_components(adj, white):
            m = black
            while m:
                low = m & -m
                m ^= low
                t = adj[low.bit_length() - 1] & comp
                if t and not t & (t - 1):
                    new |= t
        if not new:
            return black
        black |= new


def derived_set(g: Graph, black: int, rule: Rule = Rule.STANDARD) -> int:
    if rule is Rule.STANDARD:
        return standard_derived(g.adj, g.full, black)
    return psd_derived(g.adj, g.full, black)


# ---------------------------------------------------------------- traced runs


@dataclass(frozen=True)
class ForceEvent:
    round: int
    rule: Rule
    forcer: int
    forced: frozenset[int]
    component: frozenset[int] | None = None

    def render(self) -> str:
        inner = ",".join(map(str, sorted(self.forced)))
        s = f"round {self.round}: {self.forcer} -> {{{inner}}}"
        if self.component is not None:
            s += " [component {" + ",".join(map(str, sorted(self.component))) + "}]"
        return s


@dataclass
class ForcingRun:
    graph: Graph
    rule: Rule
    initial: int
    events: list[ForceEvent]
    derived: int
    # forced vertex -> every black vertex that could have forced it in its round
    eligible: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return self.derived == self.graph.full

    def forcer_of(self) -> dict[int, int]:
        return {w: e.forcer for e in self.events for w in e.forced}

    def trace(self) -> str:
        return "\n".join(e.render() for e in self.events) + ("\n" if self.events else "")


def _as_mask(b: int | Iterable[int]) -> int:
    return b if isinstance(b, int) else mask_of(b)


def standard_closure(g: Graph, b: int | Iterable[int]) -> ForcingRun:
    """Apply the standard rule in rounds until nothing changes.

    Every force valid against the state at the start of a round is applied; a
    white vertex with several eligible forcers records the smallest one.
    """
    black = initial = _as_mask(b)
    events, eligible = [], {}
    rnd = 0
    while True:
        white = g.full & ~black
        claims: dict[int, list[int]] = {}
        for u in bits(black):
            t = g.adj[u] & white
            if t and not t & (t - 1):
                claims.setdefault(t.bit_length() - 1, []).append(u)
        if not claims:
            break
        rnd += 1
        by_forcer: dict[int, list[int]] = {}
        for w, us in claims.items():
            eligible[w] = tuple(us)
            by_forcer.setdefault(us[0], []).append(w)
        for u in sorted(by_forcer):
            events.append(ForceEvent(rnd, Rule.STANDARD, u, frozenset(by_forcer[u])))
        black |= mask_of(claims)
    return ForcingRun(g, Rule.STANDARD, initial, events, black, eligible)


def psd_closure(g: Graph, b: int | Iterable[int]) -> ForcingRun:
    """Apply the PSD rule in rounds: a black vertex forces its unique white
    neighbour inside each component of the white subgraph."""
    black = initial = _as_mask(b)
    events, eligible = [], {}
    rnd = 0
    while True:
        white = g.full & ~black
        claims: dict[int, list[int]] = {}
        comp_of: dict[int, int] = {}
        for comp in white_components(g.adj, white):
            for u in bits(black):
                t = g.adj[u] & comp
                if t and not t & (t - 1):
                    w = t.bit_length() - 1
                    claims.setdefault(w, []).append(u)
                    comp_of[w] = comp
        if not claims:
            break
        rnd += 1
        by_forcer: dict[int, list[int]] = {}
        for w, us in claims.items():
            eligible[w] = tuple(sorted(us))
            by_forcer.setdefault(min(us), []).append(w)
        for u in sorted(by_forcer):
            ws = by_forcer[u]
            comp = 0
            for w in ws:
                comp |= comp_of[w]
            events.append(ForceEvent(rnd, Rule.PSD, u, frozenset(ws), frozenset(bits(comp))))
        black |= mask_of(claims)
    return ForcingRun(g, Rule.PSD, initial, events, black, eligible)


def closure(g: Graph, b: int | Iterable[int], rule: Rule = Rule.STANDARD) -> ForcingRun:
    return standard_closure(g, b) if rule is Rule.STANDARD else psd_closure(g, b)


def is_forcing_set(g: Graph, b: int | Iterable[int], rule: Rule = Rule.STANDARD) -> bool:
    return derived_set(g, _as_mask(b), rule) == g.full


def sequential_derived(g: Graph, b: int | Iterable[int], rule: Rule, rng: random.Random) -> int:
    """Derived set when one randomly chosen valid force is applied at a time."""
    black = _as_mask(b)
    while True:
        white = g.full & ~black
        options = []
        if rule is Rule.STANDARD:
            for u in bits(black):
                t = g.adj[u] & white
                if t and not t & (t - 1):
                    options.append(t)
        else:
            for comp in white_components(g.adj, white):
                for u in bits(black):
                    t = g.adj[u] & comp
                    if t and not t & (t - 1):
                        options.append(t)
        if not options:
            return black
        black |= rng.choice(options)


# ---------------------------------------------------------------- decompositions


@dataclass
class ChainDecomposition:
    chains: list[tuple[int, ...]]


def chains(run: ForcingRun) -> ChainDecomposition:
    if run.rule is not Rule.STANDARD:
        raise ValueError("forcing chains are defined for standard runs")
    if not run.complete:
        raise IncompleteRunError("run does not colour every vertex")
    succ = {}
    for e in run.events:
        (w,) = e.forced
        succ[e.forcer] = w
    out = []
    for v in bits(run.initial):
        chain = [v]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        out.append(tuple(chain))
    return ChainDecomposition(out)


def reversal(run: ForcingRun) -> int:
    """Terminal vertices of the maximal forcing chains, as a bitmask."""
    return mask_of(c[-1] for c in chains(run).chains)


@dataclass
class ForestDecomposition:
    # (root, parent map of the non-root vertices)
    trees: list[tuple[int, dict[int, int]]]
    anomaly: bool = False
    chords: list[tuple[int, int]] = field(default_factory=list)

    def vertex_sets(self) -> list[int]:
        return [1 << r | mask_of(parent) for r, parent in self.trees]


def _trees_from_parents(g: Graph, initial: int, parent: dict[int, int]) -> list[tuple[int, dict[int, int]]]:
    root_of = {r: r for r in bits(initial)}

    def root(v):
        path = []
        while v not in root_of:
            path.append(v)
            v = parent[v]
        r = root_of[v]
        for p in path:
            root_of[p] = r
        return r

    trees = {r: {} for r in bits(initial)}
    for w, u in parent.items():
        trees[root(w)][w] = u
    return [(r, trees[r]) for r in bits(initial)]


def _chords(g: Graph, trees: list[tuple[int, dict[int, int]]]) -> list[tuple[int, int]]:
    out = []
    for r, parent in trees:
        vs = 1 << r | mask_of(parent)
        tree_edges = {(min(a, b), max(a, b)) for a, b in parent.items()}
        for v in bits(vs):
            for u in bits(g.adj[v] & vs):
                if u > v and (v, u) not in tree_edges:
                    out.append((v, u))
    return out


def forcing_trees(run: ForcingRun, max_steps: int = 200_000) -> ForestDecomposition:
    """Forcing trees of a complete PSD run.

    Each forced vertex gets its smallest eligible forcer as parent. If that
    leaves a chord inside some tree, forcer choices are searched in round
    order, rejecting any choice that makes the new vertex adjacent to a
    second vertex of its tree. When no choice works within ``max_steps`` the
    default assignment is returned with ``anomaly`` set.
    """
    if run.rule is not Rule.PSD:
        raise ValueError("forcing trees are defined for PSD runs")
    if not run.complete:
        raise IncompleteRunError("run does not colour every vertex")
    g = run.graph
    default = run.forcer_of()
    trees = _trees_from_parents(g, run.initial, default)
    chords = _chords(g, trees)
    if not chords:
        return ForestDecomposition(trees)

    order = [w for e in sorted(run.events, key=lambda e: e.round) for w in sorted(e.forced)]
    order = sorted(set(order), key=order.index)
    tree_mask = {r: 1 << r for r in bits(run.initial)}
    root_of = {r: r for r in bits(run.initial)}
    parent: dict[int, int] = {}
    steps = 0

    def place(i: int) -> bool:
        nonlocal steps
        if i == len(order):
            return True
        w = order[i]
        for u in run.eligible.get(w, (default[w],)):
            steps += 1
            if steps > max_steps:
                return False
            r = root_of[u]
            if g.adj[w] & tree_mask[r] != 1 << u:
                continue
            parent[w], root_of[w] = u, r
            tree_mask[r] |= 1 << w
            if place(i + 1):
                return True
            tree_mask[r] &= ~(1 << w)
            del parent[w], root_of[w]
        return False

    if place(0):
        return ForestDecomposition(_trees_from_parents(g, run.initial, parent))
    return ForestDecomposition(trees, anomaly=True, chords=chords)


def tree_count_check(decomp: ForestDecomposition, g: Graph) -> bool:
    """Trees are disjoint, cover V, and each induces a tree of ``g``."""
    seen = 0
    for vs in decomp.vertex_sets():
        if seen & vs:
            return False
        seen |= vs
        if g.edge_count_within(vs) != popcount(vs) - 1 or g.component_of((vs & -vs).bit_length() - 1, vs) != vs:
            return False
    return seen == g.full
