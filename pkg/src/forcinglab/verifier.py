"""Executable theorem checks over graph corpora, plus report-only conjecture probes."""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from . import corpus as corp
from . import families as fam
from . import formulas as fm
from .forcing import (Rule, derived_set, forcing_trees, is_forcing_set, psd_closure,
                      reversal, standard_closure, white_components)
from .graph import (Graph, bits, coalescence, contract_edge, delete_edge, delete_vertex,
                    join, mask_of, popcount, subdivide_edge, vertex_sum)
from .io import graph6_decode, graph6_encode
from .solvers import (DEFAULT_BUDGETS, BudgetExceeded, Budgets, Param, cached,
                      clique_number, endpoint_in_some_minimum_path_cover,
                      in_some_minimum_forcing_set, maximal_cliques, minimum_forcing_sets,
                      minimum_path_covers, minimum_tree_covers,
                      singleton_in_some_minimum_path_cover)
from .spectral import inertia_alpha_upper, mr_bounds, nullity_lower_bound_M
from .structure import (MinorBudgetExceeded, analyze, degeneracy, diameter, k_tree_order,
                        recognize_cluster)

SCHEMA = 1


@dataclass(frozen=True)
class VerifierConfig:
    budgets: Budgets = DEFAULT_BUDGETS
    # operand size cap for checks that enumerate witnesses (vertex sums, coalescence)
    pair_max_n: int = 12
    # size cap for checks that need every minimum forcing set or cover
    enumerate_max_n: int = 12
    seed: int = 0
    random_subsets: int = 8
    family_count: int = 12
    max_counterexamples: int = 20
    threads: int = 1
    # test hook: added to every solver value of the named parameter (e.g. {"Z": 1})
    perturb: tuple[tuple[str, int], ...] = ()


class NotApplicable(Exception):
    """The check's hypothesis does not hold for this instance."""


class Unmatched(Exception):
    """The instance falls outside every case of a case-split statement."""


class Skip(Exception):
    pass


def _val(g: Graph, param: Param, cfg: VerifierConfig) -> int:
    try:
        v = cached(g, param, cfg.budgets).value
    except BudgetExceeded as e:
        raise Skip(str(e)) from e
    return v + dict(cfg.perturb).get(param.name, 0)


def _need(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise Skip(f"{what}: n={n} exceeds {cap}")


def _hyp(cond: bool) -> None:
    if not cond:
        raise NotApplicable


@dataclass
class Instance:
    """One graph of the corpus with the partner and anchors used by pair checks."""

    g: Graph
    index: int = 0
    partner: Graph | None = None
    fixed_anchors: tuple[int, int] | None = None

    @property
    def anchors(self) -> tuple[int, int]:
        if self.fixed_anchors is not None:
            return self.fixed_anchors
        h = self.partner
        return (self.index % self.g.n if self.g.n else 0,
                self.index % h.n if h is not None and h.n else 0)

    def payload(self) -> dict:
        out = {"graph6": graph6_encode(self.g), "index": self.index}
        if self.partner is not None:
            out["partner"] = graph6_encode(self.partner)
            out["anchors"] = list(self.anchors)
        return out

    @classmethod
    def from_payload(cls, p: dict) -> Instance:
        partner = graph6_decode(p["partner"]) if "partner" in p else None
        anchors = tuple(p["anchors"]) if "anchors" in p else None
        return cls(graph6_decode(p["graph6"]), p.get("index", 0), partner, anchors)


Failures = list[dict]


# ---------------------------------------------------------------- single-graph checks


def c01(ins: Instance, cfg: VerifierConfig) -> Failures:
    z, p = _val(ins.g, Param.Z, cfg), _val(ins.g, Param.P, cfg)
    return [] if p <= z else [{"Z": z, "P": p}]


def _is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.is_connected() and g.m == g.n - 1


def c02(ins, cfg):
    _hyp(_is_tree(ins.g))
    z, p = _val(ins.g, Param.Z, cfg), _val(ins.g, Param.P, cfg)
    return [] if z == p else [{"Z": z, "P": p}]


def c03(ins, cfg):
    _hyp(_is_tree(ins.g))
    zp = _val(ins.g, Param.ZPLUS, cfg)
    return [] if zp == 1 else [{"Zplus": zp}]


def c04(ins, cfg):
    _hyp(ins.g.n >= 1 and analyze(ins.g).block_cycle)
    z, p = _val(ins.g, Param.Z, cfg), _val(ins.g, Param.P, cfg)
    return [] if z == p else [{"Z": z, "P": p}]


def _min_zfs(g: Graph, cfg: VerifierConfig, rule: Rule = Rule.STANDARD) -> list[int]:
    _need(g.n, cfg.enumerate_max_n, "enumerate")
    try:
        return minimum_forcing_sets(g, rule, cfg.budgets)
    except BudgetExceeded as e:
        raise Skip(str(e)) from e


def c05(ins, cfg):
    g = ins.g
    _hyp(g.n >= 1)
    sets = list(_min_zfs(g, cfg))
    first = sets[0]
    sets += [first | 1 << v for v in bits(g.full & ~first)]
    out = []
    for b in sets:
        rev = reversal(standard_closure(g, b))
        if not is_forcing_set(g, rev) or popcount(rev) != popcount(b):
            out.append({"initial": list(bits(b)), "reversal": list(bits(rev))})
    return out


def c06(ins, cfg):
    g = ins.g
    _hyp(g.n >= 2 and g.is_connected())
    common = g.full
    for b in _min_zfs(g, cfg):
        common &= b
    return [] if common == 0 else [{"intersection": list(bits(common))}]


def c07(ins, cfg):
    z, d = _val(ins.g, Param.Z, cfg), degeneracy(ins.g)
    return [] if z >= d else [{"Z": z, "degeneracy": d}]


def c08(ins, cfg):
    z, chi = _val(ins.g, Param.Z, cfg), _val(ins.g, Param.CHI, cfg)
    return [] if chi <= z + 1 else [{"Z": z, "Chi": chi}]


_KPQ_EXCEPTIONS = {(1, 1), (1, 2), (2, 1), (2, 2)}


def kpq_lower_bound(g: Graph) -> tuple[int, tuple[int, int] | None]:
    """Best ``min(p,q)+1`` over ``K_{p,q}`` subgraphs outside the small exceptions."""
    best, arg = 0, None
    for p in range(1, g.n // 2 + 1):
        for xs in combinations(range(g.n), p):
            common = g.full
            for x in xs:
                common &= g.adj[x]
            q = popcount(common)
            if q >= p and (p, q) not in _KPQ_EXCEPTIONS and p + 1 > best:
                best, arg = p + 1, (p, q)
    return best, arg


def c09(ins, cfg):
    g = ins.g
    _hyp(g.m >= 1)
    z = _val(g, Param.Z, cfg)
    w = clique_number(g)
    out = []
    if z < w - 1:
        out.append({"Z": z, "omega": w})
    bound, pq = kpq_lower_bound(g)
    if z < bound:
        out.append({"Z": z, "Kpq": list(pq)})
    return out


def c10(ins, cfg):
    g = ins.g
    _hyp(g.n >= 2)
    z = _val(g, Param.Z, cfg)
    out = []
    for v in range(g.n):
        zv = _val(delete_vertex(g, v), Param.Z, cfg)
        if abs(z - zv) > 1:
            out.append({"vertex": v, "Z": z, "Z(G-v)": zv})
    return out


def c11(ins, cfg):
    g = ins.g
    _hyp(g.m >= 1 and g.is_connected())
    z = _val(g, Param.Z, cfg)
    out = []
    for u, v in g.edges():
        ze = _val(delete_edge(g, u, v), Param.Z, cfg)
        if abs(z - ze) > 1:
            out.append({"edge": [u, v], "Z": z, "Z(G-e)": ze})
    return out


def c12(ins, cfg):
    g = ins.g
    _hyp(g.m >= 1)
    z = _val(g, Param.Z, cfg)
    out = []
    for u, v in g.edges():
        zc = _val(contract_edge(g, u, v), Param.Z, cfg)
        if abs(z - zc) > 1:
            out.append({"edge": [u, v], "Z": z, "Z(G/e)": zc})
    return out


def c13(ins, cfg):
    g = ins.g
    _hyp(g.m >= 1)
    z = _val(g, Param.Z, cfg)
    out = []
    for u, v in g.edges():
        zs = _val(subdivide_edge(g, u, v), Param.Z, cfg)
        if not z <= zs <= z + 1:
            out.append({"edge": [u, v], "Z": z, "Z(subdivided)": zs})
    return out


def _pair(ins: Instance, cfg: VerifierConfig) -> tuple[Graph, Graph, int, int]:
    g, h = ins.g, ins.partner
    _hyp(h is not None and g.n >= 1 and h.n >= 1)
    _need(max(g.n, h.n), cfg.pair_max_n, "pair operand")
    a, b = ins.anchors
    return g, h, a, b


def c14(ins, cfg):
    g, h, a, b = _pair(ins, cfg)
    zg, zh = _val(g, Param.Z, cfg), _val(h, Param.Z, cfg)
    in_g = in_some_minimum_forcing_set(g, a, Rule.STANDARD, zg)
    in_h = in_some_minimum_forcing_set(h, b, Rule.STANDARD, zh)
    pred = fm.vertex_sum_z(zg, zh, in_g, in_h)
    actual = _val(vertex_sum(g, h, a, b), Param.Z, cfg)
    if actual == pred["Z"]:
        return []
    return [{"Z(G)": zg, "Z(H)": zh, "v in min ZFS of G": in_g, "v in min ZFS of H": in_h,
             "case": pred.case, "predicted": pred["Z"], "Z(G+vH)": actual}]


def c15(ins, cfg):
    g, h, a, b = _pair(ins, cfg)
    pg, ph = _val(g, Param.P, cfg), _val(h, Param.P, cfg)
    flags = dict(single_g=singleton_in_some_minimum_path_cover(g, a),
                 end_g=endpoint_in_some_minimum_path_cover(g, a),
                 single_h=singleton_in_some_minimum_path_cover(h, b),
                 end_h=endpoint_in_some_minimum_path_cover(h, b))
    try:
        pred = fm.vertex_sum_p(pg, ph, **flags)
    except fm.HypothesisError as e:
        raise Unmatched(e.hypothesis) from e
    actual = _val(vertex_sum(g, h, a, b), Param.P, cfg)
    if actual == pred["P"]:
        return []
    return [{"P(G)": pg, "P(H)": ph, **flags, "case": pred.case, "predicted": pred["P"],
             "P(G+vH)": actual}]


def c16(ins, cfg):
    g, h = ins.g, ins.partner
    _hyp(h is not None and g.n >= 1 and h.n >= 1 and g.is_connected() and h.is_connected())
    # K_1 v K_1 = K_2 falls outside the statement
    _hyp(g.n + h.n >= 3)
    _need(max(g.n, h.n), cfg.pair_max_n, "pair operand")
    zg, zh = _val(g, Param.Z, cfg), _val(h, Param.Z, cfg)
    pred = fm.join_z(g.n, zg, h.n, zh)["Z"]
    actual = _val(join(g, h), Param.Z, cfg)
    return [] if actual == pred else [{"Z(G)": zg, "Z(H)": zh, "predicted": pred, "Z(GvH)": actual}]


def c19(ins, cfg):
    g = ins.g
    rng = random.Random(f"{cfg.seed}:{ins.index}")
    out = []
    for _ in range(cfg.random_subsets):
        b = rng.getrandbits(g.n) if g.n else 0
        std, psd = derived_set(g, b, Rule.STANDARD), derived_set(g, b, Rule.PSD)
        if std & ~psd:
            out.append({"initial": list(bits(b)), "standard": list(bits(std)), "psd": list(bits(psd))})
    z, zp = _val(g, Param.Z, cfg), _val(g, Param.ZPLUS, cfg)
    if zp > z:
        out.append({"Z": z, "Zplus": zp})
    return out


def c20(ins, cfg):
    t, zp = _val(ins.g, Param.T, cfg), _val(ins.g, Param.ZPLUS, cfg)
    return [] if t <= zp else [{"T": t, "Zplus": zp}]


def c21(ins, cfg):
    g = ins.g
    _hyp(g.n >= 1)
    out = []
    for b in _min_zfs(g, cfg, Rule.PSD):
        for w in white_components(g.adj, g.full & ~b):
            for u in bits(b):
                nb = g.adj[u] & w
                if popcount(nb) != 1:
                    continue
                b2 = (b & ~(1 << u)) | nb
                if not is_forcing_set(g, b2, Rule.PSD):
                    out.append({"initial": list(bits(b)), "u": u, "v": nb.bit_length() - 1})
    return out


def c22(ins, cfg):
    g = ins.g
    _hyp(g.m >= 1)
    zp, t = _val(g, Param.ZPLUS, cfg), _val(g, Param.T, cfg)
    out = []
    for u, v in g.edges():
        s = subdivide_edge(g, u, v)
        zs, ts = _val(s, Param.ZPLUS, cfg), _val(s, Param.T, cfg)
        if (zs, ts) != (zp, t):
            out.append({"edge": [u, v], "Zplus": zp, "T": t, "Zplus(sub)": zs, "T(sub)": ts})
    return out


def c23(ins, cfg):
    g = ins.g
    _hyp(g.n >= 1 and analyze(g).outerplanar)
    zp, t = _val(g, Param.ZPLUS, cfg), _val(g, Param.T, cfg)
    return [] if zp == t else [{"Zplus": zp, "T": t}]


def c24(ins, cfg):
    g, h, a, b = _pair(ins, cfg)
    s = vertex_sum(g, h, a, b)
    pred = fm.vertex_sum_zplus_t(_val(g, Param.ZPLUS, cfg), _val(h, Param.ZPLUS, cfg),
                                 _val(g, Param.T, cfg), _val(h, Param.T, cfg))
    actual = {"Zplus": _val(s, Param.ZPLUS, cfg), "T": _val(s, Param.T, cfg)}
    out = []
    for name in ("Zplus", "T"):
        if actual[name] != pred[name]:
            out.append({"parameter": name, "predicted": pred[name], "actual": actual[name]})
    return out


def largest_clique(g: Graph) -> list[int]:
    cl = max(maximal_cliques(g), key=lambda c: (popcount(c), -c))
    return list(bits(cl))


def c25(ins, cfg):
    g = ins.g
    _hyp(g.n >= 1)
    _need(g.n, cfg.pair_max_n, "coalescence operand")
    k_cl = largest_clique(g)
    km = mask_of(k_cl)
    co = coalescence(g, g, k_cl, k_cl)
    out = []
    t = _val(g, Param.T, cfg)
    covers = _tree_covers(g, cfg)
    k_t = max(sum(1 for p in c if p & km) for c in covers)
    t_co = _val(co, Param.T, cfg)
    if t_co != 2 * t - k_t:
        out.append({"parameter": "T", "clique": k_cl, "T(G)": t, "k": k_t, "T(coalescence)": t_co})
    # k for Z+ is bounded below by the default forcing trees of every minimum PZFS
    # and above by min(Z+, |K|); the coalescence value must sit in the induced range
    zp = _val(g, Param.ZPLUS, cfg)
    k_lo = 0
    for b in _min_zfs(g, cfg, Rule.PSD):
        forest = forcing_trees(psd_closure(g, b))
        k_lo = max(k_lo, sum(1 for vs in forest.vertex_sets() if vs & km))
    k_hi = min(zp - dict(cfg.perturb).get("ZPLUS", 0), len(k_cl))
    zp_co = _val(co, Param.ZPLUS, cfg)
    if not 2 * zp - k_hi <= zp_co <= 2 * zp - k_lo:
        out.append({"parameter": "Zplus", "clique": k_cl, "Zplus(G)": zp, "k range": [k_lo, k_hi],
                    "Zplus(coalescence)": zp_co})
    return out


def _tree_covers(g: Graph, cfg: VerifierConfig) -> list[list[int]]:
    _need(g.n, cfg.enumerate_max_n, "enumerate")
    try:
        return minimum_tree_covers(g, cfg.budgets)
    except BudgetExceeded as e:
        raise Skip(str(e)) from e


def _cluster_failures(g: Graph, k: int, s: int, cfg: VerifierConfig) -> Failures:
    out = []
    pred = fm.cluster_zplus_t(k, s)
    zp = _val(g, Param.ZPLUS, cfg)
    if zp != pred["Zplus"]:
        out.append({"k": k, "|S|": s, "parameter": "Zplus", "predicted": pred["Zplus"], "actual": zp})
    if "T" in pred.values:
        t = _val(g, Param.T, cfg)
        if t != pred["T"]:
            out.append({"k": k, "|S|": s, "parameter": "T", "predicted": pred["T"], "actual": t})
    return out


def _odd_ktree_failures(g: Graph, k: int, cfg: VerifierConfig) -> Failures:
    t = _val(g, Param.T, cfg)
    pred = fm.odd_ktree_t(k)["T"]
    return [] if t == pred else [{"k": k, "parameter": "T", "predicted": pred, "actual": t}]


def c26(ins, cfg):
    g = ins.g
    k = k_tree_order(g)
    _hyp(k is not None and k >= 1)
    out = []
    info = recognize_cluster(g, k)
    applies = False
    if info is not None and info.size >= 1:
        applies = True
        out += _cluster_failures(g, k, info.size, cfg)
    if k % 2 == 1:
        applies = True
        out += _odd_ktree_failures(g, k, cfg)
    _hyp(applies)
    return out


def c27(ins, cfg):
    g = ins.g
    _hyp(g.n >= 1)
    zp = _val(g, Param.ZPLUS, cfg)
    chi, alpha = _val(g, Param.CHI, cfg), _val(g, Param.ALPHA, cfg)
    d = degeneracy(g)
    out = []
    if zp < d:
        out.append({"Zplus": zp, "degeneracy": d})
    if chi > zp + 1:
        out.append({"Zplus": zp, "Chi": chi})
    if math.ceil(g.n / alpha) - 1 > zp:
        out.append({"Zplus": zp, "Alpha": alpha, "bound": "ceil(n/alpha)-1"})
    # the upper bound n - alpha needs every vertex to have a neighbour
    if g.min_degree() >= 1 and zp > g.n - alpha:
        out.append({"Zplus": zp, "Alpha": alpha, "bound": "n-alpha"})
    return out


def c28(ins, cfg):
    g = ins.g
    _hyp(g.n >= 2)
    zp = _val(g, Param.ZPLUS, cfg)
    out = []
    for v in range(g.n):
        zv = _val(delete_vertex(g, v), Param.ZPLUS, cfg)
        if not zp - 1 <= zv <= zp + g.degree(v) - 1:
            out.append({"vertex": v, "Zplus": zp, "Zplus(G-v)": zv})
    for u, v in g.edges():
        ze = _val(delete_edge(g, u, v), Param.ZPLUS, cfg)
        if abs(ze - zp) > 1:
            out.append({"edge": [u, v], "Zplus": zp, "Zplus(G-e)": ze})
        zc = _val(contract_edge(g, u, v), Param.ZPLUS, cfg)
        if abs(zc - zp) > 1:
            out.append({"edge": [u, v], "Zplus": zp, "Zplus(G/e)": zc})
    return out


def c29(ins, cfg):
    g = ins.g
    _hyp(g.n >= 1)
    try:
        iv = mr_bounds(g, cfg.budgets)
    except ValueError as e:
        return [{"error": str(e)}]
    out = []
    z = _val(g, Param.Z, cfg)
    d = diameter(g)
    if d != math.inf and iv.hi < d:
        out.append({"mr": [iv.lo, iv.hi], "diameter": d})
    if g.m and iv.lo > _val(g, Param.CC, cfg):
        out.append({"mr": [iv.lo, iv.hi], "CC": _val(g, Param.CC, cfg)})
    if g.n - iv.hi > z:
        out.append({"M lower": g.n - iv.hi, "Z": z})
    if nullity_lower_bound_M(g) > z:
        out.append({"max eigenvalue multiplicity": nullity_lower_bound_M(g), "Z": z})
    alpha = _val(g, Param.ALPHA, cfg)
    if inertia_alpha_upper(g) < alpha:
        out.append({"inertia bound": inertia_alpha_upper(g), "Alpha": alpha})
    for v in range(g.n if g.n >= 2 else 0):
        sub = mr_bounds(delete_vertex(g, v), cfg.budgets)
        if iv.hi < sub.lo or iv.lo > sub.hi + 2:
            out.append({"vertex": v, "mr": [iv.lo, iv.hi], "mr(G-v)": [sub.lo, sub.hi]})
    return out


def c30(ins, cfg):
    g = ins.g
    p = _val(g, Param.P, cfg)
    _hyp(p == 2)
    _need(g.n, cfg.enumerate_max_n, "enumerate")
    z = _val(g, Param.Z, cfg)
    out = []
    for cover in minimum_path_covers(g, cfg.budgets):
        a, b = (popcount(s) for s in cover)
        if not 2 <= z <= min(a, b) + 1:
            out.append({"Z": z, "paths": [list(bits(s)) for s in cover]})
    return out


# ---------------------------------------------------------------- family-generated instances


def _random_small(rng: random.Random, lo: int, hi: int) -> Graph:
    return fam.random_gnp(rng.randint(lo, hi), rng.choice((0.3, 0.5, 0.7)), rng.randrange(2**32))


def f17_instances(cfg: VerifierConfig) -> list[dict]:
    rng = random.Random(f"{cfg.seed}:C17")
    out = []
    for _ in range(cfg.family_count):
        base = _random_small(rng, 2, 4)
        hs = [graph6_encode(_random_small(rng, 1, 3)) if rng.random() < 0.6 else None for _ in range(base.n)]
        out.append({"kind": "bound", "base": graph6_encode(base), "attached": hs})
    for base in ("K", "P"):
        for t in (2, 3, 4):
            for r in range(0, t + 1):
                for ell in range(0, t + 1 - r):
                    s = [rng.choice((2, 3)) for _ in range(r)]
                    q = [rng.choice((2, 3)) for _ in range(ell)]
                    out.append({"kind": "corollary", "base": base, "t": t, "s": s, "q": q})
    return out


def _corollary_graph(base: str, t: int, s: list[int], q: list[int]) -> Graph:
    g = fam.complete(t) if base == "K" else fam.path(t)
    hs: list[Graph | None] = [fam.path(x) for x in s] + [fam.complete(x) for x in q]
    hs += [None] * (t - len(hs))
    return fam.generalized_corona(g, hs)


def f17_evaluate(p: dict, cfg: VerifierConfig) -> tuple[Graph, Failures]:
    if p["kind"] == "bound":
        base = graph6_decode(p["base"])
        hs = [graph6_decode(x) if x is not None else None for x in p["attached"]]
        g = fam.generalized_corona(base, hs)
        pred = fm.generalized_corona_z_bound(_val(base, Param.Z, cfg),
                                             [_val(h, Param.Z, cfg) for h in hs if h is not None])
        z = _val(g, Param.Z, cfg)
        return g, ([] if pred.admits("Z", z) else [{"Z": z, "bound": pred.values["Z"][1]}])
    g = _corollary_graph(p["base"], p["t"], p["s"], p["q"])
    pred = fm.corona_corollary_values(p["base"], p["t"], p["s"], p["q"])
    out = []
    z, cc = _val(g, Param.Z, cfg), _val(g, Param.CC, cfg)
    if z != pred["Z"]:
        out.append({"parameter": "Z", "predicted": pred["Z"], "actual": z})
    if cc != pred["CC"]:
        out.append({"parameter": "CC", "predicted": pred["CC"], "actual": cc})
    iv = mr_bounds(g, cfg.budgets)
    if pred["mr"] not in iv:
        out.append({"parameter": "mr", "predicted": pred["mr"], "interval": [iv.lo, iv.hi]})
    return g, out


def f18_instances(cfg: VerifierConfig) -> list[dict]:
    rng = random.Random(f"{cfg.seed}:C18")
    out = []
    while len(out) < cfg.family_count:
        n_cl = rng.randint(1, 4)
        sizes = [rng.randint(2, 5) for _ in range(n_cl)]
        overlaps = []
        ok = True
        for i in range(n_cl - 1):
            room = min(sizes[i], sizes[i + 1]) - 1
            if i:
                room = min(room, sizes[i] - overlaps[-1])
            if room < 1:
                ok = False
                break
            overlaps.append(rng.randint(1, room))
        if ok and sum(sizes) - sum(overlaps) <= 14:
            out.append({"sizes": sizes, "overlaps": overlaps})
    return out


def f18_evaluate(p: dict, cfg: VerifierConfig) -> tuple[Graph, Failures]:
    g = fam.clique_chain(p["sizes"], p["overlaps"])
    pred = fm.clique_chain_zm(p["sizes"], p["overlaps"])
    out = []
    z, cc = _val(g, Param.Z, cfg), _val(g, Param.CC, cfg)
    if z != pred["Z"]:
        out.append({"parameter": "Z", "predicted": pred["Z"], "actual": z})
    if cc != pred["CC"]:
        out.append({"parameter": "CC", "predicted": pred["CC"], "actual": cc})
    iv = mr_bounds(g, cfg.budgets)
    if pred["mr"] not in iv:
        out.append({"parameter": "mr", "predicted": pred["mr"], "interval": [iv.lo, iv.hi]})
    return g, out


def f26_instances(cfg: VerifierConfig) -> list[dict]:
    out = [{"kind": "cluster", "k": k, "s": s} for k in (2, 3, 4) for s in range(1, k + 2)]
    rng = random.Random(f"{cfg.seed}:C26")
    for k in (1, 3, 5):
        for _ in range(3):
            out.append({"kind": "odd", "k": k, "n": rng.randint(k + 1, 11), "seed": rng.randrange(2**32)})
    return out


def f26_evaluate(p: dict, cfg: VerifierConfig) -> tuple[Graph, Failures]:
    if p["kind"] == "cluster":
        g = fam.ktree_cluster(p["k"], list(range(p["s"])))
        return g, _cluster_failures(g, p["k"], p["s"], cfg)
    g = fam.random_ktree(p["k"], p["n"], p["seed"])
    return g, _odd_ktree_failures(g, p["k"], cfg)


def f30_instances(cfg: VerifierConfig) -> list[dict]:
    return [{"m": m, "n": n} for m in range(1, 5) for n in range(m, 6)]


def f30_evaluate(p: dict, cfg: VerifierConfig) -> tuple[Graph, Failures]:
    m, n = p["m"], p["n"]
    out, seen = [], set()
    for joined in range(0, m + 1):
        g = fam.p2_family(m, n, joined)
        if _val(g, Param.P, cfg) != 2:
            continue
        z = _val(g, Param.Z, cfg)
        seen.add(z)
        if not 2 <= z <= min(m, n) + 1:
            out.append({"joined": joined, "Z": z})
    missing = sorted(set(range(2, min(m, n) + 2)) - seen)
    if missing:
        out.append({"unattained Z values": missing, "attained": sorted(seen)})
    return fam.p2_family(m, n, m), out


# ---------------------------------------------------------------- catalog


@dataclass(frozen=True)
class TheoremCheck:
    check_id: str
    statement: str
    per_graph: Callable[[Instance, VerifierConfig], Failures] | None = None
    instances: Callable[[VerifierConfig], list[dict]] | None = None
    evaluate: Callable[[dict, VerifierConfig], tuple[Graph, Failures]] | None = None


CATALOG: dict[str, TheoremCheck] = {c.check_id: c for c in [
    TheoremCheck("C01", "P <= Z", c01),
    TheoremCheck("C02", "trees: Z = P", c02),
    TheoremCheck("C03", "trees: Z+ = 1", c03),
    TheoremCheck("C04", "block-cycle graphs: Z = P", c04),
    TheoremCheck("C05", "the reversal of a complete standard run is a zero forcing set", c05),
    TheoremCheck("C06", "connected, n >= 2: minimum zero forcing sets share no vertex", c06),
    TheoremCheck("C07", "Z >= degeneracy", c07),
    TheoremCheck("C08", "chi <= Z + 1", c08),
    TheoremCheck("C09", "K_n and K_{p,q} subgraph lower bounds on Z", c09),
    TheoremCheck("C10", "|Z(G) - Z(G-v)| <= 1", c10),
    TheoremCheck("C11", "|Z(G) - Z(G-e)| <= 1 (connected G)", c11),
    TheoremCheck("C12", "|Z(G) - Z(G/e)| <= 1", c12),
    TheoremCheck("C13", "Z <= Z(edge subdivision) <= Z + 1", c13),
    TheoremCheck("C14", "vertex sum: three-case formula for Z", c14),
    TheoremCheck("C15", "vertex sum: four-case formula for P", c15),
    TheoremCheck("C16", "join of connected graphs: Z = min(|H|+Z(G), |G|+Z(H))", c16),
    TheoremCheck("C17", "generalized corona bound; corona values on K_t and P_t",
                 instances=f17_instances, evaluate=f17_evaluate),
    TheoremCheck("C18", "linear clique chains: Z = M formula and CC = N",
                 instances=f18_instances, evaluate=f18_evaluate),
    TheoremCheck("C19", "standard derived set inside PSD derived set; Z+ <= Z", c19),
    TheoremCheck("C20", "T <= Z+", c20),
    TheoremCheck("C21", "swap lemma for positive zero forcing sets", c21),
    TheoremCheck("C22", "Z+ and T unchanged by edge subdivision", c22),
    TheoremCheck("C23", "outerplanar graphs: Z+ = T", c23),
    TheoremCheck("C24", "vertex sum: Z+ and T add minus one", c24),
    TheoremCheck("C25", "self-coalescence on a largest clique: T = 2T - k, Z+ in its range", c25),
    TheoremCheck("C26", "cluster k-trees: Z+ and T; odd k-trees: T = (k+1)/2", c26,
                 instances=f26_instances, evaluate=f26_evaluate),
    TheoremCheck("C27", "Z+ >= degeneracy, chi <= Z+ + 1, ceil(n/alpha)-1 <= Z+ <= n-alpha", c27),
    TheoremCheck("C28", "Z+ under vertex deletion, edge deletion and contraction", c28),
    TheoremCheck("C29", "mr/M intervals agree with diameter, CC, Z, spectra and vertex deletion", c29),
    TheoremCheck("C30", "P = 2: 2 <= Z <= min(m,n)+1, every value attained", c30,
                 instances=f30_instances, evaluate=f30_evaluate),
]}


# ---------------------------------------------------------------- probes


def probe_zp_vertex_sum(ins: Instance, cfg: VerifierConfig) -> Failures:
    g, h, a, b = _pair(ins, cfg)
    _hyp(_val(g, Param.Z, cfg) == _val(g, Param.P, cfg) and _val(h, Param.Z, cfg) == _val(h, Param.P, cfg))
    s = vertex_sum(g, h, a, b)
    z, p = _val(s, Param.Z, cfg), _val(s, Param.P, cfg)
    return [] if z == p else [{"Z": z, "P": p}]


def chain_forcing_orientation(g: Graph, cover: list[int]) -> list[list[int]] | None:
    """Orient each path so that forcing along path edges colours everything, if possible."""
    paths = []
    for s in cover:
        vs = list(bits(s))
        ends = [v for v in vs if popcount(g.adj[v] & s) <= 1]
        start = ends[0]
        order, prev = [start], -1
        while len(order) < len(vs):
            nxt = next(w for w in bits(g.adj[order[-1]] & s) if w != prev)
            prev = order[-1]
            order.append(nxt)
        paths.append(order)
    for flips in range(1 << len(paths)):
        oriented = [p[::-1] if flips >> i & 1 else p for i, p in enumerate(paths)]
        black = mask_of(p[0] for p in oriented)
        pos = [0] * len(oriented)
        progress = True
        while progress:
            progress = False
            for i, p in enumerate(oriented):
                j = pos[i]
                if j + 1 < len(p) and g.adj[p[j]] & ~black == 1 << p[j + 1]:
                    black |= 1 << p[j + 1]
                    pos[i] += 1
                    progress = True
        if black == g.full:
            return oriented
    return None


def probe_problem3(ins: Instance, cfg: VerifierConfig) -> Failures:
    g = ins.g
    _need(g.n, cfg.enumerate_max_n, "enumerate")
    _hyp(g.n >= 1 and _val(g, Param.Z, cfg) == _val(g, Param.P, cfg))
    out = []
    for cover in minimum_path_covers(g, cfg.budgets):
        if chain_forcing_orientation(g, cover) is None:
            out.append({"cover": [list(bits(s)) for s in cover]})
    return out


def fk_instances(cfg: VerifierConfig) -> list[dict]:
    return [{"k": k, "t": t} for k in (2, 3, 4) for t in (1, 2, 3)]


def fk_evaluate(p: dict, cfg: VerifierConfig) -> tuple[Graph, Failures]:
    g = corp.cluster_chain(p["k"], p["t"])
    zp = _val(g, Param.ZPLUS, cfg)
    pred = p["k"] + p["t"]
    return g, ([] if zp == pred else [{"predicted": pred, "Zplus": zp}])


PROBES: dict[str, TheoremCheck] = {c.check_id: c for c in [
    TheoremCheck("conj_ZP_vertex_sum", "vertex sums of two Z = P graphs have Z = P", probe_zp_vertex_sum),
    TheoremCheck("conj_k_trees", "a k-tree made of t chained clusters with |S| >= 3 has Z+ = k + t",
                 instances=fk_instances, evaluate=fk_evaluate),
    TheoremCheck("problem3", "Z = P graphs: every minimum path cover is a set of forcing chains", probe_problem3),
]}


# ---------------------------------------------------------------- report


@dataclass
class CheckRecord:
    check_id: str
    tested: int = 0
    applicable: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    unmatched: int = 0
    counterexamples: list = field(default_factory=list)

    def add(self, status: str, payload: dict | None, cap: int) -> None:
        self.tested += 1
        if status in ("pass", "fail"):
            self.applicable += 1
        if status == "pass":
            self.passed += 1
        elif status == "fail":
            self.failed += 1
            if len(self.counterexamples) < cap:
                self.counterexamples.append(payload)
        elif status == "skip":
            self.skipped += 1
        elif status == "unmatched":
            self.unmatched += 1

    def to_json(self) -> dict:
        return {"check_id": self.check_id, "tested": self.tested, "applicable": self.applicable,
                "passed": self.passed, "failed": self.failed, "skipped": self.skipped,
                "unmatched": self.unmatched, "counterexamples": self.counterexamples}


@dataclass
class VerificationReport:
    graphs: int
    checks: dict[str, CheckRecord] = field(default_factory=dict)
    probes: dict[str, CheckRecord] = field(default_factory=dict)
    malformed: list = field(default_factory=list)
    runtime_seconds: float = 0.0

    @property
    def failed_checks(self) -> list[str]:
        return [c for c, r in self.checks.items() if r.failed]

    @property
    def ok(self) -> bool:
        return not self.failed_checks

    def to_json(self, include_runtime: bool = True) -> dict:
        out = {"schema": SCHEMA, "graphs": self.graphs,
               "checks": [r.to_json() for r in self.checks.values()],
               "conjectures": [_probe_json(r) for r in self.probes.values()],
               "malformed": self.malformed}
        if include_runtime:
            out["runtime_seconds"] = round(self.runtime_seconds, 3)
        return out

    def coverage_table(self) -> str:
        rows = [f"{'check':<20} {'tested':>6} {'appl':>6} {'pass':>6} {'fail':>5} {'skip':>5} {'nocase':>6}  statement"]
        for cid, r in list(self.checks.items()) + list(self.probes.items()):
            stmt = (CATALOG.get(cid) or PROBES[cid]).statement
            rows.append(f"{cid:<20} {r.tested:>6} {r.applicable:>6} {r.passed:>6} {r.failed:>5} "
                        f"{r.skipped:>5} {r.unmatched:>6}  {stmt}")
        return "\n".join(rows)


def _probe_json(r: CheckRecord) -> dict:
    return {"probe_id": r.check_id, "tested": r.tested, "applicable": r.applicable,
            "supported": r.passed, "violations": r.failed, "skipped": r.skipped,
            "examples": r.counterexamples}


def _status(fn: Callable[[], Failures]) -> tuple[str, Failures | None, str | None]:
    try:
        fails = fn()
    except NotApplicable:
        return "na", None, None
    except Unmatched as e:
        return "unmatched", None, str(e)
    except (Skip, BudgetExceeded, MinorBudgetExceeded) as e:
        return "skip", None, str(e)
    return ("fail" if fails else "pass"), fails, None


def _evaluate_instance(args) -> list[tuple[str, str, dict | None]]:
    ins, ids, table_name, cfg = args
    table = CATALOG if table_name == "checks" else PROBES
    out = []
    for cid in ids:
        status, fails, _ = _status(lambda: table[cid].per_graph(ins, cfg))
        payload = {**ins.payload(), "values": fails} if status == "fail" else None
        out.append((cid, status, payload))
    return out


def _evaluate_family(args) -> list[tuple[str, str, dict | None]]:
    cid, params, table_name, cfg = args
    check = (CATALOG if table_name == "checks" else PROBES)[cid]
    holder = {}

    def run():
        g, fails = check.evaluate(params, cfg)
        holder["g"] = g
        return fails

    status, fails, _ = _status(run)
    payload = None
    if status == "fail":
        payload = {"graph6": graph6_encode(holder["g"]), "instance": params, "values": fails}
    return [(cid, status, payload)]


def _map(fn, tasks: list, threads: int) -> Iterable:
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * threads))))
    return [fn(t) for t in tasks]


def _select(table: dict[str, TheoremCheck], ids: Iterable[str] | None) -> list[str]:
    if ids is None:
        return list(table)
    ids = list(ids)
    unknown = [i for i in ids if i not in table]
    if unknown:
        raise KeyError(f"unknown check ids: {', '.join(unknown)}")
    return [i for i in table if i in ids]


def _run(table_name: str, graphs: list[Graph], ids: Iterable[str] | None, cfg: VerifierConfig,
         families: bool, instances: list[Instance] | None = None) -> dict[str, CheckRecord]:
    table = CATALOG if table_name == "checks" else PROBES
    chosen = _select(table, ids)
    records = {cid: CheckRecord(cid) for cid in chosen}
    graph_ids = [c for c in chosen if table[c].per_graph is not None]
    n = len(graphs)
    if instances is None:
        # pair checks match each graph with its successor, cyclically
        instances = [Instance(g, i, graphs[(i + 1) % n]) for i, g in enumerate(graphs)]
    tasks = [(ins, graph_ids, table_name, cfg) for ins in instances]
    results = list(_map(_evaluate_instance, tasks, cfg.threads)) if graph_ids else []
    if families:
        ftasks = [(c, p, table_name, cfg) for c in chosen if table[c].instances is not None
                  for p in table[c].instances(cfg)]
        results += list(_map(_evaluate_family, ftasks, cfg.threads))
    for res in results:
        for cid, status, payload in res:
            records[cid].add(status, payload, cfg.max_counterexamples)
    return records


def run_checks(graphs: list[Graph], ids: Iterable[str] | None = None,
               cfg: VerifierConfig = VerifierConfig(), families: bool = True) -> VerificationReport:
    """Evaluate catalog checks; ``families`` adds the generated instances of family checks."""
    t0 = time.perf_counter()
    rep = VerificationReport(len(graphs), checks=_run("checks", graphs, ids, cfg, families))
    rep.runtime_seconds = time.perf_counter() - t0
    return rep


def probe_conjectures(graphs: list[Graph], ids: Iterable[str] | None = None,
                      cfg: VerifierConfig = VerifierConfig(), families: bool = True) -> VerificationReport:
    """Evaluate conjecture probes; violations are findings and never make the report fail."""
    t0 = time.perf_counter()
    rep = VerificationReport(len(graphs), probes=_run("probes", graphs, ids, cfg, families))
    rep.runtime_seconds = time.perf_counter() - t0
    return rep


def run_pairs(pairs: Iterable[tuple[Graph, Graph, int, int]], ids: Iterable[str] | None = None,
              cfg: VerifierConfig = VerifierConfig(), probes: bool = False) -> VerificationReport:
    """Run per-graph checks on explicit ``(G, H, v_G, v_H)`` operand pairs."""
    t0 = time.perf_counter()
    inst = [Instance(g, i, h, (a, b)) for i, (g, h, a, b) in enumerate(pairs)]
    name = "probes" if probes else "checks"
    recs = _run(name, [i.g for i in inst], ids, cfg, False, inst)
    rep = VerificationReport(len(inst), **({"probes": recs} if probes else {"checks": recs}))
    rep.runtime_seconds = time.perf_counter() - t0
    return rep


def recheck(check_id: str, counterexample: dict, cfg: VerifierConfig = VerifierConfig()) -> bool:
    """Re-run one serialized counterexample in isolation; True if it still fails."""
    check = CATALOG.get(check_id) or PROBES[check_id]
    if "instance" in counterexample:
        status, _, _ = _status(lambda: check.evaluate(counterexample["instance"], cfg)[1])
    else:
        ins = Instance.from_payload(counterexample)
        status, _, _ = _status(lambda: check.per_graph(ins, cfg))
    return status == "fail"
