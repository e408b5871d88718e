"""Closed-form predictions for families and compositions of graphs."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field


class FormulaId(enum.Enum):
    MultipartiteZ = "MultipartiteZ"
    JoinZ = "JoinZ"
    VertexSumZ = "VertexSumZ"
    VertexSumP = "VertexSumP"
    GeneralizedCoronaZBound = "GeneralizedCoronaZBound"
    CoronaCorollaryValues = "CoronaCorollaryValues"
    CliqueChainZM = "CliqueChainZM"
    TreeAll = "TreeAll"
    BlockCycleZeqP = "BlockCycleZeqP"
    OuterplanarZpEqT = "OuterplanarZpEqT"
    ClusterZplusT = "ClusterZplusT"
    OddKTreeT = "OddKTreeT"
    CoalescenceKn = "CoalescenceKn"
    VertexSumZplusT = "VertexSumZplusT"
    TreeVertexSumZplus = "TreeVertexSumZplus"
    P2Bound = "P2Bound"


class Kind(enum.Enum):
    EXACT = "exact"
    UPPER = "upper"
    LOWER = "lower"
    INTERVAL = "interval"


class HypothesisError(ValueError):
    def __init__(self, formula: FormulaId, hypothesis: str):
        super().__init__(f"{formula.value}: hypothesis failed: {hypothesis}")
        self.formula, self.hypothesis = formula, hypothesis


@dataclass(frozen=True)
class PredictedValue:
    formula: FormulaId
    kind: Kind
    # parameter name -> (lo, hi); lo == hi for exact values, None for an open side
    values: dict = field(default_factory=dict)
    case: str | None = None

    def __post_init__(self):
        for name, (lo, hi) in self.values.items():
            if lo is not None and hi is not None and lo > hi:
                raise ValueError(f"{name}: empty interval [{lo}, {hi}]")

    def __getitem__(self, name: str) -> int:
        lo, hi = self.values[name]
        if lo != hi:
            raise KeyError(f"{name} is not an exact prediction")
        return lo

    def admits(self, name: str, actual: int) -> bool:
        lo, hi = self.values[name]
        return (lo is None or lo <= actual) and (hi is None or actual <= hi)


def _exact(fid: FormulaId, case: str | None = None, **vals: int) -> PredictedValue:
    return PredictedValue(fid, Kind.EXACT, {k: (v, v) for k, v in vals.items()}, case)


def _require(cond: bool, fid: FormulaId, what: str) -> None:
    if not cond:
        raise HypothesisError(fid, what)


def multipartite_z(parts: list[int]) -> PredictedValue:
    f = FormulaId.MultipartiteZ
    _require(len(parts) >= 2, f, "at least two parts")
    _require(all(p >= 1 for p in parts), f, "part sizes >= 1")
    _require(any(p > 1 for p in parts), f, "some part has more than one vertex")
    return _exact(f, Z=sum(parts) - 2)


def join_z(n_g: int, z_g: int, n_h: int, z_h: int, connected_g: bool = True, connected_h: bool = True) -> PredictedValue:
    f = FormulaId.JoinZ
    _require(connected_g and connected_h, f, "both graphs connected")
    return _exact(f, Z=min(n_h + z_g, n_g + z_h))


def vertex_sum_z(z_g: int, z_h: int, v_in_min_g: bool, v_in_min_h: bool) -> PredictedValue:
    """Three cases on whether the shared vertex lies in some minimum ZFS of each side.

    The one-sided case is applied in both orientations.
    """
    f = FormulaId.VertexSumZ
    if v_in_min_g and v_in_min_h:
        return _exact(f, "both", Z=z_g + z_h - 1)
    if v_in_min_g or v_in_min_h:
        return _exact(f, "one", Z=z_g + z_h)
    return _exact(f, "neither", Z=z_g + z_h + 1)


def vertex_sum_p(p_g: int, p_h: int, single_g: bool, end_g: bool, single_h: bool, end_h: bool) -> PredictedValue:
    """Four cases on how the shared vertex can sit in minimum path covers.

    ``single_*``: the vertex is a one-vertex path in some minimum cover.
    ``end_*``: the vertex ends a path in some minimum cover (a one-vertex path counts).
    The one-sided cases are tried in both orientations.
    """
    f = FormulaId.VertexSumP
    _require(not single_g or end_g, f, "a one-vertex path also ends a path (G)")
    _require(not single_h or end_h, f, "a one-vertex path also ends a path (H)")
    for (sa, ea), (sb, eb), tag in (((single_g, end_g), (single_h, end_h), "G"),
                                   ((single_h, end_h), (single_g, end_g), "H")):
        if sa and not eb:
            return _exact(f, f"singleton-{tag}", P=p_g + p_h - 1)
        if ea and not sa and not eb:
            return _exact(f, f"endpoint-{tag}", P=p_g + p_h)
    if end_g and end_h:
        return _exact(f, "endpoints-both", P=p_g + p_h - 1)
    if not end_g and not end_h:
        return _exact(f, "interior-both", P=p_g + p_h + 1)
    raise HypothesisError(f, "no case applies")


def generalized_corona_z_bound(z_g: int, z_hs: list[int]) -> PredictedValue:
    """Upper bound; an empty attachment contributes 0."""
    return PredictedValue(FormulaId.GeneralizedCoronaZBound, Kind.UPPER, {"Z": (None, z_g + sum(z_hs))})


def corona_corollary_values(base: str, t: int, s: list[int], q: list[int]) -> PredictedValue:
    """``K_t`` or ``P_t`` with paths ``P_{s_i}`` and cliques ``K_{q_j}`` attached to distinct vertices."""
    f = FormulaId.CoronaCorollaryValues
    _require(base in ("K", "P"), f, "base is K_t or P_t")
    _require(all(x >= 2 for x in s + q), f, "attached paths and cliques have at least 2 vertices")
    _require(len(s) + len(q) <= t, f, "at most one attachment per base vertex")
    r, ell = len(s), len(q)
    if base == "K":
        z = t - 1 - ell + sum(q) + r
        cc = 1 + ell + sum(s) - r
    else:
        z = 1 - ell + sum(q) + r
        cc = t - 1 + ell + sum(s) - r
    return _exact(f, base, Z=z, M=z, mr=cc, CC=cc)


def clique_chain_zm(sizes: list[int], overlaps: list[int]) -> PredictedValue:
    """Linear chain of cliques ``K_{n_1}, ..., K_{n_N}`` with consecutive overlaps ``k_{i,i+1}``."""
    f = FormulaId.CliqueChainZM
    N = len(sizes)
    _require(N >= 1, f, "at least one clique")
    _require(len(overlaps) == N - 1, f, "one overlap per consecutive pair")
    _require(all(k >= 1 for k in overlaps), f, "consecutive cliques intersect")
    for i, k in enumerate(overlaps):
        _require(k < min(sizes[i], sizes[i + 1]), f, "no clique contained in its neighbour")
    for i in range(1, N - 1):
        _require(overlaps[i - 1] + overlaps[i] <= sizes[i], f, "no vertex in three cliques")
    z = sum(sizes) - sum(overlaps) - N
    return _exact(f, Z=z, M=z, mr=N, CC=N)


def tree_all(n: int, p: int) -> PredictedValue:
    return _exact(FormulaId.TreeAll, Z=p, M=p, Zplus=1, mr=n - p)


def block_cycle_z_eq_p(p: int) -> PredictedValue:
    return _exact(FormulaId.BlockCycleZeqP, Z=p)


def outerplanar_zp_eq_t(t: int) -> PredictedValue:
    return _exact(FormulaId.OuterplanarZpEqT, Zplus=t)


def cluster_zplus_t(k: int, s: int) -> PredictedValue:
    """Z+ for every k; T only for even k (odd k is covered by ``odd_ktree_t``)."""
    f = FormulaId.ClusterZplusT
    _require(k >= 1, f, "k >= 1")
    _require(1 <= s <= k + 1, f, "1 <= |S| <= k+1")
    vals = {"Zplus": k + 1 if s >= 3 else k}
    if k % 2 == 0:
        half = math.ceil((k + 1) / 2)
        vals["T"] = half + 1 if s == k + 1 else half
    return _exact(f, **vals)


def odd_ktree_t(k: int) -> PredictedValue:
    f = FormulaId.OddKTreeT
    _require(k % 2 == 1, f, "k odd")
    return _exact(f, T=(k + 1) // 2)


def coalescence_kn(value: int, k: int, param: str = "T") -> PredictedValue:
    """``2 x - k`` for x in {T, Zplus}, k the largest number of trees meeting the shared clique."""
    f = FormulaId.CoalescenceKn
    _require(param in ("T", "Zplus"), f, "parameter is T or Zplus")
    _require(0 <= k <= value, f, "0 <= k <= value")
    return _exact(f, param, **{param: 2 * value - k})


def vertex_sum_zplus_t(zp_g: int, zp_h: int, t_g: int, t_h: int) -> PredictedValue:
    return _exact(FormulaId.VertexSumZplusT, Zplus=zp_g + zp_h - 1, T=t_g + t_h - 1)


def tree_vertex_sum_zplus(zp_g: int, t_g: int) -> PredictedValue:
    return _exact(FormulaId.TreeVertexSumZplus, Zplus=zp_g, T=t_g)


def p2_bound(m: int, n: int) -> PredictedValue:
    f = FormulaId.P2Bound
    _require(m >= 1 and n >= 1, f, "both covering paths non-empty")
    return PredictedValue(f, Kind.INTERVAL, {"Z": (2, min(m, n) + 1)})


_DISPATCH = {
    FormulaId.MultipartiteZ: multipartite_z,
    FormulaId.JoinZ: join_z,
    FormulaId.VertexSumZ: vertex_sum_z,
    FormulaId.VertexSumP: vertex_sum_p,
    FormulaId.GeneralizedCoronaZBound: generalized_corona_z_bound,
    FormulaId.CoronaCorollaryValues: corona_corollary_values,
    FormulaId.CliqueChainZM: clique_chain_zm,
    FormulaId.TreeAll: tree_all,
    FormulaId.BlockCycleZeqP: block_cycle_z_eq_p,
    FormulaId.OuterplanarZpEqT: outerplanar_zp_eq_t,
    FormulaId.ClusterZplusT: cluster_zplus_t,
    FormulaId.OddKTreeT: odd_ktree_t,
    FormulaId.CoalescenceKn: coalescence_kn,
    FormulaId.VertexSumZplusT: vertex_sum_zplus_t,
    FormulaId.TreeVertexSumZplus: tree_vertex_sum_zplus,
    FormulaId.P2Bound: p2_bound,
}


def predict(fid: FormulaId, **params) -> PredictedValue:
    return _DISPATCH[fid](**params)
