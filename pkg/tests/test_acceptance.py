"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import math
import random
from dataclasses import replace
from itertools import combinations

from forcinglab import corpus as corp
from forcinglab import families as fam
from forcinglab.forcing import Rule, derived_set, sequential_derived
from forcinglab.graph import disjoint_union, join
from forcinglab.io import graph6_decode, graph6_encode
from forcinglab.solvers import DEFAULT_BUDGETS, Param, cached
from forcinglab.spectral import (adjacency_spectrum, inertia_alpha_upper, mr_bounds,
                                 nullity_lower_bound_M, tridiagonal_power_check)
from forcinglab.verifier import VerifierConfig, probe_conjectures, run_checks, run_pairs

from conftest import ACCEPTANCE_LINES


def record(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def val(g, p):
    return cached(g, p).value


def report_failures(rep) -> dict:
    return {cid: r.failed for cid, r in rep.checks.items() if r.failed}


def multipartite_profiles(max_total: int):
    def parts(total, largest):
        if total == 0:
            yield []
            return
        for first in range(min(total, largest), 0, -1):
            for rest in parts(total - first, first):
                yield [first] + rest

    for total in range(2, max_total + 1):
        for p in parts(total, total):
            if len(p) >= 2 and max(p) > 1:
                yield p


def test_criterion_01_family_values():
    bad = []
    for n in range(1, 11):
        if val(fam.path(n), Param.Z) != 1:
            bad.append(f"P{n}")
        if n >= 3 and val(fam.cycle(n), Param.Z) != 2:
            bad.append(f"C{n}")
        if n >= 2 and val(fam.complete(n), Param.Z) != n - 1:
            bad.append(f"K{n}")
    profiles = list(multipartite_profiles(9))
    for p in profiles:
        if val(fam.complete_multipartite(p), Param.Z) != sum(p) - 2:
            bad.append(f"K{p}")
    trees = corp.trees_up_to(9)
    for t in trees:
        if val(t, Param.ZPLUS) != 1 or val(t, Param.Z) != val(t, Param.P):
            bad.append(graph6_encode(t))
    penta = fam.corona(fam.cycle(5), fam.complete(1))
    if val(penta, Param.Z) != 3:
        bad.append("penta-sun")
    record(1, not bad, f"{len(profiles)} multipartite profiles, {len(trees)} trees; mismatches {bad}")


def test_criterion_02_join():
    rng = random.Random(2)
    bad, tried = [], 0
    for _ in range(100):
        gs = [fam.random_connected_gnp(rng.randint(2, 7), rng.choice((0.3, 0.5, 0.7)), rng.randrange(2**32))
              for _ in range(2)]
        g, h = gs
        tried += 1
        pred = min(h.n + val(g, Param.Z), g.n + val(h, Param.Z))
        if val(join(g, h), Param.Z) != pred:
            bad.append((graph6_encode(g), graph6_encode(h)))
    wheels = [val(join(fam.complete(1), fam.cycle(k)), Param.Z) for k in range(3, 9)]
    wheel_ok = wheels[1:] == [3] * 5 and val(fam.wheel(5), Param.Z) == 3
    record(2, not bad and wheel_ok, f"{tried} pairs, failures {bad}; K1 v C_k for k=4..8 gives {wheels[1:]}")


def test_criterion_03_vertex_sums():
    cfg = VerifierConfig(budgets=replace(DEFAULT_BUDGETS, paths=20, trees=20))
    pairs = [(p.g, p.h, p.v_g, p.v_h) for p in corp.vertex_sum_pairs(100, (2, 10), 3)]
    rep = run_pairs(pairs, ["C14", "C15", "C24"], cfg)
    fails = report_failures(rep)
    counts = {cid: (r.applicable, r.failed, r.skipped, r.unmatched) for cid, r in rep.checks.items()}
    record(3, not fails, f"(applicable, failed, skipped, no case) {counts}")


def test_criterion_04_block_cycle():
    graphs = corp.block_cycle_corpus(100, 14, 4)
    rep = run_checks(graphs, ["C04"])
    r = rep.checks["C04"]
    ok = r.failed == 0 and r.applicable == 100 and max(g.n for g in graphs) <= 14
    record(4, ok, f"applicable {r.applicable}, failed {r.failed}, max n {max(g.n for g in graphs)}")


def test_criterion_05_outerplanar():
    graphs = corp.outerplanar_corpus(100, (3, 12), 5)
    rep = run_checks(graphs, ["C23", "C22"])
    a, b = rep.checks["C23"], rep.checks["C22"]
    ok = a.failed == 0 and b.failed == 0 and a.applicable == 100 and b.skipped == 0
    record(5, ok, f"C23 applicable {a.applicable} failed {a.failed}; "
                  f"C22 applicable {b.applicable} failed {b.failed} skipped {b.skipped}")


def test_criterion_06_clusters():
    bad = []
    rows = 0
    for k in (2, 3, 4):
        for s in range(1, k + 2):
            g = fam.ktree_cluster(k, list(range(s)))
            rows += 1
            zp, t = val(g, Param.ZPLUS), val(g, Param.T)
            want_zp = k + 1 if s >= 3 else k
            if k % 2 == 0:
                want_t = math.ceil((k + 1) / 2) + (1 if s == k + 1 else 0)
            else:
                want_t = (k + 1) // 2
            if (zp, t) != (want_zp, want_t):
                bad.append((k, s, zp, t, want_zp, want_t))
    rep = run_checks([], ["C26"])
    ok = not bad and rep.checks["C26"].failed == 0
    record(6, ok, f"{rows} clusters, mismatches {bad}; C26 family instances failed {rep.checks['C26'].failed}")


def test_criterion_07_inequalities():
    graphs = corp.gnp_corpus(500, (1, 10), (0.2, 0.4, 0.6), 7)
    ids = ["C01", "C07", "C08", "C19", "C20", "C27", "C28", "C10", "C11", "C12", "C13"]
    rep = run_checks(graphs, ids)
    fails = report_failures(rep)
    skipped = sum(r.skipped for r in rep.checks.values())
    record(7, not fails and skipped == 0, f"500 graphs, failures {fails}, skipped {skipped}")


def test_criterion_08_reversal_and_order_independence():
    graphs = corp.gnp_corpus(60, (1, 12), (0.2, 0.4, 0.6), 8) + corp.trees_up_to(7)
    rep = run_checks(graphs, ["C05"])
    r = rep.checks["C05"]
    rng = random.Random(8)
    mismatches = 0
    for g in graphs:
        b = rng.getrandbits(g.n) if g.n else 0
        for rule in (Rule.STANDARD, Rule.PSD):
            want = derived_set(g, b, rule)
            for _ in range(20):
                if sequential_derived(g, b, rule, rng) != want:
                    mismatches += 1
    record(8, r.failed == 0 and r.skipped == 0 and mismatches == 0,
           f"C05 applicable {r.applicable} failed {r.failed}; order mismatches {mismatches}")


def _spectrum_matches(g, expected: dict[float, int]) -> bool:
    got = adjacency_spectrum(g).eigenvalues
    if len(got) != len(expected):
        return False
    return all(abs(v - e) <= 1e-8 and m == expected[e] for (v, m), e in zip(got, sorted(expected)))


def test_criterion_09_spectral():
    bad = []
    for n in range(2, 11):
        if not _spectrum_matches(fam.complete(n), {-1.0: n - 1, float(n - 1): 1}):
            bad.append(f"K{n}")
    for m in range(1, 6):
        for n in range(m, 6):
            r = math.sqrt(m * n)
            exp = {-r: 1, r: 1}
            if m + n > 2:
                exp[0.0] = m + n - 2
            if not _spectrum_matches(fam.complete_multipartite([m, n]), exp):
                bad.append(f"K{m},{n}")
    tri = [(n, s) for n in range(1, 13) for s in range(50) if not tridiagonal_power_check(n, s)]
    graphs = corp.gnp_corpus(200, (1, 10), (0.2, 0.4, 0.6), 9) + corp.trees_up_to(8)
    inertia = [graph6_encode(g) for g in graphs if inertia_alpha_upper(g) < val(g, Param.ALPHA)]
    nullity = [graph6_encode(g) for g in graphs if nullity_lower_bound_M(g) > val(g, Param.Z)]
    ok = not (bad or tri or inertia or nullity)
    record(9, ok, f"spectra {bad}; tridiagonal failures {len(tri)}; inertia {inertia}; nullity {nullity}")


def test_criterion_10_mr_intervals():
    bowtie = fam.clique_chain([3, 3], [1])
    b = mr_bounds(bowtie)
    trees = corp.trees_up_to(9)
    tree_bad = [graph6_encode(t) for t in trees
                if (mr_bounds(t).lo, mr_bounds(t).hi) != (t.n - val(t, Param.P),) * 2]
    penta = mr_bounds(fam.corona(fam.cycle(5), fam.complete(1)))
    rng = random.Random(10)
    add_bad = []
    for _ in range(50):
        g = fam.random_gnp(rng.randint(1, 7), 0.4, rng.randrange(2**32))
        h = fam.random_gnp(rng.randint(1, 7), 0.4, rng.randrange(2**32))
        u, a, c = mr_bounds(disjoint_union(g, h)), mr_bounds(g), mr_bounds(h)
        if (u.lo, u.hi) != (a.lo + c.lo, a.hi + c.hi):
            add_bad.append((graph6_encode(g), graph6_encode(h)))
    ok = (b.lo, b.hi) == (2, 2) and not tree_bad and 8 in penta and not add_bad
    record(10, ok, f"bowtie [{b.lo},{b.hi}]; trees off {len(tree_bad)}/{len(trees)}; "
                   f"penta-sun [{penta.lo},{penta.hi}]; additivity failures {len(add_bad)}")


def test_criterion_11_graph6():
    lines = ["?"] + [graph6_encode(g) for g in corp.gnp_corpus(699, (1, 20), (0.1, 0.5, 0.9), 11)]
    lines += [graph6_encode(g) for g in corp.trees_up_to(8)][:300]
    lines += [graph6_encode(fam.random_gnp(70, 0.3, s)) for s in range(1000 - len(lines))]
    lines = lines[:1000]
    roundtrip = all(graph6_encode(graph6_decode(s)) == s for s in lines)
    k2, e2, k4 = graph6_decode("A_"), graph6_decode("A?"), graph6_decode("C~")
    hand = ((k2.n, k2.edges()) == (2, [(0, 1)]) and (e2.n, e2.m) == (2, 0)
            and (k4.n, k4.edges()) == (4, list(combinations(range(4), 2))))
    record(11, roundtrip and hand and len(lines) == 1000, f"{len(lines)} lines round-trip {roundtrip}; "
                                                          f"hand encodings {hand}")


def test_criterion_12_conjecture_probe():
    gs = corp.zp_equal_family(10, 12, 120)
    rng = random.Random(12)
    pairs = [(gs[i], gs[i + 1], rng.randrange(gs[i].n), rng.randrange(gs[i + 1].n))
             for i in range(0, len(gs), 2)]
    cfg = VerifierConfig(budgets=replace(DEFAULT_BUDGETS, paths=20, trees=20))
    rep = run_pairs(pairs, ["conj_ZP_vertex_sum"], cfg, probes=True)
    r = rep.probes["conj_ZP_vertex_sum"]
    full = probe_conjectures([], ["conj_k_trees"])
    record(12, r.failed == 0 and r.skipped == 0,
           f"vertex sums supported {r.passed}, violations {r.failed}, skipped {r.skipped}; "
           f"k-tree chains supported {full.probes['conj_k_trees'].passed}/{full.probes['conj_k_trees'].tested}")
