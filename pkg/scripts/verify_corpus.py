"""Run every theorem check and conjecture probe over the standard seeded corpora.

Writes one JSON report per corpus to the output directory and prints the
coverage tables. Exit status is 1 when any theorem check has a counterexample.

    python3 scripts/verify_corpus.py --out reports --threads 2
"""

import argparse
import json
from dataclasses import replace
from pathlib import Path

from forcinglab import corpus as corp
from forcinglab.solvers import DEFAULT_BUDGETS
from forcinglab.verifier import VerifierConfig, probe_conjectures, run_checks, run_pairs


def corpora(seed: int) -> dict:
    return {
        "trees": corp.trees_up_to(9),
        "gnp": corp.gnp_corpus(300, (1, 10), (0.2, 0.4, 0.6), seed),
        "block-cycle": corp.block_cycle_corpus(100, 14, seed),
        "outerplanar": corp.outerplanar_corpus(100, (3, 12), seed),
    }


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="reports")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cfg = VerifierConfig(seed=args.seed, threads=args.threads,
                         budgets=replace(DEFAULT_BUDGETS, paths=20, trees=20))
    failed = False
    for name, graphs in corpora(args.seed).items():
        rep = run_checks(graphs, cfg=cfg, families=name == "gnp")
        probes = probe_conjectures(graphs, cfg=cfg, families=name == "gnp")
        doc = {**rep.to_json(), "conjectures": probes.to_json()["conjectures"]}
        (out / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")
        print(f"== {name}: {len(graphs)} graphs, {rep.runtime_seconds + probes.runtime_seconds:.1f}s")
        print(rep.coverage_table())
        failed |= not rep.ok
    pairs = [(p.g, p.h, p.v_g, p.v_h) for p in corp.vertex_sum_pairs(100, (2, 10), args.seed)]
    rep = run_pairs(pairs, ["C14", "C15", "C24"], cfg)
    (out / "vertex-sums.json").write_text(json.dumps(rep.to_json(), indent=2) + "\n")
    print("== vertex sums")
    print(rep.coverage_table())
    failed |= not rep.ok
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
