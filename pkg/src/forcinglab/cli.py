"""Command-line front end: ``compute``, ``verify`` and ``generate``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field, replace

from . import corpus as corp
from . import families as fam
from .graph import Graph, GraphError
from .io import edgelist_encode, graph6_encode, read_corpus
from .solvers import DEFAULT_BUDGETS, BudgetExceeded, Budgets, Param, solve
from .spectral import M_bounds, adjacency_spectrum, mr_bounds
from .structure import analyze
from .verifier import CATALOG, PROBES, VerifierConfig, probe_conjectures, run_checks

log = logging.getLogger("forcinglab")

PARAM_ORDER = (Param.Z, Param.ZPLUS, Param.P, Param.T, Param.CHI, Param.ALPHA, Param.CC)


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    out: str | None = None
    fmt: str = "graph6"
    seed: int = 0
    budgets: Budgets = DEFAULT_BUDGETS
    checks: list[str] | None = None
    threads: int = 1
    json: bool = False
    witness: bool = False
    family: str | None = None
    # graph6 strings given directly on the command line
    literals: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be positive")


# ---------------------------------------------------------------- compute


def compute_record(g: Graph, budgets: Budgets = DEFAULT_BUDGETS, witness: bool = False) -> dict:
    rec: dict = {"graph6": graph6_encode(g), "n": g.n, "m": g.m, "structure": analyze(g).to_json()}
    params = {}
    for p in PARAM_ORDER:
        try:
            cv = solve(g, p, budgets)
        except BudgetExceeded:
            params[p.value] = "skipped: budget"
            continue
        params[p.value] = cv.to_json() if witness else cv.value
    rec["parameters"] = params
    rec["spectrum"] = adjacency_spectrum(g).to_json()
    rec["mr"] = mr_bounds(g, budgets).to_json()
    rec["M"] = M_bounds(g, budgets).to_json()
    return rec


def _render_text(rec: dict) -> str:
    lines = [f"graph {rec['graph6']}  n={rec['n']} m={rec['m']}"]
    tags = rec["structure"]
    flags = [k for k, v in tags.items() if v is True]
    lines.append(f"  structure: {', '.join(flags) or '-'}; diameter {tags['diameter']}, "
                 f"degeneracy {tags['degeneracy']}, connectivity {tags['vertex_connectivity']}")
    for name, v in rec["parameters"].items():
        if isinstance(v, dict):
            lines.append(f"  {name} = {v['value']}  witness {v['witness']}")
        else:
            lines.append(f"  {name} = {v}")
    eig = ", ".join(f"{val:g}^{mult}" for val, mult in rec["spectrum"]["eigenvalues"])
    lines.append(f"  spectrum: {eig}")
    for key in ("mr", "M"):
        iv = rec[key]
        prov = "; ".join(f"{name} ({side}) {val}" for name, side, val in iv["provenance"])
        lines.append(f"  {key} in [{iv['lo']}, {iv['hi']}]  from {prov}")
    return "\n".join(lines)


def _load_graphs(cfg: RunConfig) -> tuple[list[Graph], list[dict]]:
    graphs: list[Graph] = []
    errors: list[dict] = []
    if cfg.literals:
        gs, errs = read_corpus("\n".join(cfg.literals))
        graphs += gs
        errors += [{"file": "<argv>", "line": e.line, "text": e.text, "error": e.message} for e in errs]
    if cfg.family:
        graphs.append(fam.parse_family(cfg.family))
    for path in cfg.inputs:
        text = sys.stdin.read() if path == "-" else open(path, encoding="ascii").read()
        gs, errs = read_corpus(text, cfg.fmt)
        graphs += gs
        errors += [{"file": path, "line": e.line, "text": e.text, "error": e.message} for e in errs]
    for e in errors:
        log.warning("%s:%s: %s", e["file"], e["line"], e["error"])
    return graphs, errors


def cmd_compute(cfg: RunConfig) -> int:
    graphs, errors = _load_graphs(cfg)
    if errors and not graphs:
        return 2
    recs = [compute_record(g, cfg.budgets, cfg.witness) for g in graphs]
    if cfg.json:
        text = json.dumps({"schema": 1, "graphs": recs}, indent=2)
    else:
        text = "\n\n".join(_render_text(r) for r in recs)
    _emit(text, cfg.out)
    return 0


# ---------------------------------------------------------------- verify


def cmd_verify(cfg: RunConfig) -> int:
    graphs, errors = _load_graphs(cfg)
    ids = cfg.checks
    check_ids = None if ids is None else [i for i in ids if i in CATALOG]
    probe_ids = None if ids is None else [i for i in ids if i in PROBES]
    unknown = [] if ids is None else [i for i in ids if i not in CATALOG and i not in PROBES]
    if unknown:
        raise SystemExit(f"unknown check ids: {', '.join(unknown)}")
    vcfg = VerifierConfig(budgets=cfg.budgets, seed=cfg.seed, threads=cfg.threads)
    report = run_checks(graphs, check_ids, vcfg) if check_ids != [] else None
    probes = probe_conjectures(graphs, probe_ids, vcfg) if probe_ids != [] else None
    doc = {"schema": 1, "graphs": len(graphs), "malformed": errors,
           "checks": report.to_json(False)["checks"] if report else [],
           "conjectures": probes.to_json(False)["conjectures"] if probes else [],
           "runtime_seconds": round(sum(r.runtime_seconds for r in (report, probes) if r), 3)}
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    if cfg.json:
        print(json.dumps(doc, indent=2))
    else:
        print(f"graphs: {len(graphs)}  malformed lines: {len(errors)}")
        for rep in (report, probes):
            if rep is not None:
                print(rep.coverage_table())
        for rep in (report, probes):
            if rep is None:
                continue
            for rec in list(rep.checks.values()) + list(rep.probes.values()):
                for ce in rec.counterexamples:
                    kind = "FINDING" if rec.check_id in PROBES else "COUNTEREXAMPLE"
                    print(f"{kind} {rec.check_id}: {json.dumps(ce, sort_keys=True)}")
    return 1 if report is not None and not report.ok else 0


# ---------------------------------------------------------------- generate


def _generate(args: argparse.Namespace) -> list[Graph]:
    fam_name = args.what
    if fam_name == "trees":
        return corp.trees_up_to(args.max_n)
    if fam_name == "gnp":
        return [fam.random_gnp(args.n, args.p, seed) for seed in _seeds(args)]
    if fam_name == "connected-gnp":
        return [fam.random_connected_gnp(args.n, args.p, seed) for seed in _seeds(args)]
    if fam_name == "outerplanar":
        return [fam.random_outerplanar(args.n, seed) for seed in _seeds(args)]
    if fam_name == "blockcycle":
        return corp.block_cycle_corpus(args.count, args.max_n, args.seed)
    if fam_name == "cluster":
        return [fam.ktree_cluster(args.k, list(range(args.attachments)))]
    if fam_name == "cluster-chain":
        return [corp.cluster_chain(args.k, args.t)]
    if fam_name == "clique-chain":
        return [fam.clique_chain(_ints(args.sizes), _ints(args.overlaps))]
    if fam_name == "corona":
        base = fam.parse_family(args.base)
        return [fam.corona(base, fam.parse_family(args.attached))]
    if fam_name == "vertex-sums":
        return [inst.graph for inst in corp.vertex_sum_pairs(args.count, (2, args.max_n), args.seed)]
    raise SystemExit(f"unknown family {fam_name}")


def _seeds(args) -> list[int]:
    import random

    rng = random.Random(args.seed)
    return [rng.randrange(2**32) for _ in range(args.count)]


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()] if text else []


def cmd_generate(args: argparse.Namespace, cfg: RunConfig) -> int:
    try:
        graphs = _generate(args)
    except (GraphError, ValueError) as exc:
        print(f"invalid family: {exc}", file=sys.stderr)
        return 2
    enc = graph6_encode if cfg.fmt == "graph6" else edgelist_encode
    sep = "\n" if cfg.fmt == "graph6" else "\n\n"
    text = sep.join(enc(g) for g in graphs)
    _emit(text + "\n" if graphs else "", cfg.out, newline=False)
    return 0


def _emit(text: str, out: str | None, newline: bool = True) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + ("\n" if newline else ""))
    else:
        sys.stdout.write(text + ("\n" if newline else ""))


# ---------------------------------------------------------------- argument parsing


def build_parser() -> argparse.ArgumentParser:
    default_threads = int(os.environ.get("FORCING_LAB_THREADS", "1"))
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", default=[], help="graph6 or edgelist file ('-' for stdin)")
    common.add_argument("--format", default="graph6", choices=("graph6", "edgelist"))
    common.add_argument("--out", help="output path")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=default_threads)
    common.add_argument("--budget-z", type=int, default=DEFAULT_BUDGETS.z)
    common.add_argument("--budget-paths", type=int, default=DEFAULT_BUDGETS.paths)
    common.add_argument("--budget-trees", type=int, default=DEFAULT_BUDGETS.trees)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="forcing-lab", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="parameters of one or more graphs")
    c.add_argument("graphs", nargs="*", help="graph6 strings")
    c.add_argument("--family", help='family description, e.g. "corona C5 K1"')
    c.add_argument("--witness", action="store_true")

    v = sub.add_parser("verify", parents=[common], help="run theorem checks over a corpus")
    v.add_argument("graphs", nargs="*", help="graph6 strings added to the corpus")
    v.add_argument("--checks", help="comma-separated check or probe ids (default: all)")
    v.add_argument("--family", help="add one family graph to the corpus")

    g = sub.add_parser("generate", parents=[common], help="write a corpus")
    g.add_argument("what", choices=("trees", "gnp", "connected-gnp", "outerplanar", "blockcycle", "cluster",
                                    "cluster-chain", "clique-chain", "corona", "vertex-sums"))
    g.add_argument("--max-n", type=int, default=7)
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--p", type=float, default=0.3)
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--t", type=int, default=2)
    g.add_argument("--attachments", type=int, default=1)
    g.add_argument("--sizes", default="")
    g.add_argument("--overlaps", default="")
    g.add_argument("--base", default="C5")
    g.add_argument("--attached", default="K1")
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    budgets = replace(DEFAULT_BUDGETS, z=args.budget_z, zplus=max(args.budget_z, DEFAULT_BUDGETS.zplus),
                      paths=args.budget_paths, trees=args.budget_trees)
    checks = None
    if getattr(args, "checks", None):
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    return RunConfig(command=args.command, inputs=list(args.input), out=args.out, fmt=args.format,
                     seed=args.seed, budgets=budgets, checks=checks, threads=args.threads, json=args.json,
                     witness=getattr(args, "witness", False), family=getattr(args, "family", None),
                     literals=list(getattr(args, "graphs", []) or []))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "compute":
        try:
            return cmd_compute(cfg)
        except GraphError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    if args.command == "verify":
        return cmd_verify(cfg)
    return cmd_generate(args, cfg)


if __name__ == "__main__":
    sys.exit(main())
