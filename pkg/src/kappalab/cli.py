"""Command-line front end: generate/export graphs, run the kappa solvers and
lemma verifiers, and reproduce the concluding connectivity table.

Exit codes: 0 success/consistent, 1 I/O failure, 2 usage error,
3 inconclusive (budget exhausted), 4 violation found.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from .graphs import (
    FAMILY_AG,
    FAMILY_SPLIT_STAR,
    build_family,
    to_dimacs,
    to_json_dict,
)
from .kappa import (
    DEFAULT_BUDGET,
    CutWitness,
    construct_paper_cut,
    kappa_ell_exhaustive,
    kappa_ell_witness_search,
    kappa_formula,
    verify_cut,
)
from .lemmas import (
    CUT_RULES,
    rule_for,
    verify_basic_ag,
    verify_claims_123,
    verify_cut_structure,
    verify_neighbor_bounds_ag,
    verify_remark_constructions,
    verify_splitstar_neighbor_bounds,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
EXIT_VIOLATION = 4

# static reference data for the h-extra connectivity column; shown alongside
# the computed kappa_ell column, never computed here
H_EXTRA_REFERENCE = {
    (FAMILY_AG, 1): ("4n-11", lambda n: 4 * n - 11, 5),
    (FAMILY_AG, 2): ("6n-19", lambda n: 6 * n - 19, 5),
    (FAMILY_AG, 3): ("8n-28", lambda n: 8 * n - 28, 5),
    (FAMILY_SPLIT_STAR, 1): ("4n-9", lambda n: 4 * n - 9, 4),
    (FAMILY_SPLIT_STAR, 2): ("6n-16", lambda n: 6 * n - 16, 4),
    (FAMILY_SPLIT_STAR, 3): ("8n-24", lambda n: 8 * n - 24, 4),
}

KAPPA_FORMULA_TEXT = {
    (FAMILY_AG, 3): "4n-10",
    (FAMILY_AG, 4): "6n-16",
    (FAMILY_AG, 5): "8n-24",
    (FAMILY_SPLIT_STAR, 3): "4n-8",
    (FAMILY_SPLIT_STAR, 4): "6n-14",
    (FAMILY_SPLIT_STAR, 5): "8n-20",
}


def _default_budget() -> int:
    env = os.environ.get("KAPPALAB_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


def _resolve_jobs(jobs: int) -> int:
    if jobs == 0:
        return os.cpu_count() or 1
    return jobs


def _canonical_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    G = build_family(args.family, args.n)
    if args.format == "dimacs":
        text = to_dimacs(G)
    else:
        text = _canonical_json({"schema": SCHEMA_VERSION, **to_json_dict(G)})
    _write_output(text, args.output)
    return EXIT_OK


def cmd_kappa(args) -> int:
    G = build_family(args.family, args.n)
    jobs = _resolve_jobs(args.jobs)
    if args.witness:
        result = kappa_ell_witness_search(G, args.ell, args.B)
    else:
        result = kappa_ell_exhaustive(
            G, args.ell, k_max=args.k_max, budget=args.budget, jobs=jobs
        )
    payload = {
        "schema": SCHEMA_VERSION,
        "family": args.family,
        "n": args.n,
        "jobs": jobs,
        **result.to_json_dict(G),
    }
    _write_output(_canonical_json(payload), args.output)
    return EXIT_INCONCLUSIVE if result.inconclusive else EXIT_OK


def _run_verifier(args, jobs: int):
    if args.lemma == "basic":
        return verify_basic_ag(args.n)
    if args.lemma == "neighbor-bounds":
        return verify_neighbor_bounds_ag(
            args.n, args.set_size, trials=args.trials, seed=args.seed
        )
    if args.lemma == "claims":
        return verify_claims_123(args.n)
    if args.lemma == "splitstar-bounds":
        return verify_splitstar_neighbor_bounds(
            args.n, args.set_size, trials=args.trials, seed=args.seed
        )
    if args.lemma == "remark":
        return verify_remark_constructions(args.n)
    if args.lemma == "cut-structure":
        G = build_family(args.family, args.n)
        rule = CUT_RULES[args.rule] if args.rule else rule_for(
            args.family, args.n, args.bound
        )
        return verify_cut_structure(
            G,
            args.bound,
            rule,
            mode=args.mode,
            trials=args.trials,
            seed=args.seed,
            jobs=jobs,
            budget=args.budget,
        )
    raise ValueError(f"unknown lemma id {args.lemma!r}")


def cmd_verify(args) -> int:
    jobs = _resolve_jobs(args.jobs)
    if args.lemma == "cut-structure" and args.bound is None:
        raise ValueError("cut-structure requires --bound")
    if args.lemma in ("neighbor-bounds", "splitstar-bounds") and args.set_size is None:
        raise ValueError(f"{args.lemma} requires --set-size")
    report = _run_verifier(args, jobs)
    payload = {"schema": SCHEMA_VERSION, "jobs": jobs, **report.to_json_dict()}
    _write_output(_canonical_json(payload), args.output)
    return EXIT_VIOLATION if report.violations else EXIT_OK


def _table_rows(families, n_max, ells):
    for family in families:
        family_cap = 8 if family == FAMILY_AG else 7
        top = min(n_max, family_cap)
        for ell in ells:
            n_min = 5 if (family == FAMILY_AG and ell == 5) else 4
            for n in range(n_min, top + 1):
                yield family, ell, n


def _table_row(G, family, ell, n, budget, jobs):
    formula = kappa_formula(family, ell, n)
    exhaustive_cost = sum(math.comb(G.vertex_count, k) for k in range(formula + 1))
    if exhaustive_cost <= budget:
        result = kappa_ell_exhaustive(G, ell, k_max=formula, budget=budget, jobs=jobs)
        value, tier = result.value, result.tier.value
    else:
        witness = construct_paper_cut(G, ell)
        recheck = verify_cut(G, witness.fault, ell)
        assert isinstance(recheck, CutWitness)
        value, tier = len(witness.fault), "WitnessUpperBound"
    h = ell - 2
    h_text, h_fn, h_min_n = H_EXTRA_REFERENCE[(family, h)]
    return {
        "family": family,
        "ell": ell,
        "n": n,
        "formula": KAPPA_FORMULA_TEXT[(family, ell)],
        "formula_value": formula,
        "value": value,
        "tier": tier,
        "match": value == formula,
        "h": h,
        "h_extra_formula": h_text,
        "h_extra_value": h_fn(n) if n >= h_min_n else "",
        "h_extra_note": "not computed (static reference)",
    }


TABLE_FIELDS = [
    "family", "ell", "n", "formula", "formula_value", "value", "tier",
    "match", "h", "h_extra_formula", "h_extra_value", "h_extra_note",
]


def cmd_table(args) -> int:
    jobs = _resolve_jobs(args.jobs)
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    for f in families:
        if f not in (FAMILY_AG, FAMILY_SPLIT_STAR):
            raise ValueError(f"unknown family {f!r}")
    ells = sorted(int(e) for e in args.ells.split(","))
    if any(e not in (3, 4, 5) for e in ells):
        raise ValueError("ells must be drawn from {3, 4, 5}")
    graphs = {}
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
    writer.writeheader()
    for family, ell, n in _table_rows(families, args.n_max, ells):
        if (family, n) not in graphs:
            graphs[(family, n)] = build_family(family, n)
        writer.writerow(
            _table_row(graphs[(family, n)], family, ell, n, args.budget, jobs)
        )
    _write_output(buf.getvalue(), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kappalab",
        description="Alternating group graphs and split-stars: construction, "
        "component connectivity, and structural verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_family=True):
        if with_family:
            p.add_argument("--family", choices=[FAMILY_AG, FAMILY_SPLIT_STAR], required=True)
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--output", default=None, help="output path (default: stdout)")
        p.add_argument("--jobs", type=int, default=1, help="worker count; 0 = auto")
        p.add_argument("--budget", type=int, default=_default_budget(),
                       help="explored-subset budget")
        p.add_argument("--seed", type=int, default=0)

    p_gen = sub.add_parser("gen", help="build and export a graph")
    add_common(p_gen)
    p_gen.add_argument("--format", choices=["dimacs", "json"], default="json")
    p_gen.set_defaults(func=cmd_gen)

    p_kappa = sub.add_parser("kappa", help="compute kappa_ell")
    add_common(p_kappa)
    p_kappa.add_argument("--ell", type=int, required=True)
    tier = p_kappa.add_mutually_exclusive_group()
    tier.add_argument("--exhaustive", action="store_true", default=True)
    tier.add_argument("--witness", action="store_true", default=False)
    p_kappa.add_argument("--B", type=int, default=1, help="witness part size bound")
    p_kappa.add_argument("--k-max", type=int, default=None)
    p_kappa.set_defaults(func=cmd_kappa)

    p_verify = sub.add_parser("verify", help="run a lemma verifier")
    add_common(p_verify)
    p_verify.add_argument(
        "--lemma",
        required=True,
        choices=["basic", "neighbor-bounds", "claims", "cut-structure",
                 "splitstar-bounds", "remark"],
    )
    p_verify.add_argument("--set-size", type=int, default=None)
    p_verify.add_argument("--bound", type=int, default=None)
    p_verify.add_argument("--rule", choices=sorted(CUT_RULES), default=None)
    p_verify.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p_verify.add_argument("--trials", type=int, default=1_000_000)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="reproduce the kappa_ell table as CSV")
    add_common(p_table, with_family=False)
    p_table.add_argument("--families", default="ag,s2")
    p_table.add_argument("--ells", default="3,4,5")
    p_table.add_argument("--n-max", type=int, default=8)
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"kappalab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"kappalab: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
