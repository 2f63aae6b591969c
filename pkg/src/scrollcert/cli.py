"""Command-line front end: ``scrollcert certify | oracle | examples``.

Exit codes: 0 success, 1 usage or input error, 2 nothing certified / failures found.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .battery import BLOCKS, run_battery
from .certificate import SCHEMA, certificates_to_csv
from .matching import (
    SearchBounds,
    alphabeta_search,
    beta_family_solver,
    minimal_certificate,
    oddg_certificates,
    r0_printed_search,
    solve_bp,
    solve_k1,
    solve_k1_div4,
    solve_k1_div4plus2,
    solve_k1_odd,
    solve_pb,
    sort_certificates,
)
from .oracle import DEFAULT_PRIME, FieldConfig, verify_lemma_suite
from .schubert import SimpleCycle, alphabeta_solutions, partitions_of_codim, remainder_R

EXIT_OK, EXIT_INPUT, EXIT_EMPTY = 0, 1, 2

STRATEGY_CHOICES = (
    "auto",
    "minimal",
    "k1",
    "k1-odd",
    "k1-div4",
    "k1-div4plus2",
    "pb",
    "bp",
    "oddg",
    "beta",
    "alphabeta",
    "r0",
)


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="scrollcert", description="Certify balanced rational scrolls by exact slope matching.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", help="write the report here instead of stdout")

    c = sub.add_parser("certify", help="search for certificates in G(k, n)")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--strategy", choices=STRATEGY_CHOICES, default="auto")
    c.add_argument("--beta", type=int)
    c.add_argument("--alpha", type=int)
    c.add_argument("--max-e0", type=_positive, default=40)
    c.add_argument("--max-e1", type=_positive, default=40)
    c.add_argument("--max-eplus", type=_positive, default=40)
    c.add_argument("--max-r", type=_positive, default=10)
    c.add_argument("--max-partitions", type=_positive, default=50)
    output(c)

    o = sub.add_parser("oracle", help="check the kernel lemmas against the finite-field oracle")
    o.add_argument("--max-rank", type=_nonneg, default=5)
    o.add_argument("--degree-lo", type=int, default=0)
    o.add_argument("--degree-hi", type=int, default=4)
    o.add_argument("--m-max", type=_nonneg, default=10)
    o.add_argument("--ell-max", type=int, default=12)
    o.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--trials", type=_positive, default=3)
    o.add_argument("--workers", type=_positive, default=1)
    output(o)

    e = sub.add_parser("examples", help="run the reference-example battery")
    e.add_argument("--only", help=f"comma-separated blocks from: {', '.join(BLOCKS)}")
    output(e)
    return p


# --- certify ------------------------------------------------------------------


def _codim_targets(k, n, limit):
    A = remainder_R(k, n).R + 1
    return A, partitions_of_codim(k, n, A, limit), alphabeta_solutions(k, n, A).cycles


def collect_certificates(args) -> list:
    k, n, strat = args.k, args.n, args.strategy
    if k < 1 and strat not in ("minimal",):
        raise InputError("k must be at least 1")
    if not 2 * k < n:
        raise InputError(f"need 2k < n, got k={k}, n={n}")
    bounds = SearchBounds(args.max_e0, args.max_e1, args.max_eplus, args.max_r)
    certs = []
    try:
        if strat == "auto":
            certs.append(minimal_certificate(k, n))
            if n == 2 * k + 1:
                certs += oddg_certificates(k, bounds.max_r)
            if k == 1 and n > 3:
                certs += solve_k1(n, bounds)
            A, parts, cycles = _codim_targets(k, n, args.max_partitions)
            for P in parts:
                certs += solve_pb(k, n, P, bounds)
                certs += solve_bp(k, n, P, bounds)
            for cyc in cycles:
                certs += alphabeta_search(k, n, cyc, bounds)
                certs += solve_bp(k, n, cyc, bounds)
        elif strat == "minimal":
            certs.append(minimal_certificate(k, n))
        elif strat == "k1":
            if k != 1:
                raise InputError("strategy k1 needs k = 1")
            certs += solve_k1(n, bounds)
        elif strat in ("k1-odd", "k1-div4", "k1-div4plus2"):
            if k != 1:
                raise InputError(f"strategy {strat} needs k = 1")
            solver = {"k1-odd": solve_k1_odd, "k1-div4": solve_k1_div4, "k1-div4plus2": solve_k1_div4plus2}[strat]
            certs += solver(n, bounds)
        elif strat == "oddg":
            if n != 2 * k + 1:
                raise InputError("strategy oddg needs n = 2k+1")
            certs += oddg_certificates(k, bounds.max_r)
        elif strat == "beta":
            if args.beta is None:
                raise InputError("strategy beta needs --beta")
            certs += beta_family_solver(k, n, args.beta, bounds)
        elif strat in ("pb", "bp"):
            _, parts, cycles = _codim_targets(k, n, args.max_partitions)
            for P in parts:
                certs += (solve_pb if strat == "pb" else solve_bp)(k, n, P, bounds)
            if strat == "bp":
                for cyc in cycles:
                    certs += solve_bp(k, n, cyc, bounds)
        elif strat == "alphabeta":
            if (args.alpha is None) != (args.beta is None):
                raise InputError("give both --alpha and --beta, or neither")
            if args.alpha is not None:
                cycles = [SimpleCycle(k, n, args.alpha, args.beta)]
            else:
                cycles = _codim_targets(k, n, args.max_partitions)[2]
            for cyc in cycles:
                certs += alphabeta_search(k, n, cyc, bounds)
        elif strat == "r0":
            certs += r0_printed_search(k, n, bounds)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return sort_certificates(certs)


def run_certify(args) -> tuple[int, dict]:
    certs = collect_certificates(args)
    records = [c.to_json() for c in certs]
    degrees = sorted({d for c in certs for d in c.degrees()})
    flags = sorted({f for c in certs for f in c.flags})
    report = {
        "schema": SCHEMA,
        "command": "certify",
        "config": {
            "k": args.k,
            "n": args.n,
            "strategy": args.strategy,
            "alpha": args.alpha,
            "beta": args.beta,
            "bounds": {"max_e0": args.max_e0, "max_e1": args.max_e1, "max_eplus": args.max_eplus, "max_r": args.max_r},
            "max_partitions": args.max_partitions,
        },
        "count": len(records),
        "degrees": degrees,
        "flags": flags,
        "certificates": records,
    }
    return (EXIT_OK if records else EXIT_EMPTY), report


# --- oracle and examples ------------------------------------------------------


def run_oracle(args) -> tuple[int, dict]:
    try:
        cfg = FieldConfig(p=args.prime, seed=args.seed, trials=args.trials)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    rep = verify_lemma_suite(args.max_rank, args.degree_lo, args.degree_hi, args.m_max, args.ell_max, cfg, workers=args.workers)
    body = rep.to_json()
    warnings = []
    if rep.checks_run == 0:
        warnings.append("bounds are empty: no checks were run")
    if rep.low_prime_problems:
        warnings.append(f"{rep.low_prime_problems} problems exceed the prime's genericity margin")
    report = {
        "schema": SCHEMA,
        "command": "oracle",
        "config": {
            "max_rank": args.max_rank,
            "degree_lo": args.degree_lo,
            "degree_hi": args.degree_hi,
            "m_max": args.m_max,
            "ell_max": args.ell_max,
        },
        "warnings": warnings,
        **body,
    }
    return (EXIT_OK if not rep.failures else EXIT_EMPTY), report


def run_examples(args) -> tuple[int, dict]:
    only = None
    if args.only:
        only = [s.strip() for s in args.only.split(",") if s.strip()]
        unknown = [s for s in only if s not in BLOCKS]
        if unknown:
            raise InputError(f"unknown example blocks: {unknown}")
    blocks = run_battery(only)
    report = {
        "schema": SCHEMA,
        "command": "examples",
        "config": {"only": only},
        "passed": all(b["passed"] for b in blocks),
        "blocks": blocks,
        "flags": [f for b in blocks for f in b["flags"]],
    }
    return (EXIT_OK if report["passed"] else EXIT_EMPTY), report


# --- output -------------------------------------------------------------------


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if report["command"] == "certify":
        return certificates_to_csv(report["certificates"])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if report["command"] == "examples":
        w.writerow(["block", "check", "passed", "detail"])
        for b in report["blocks"]:
            for c in b["checks"]:
                w.writerow([b["name"], c["name"], c["passed"], json.dumps(c["detail"], sort_keys=True)])
    else:
        w.writerow(["key", "value"])
        for key in sorted(report):
            w.writerow([key, json.dumps(report[key], sort_keys=True)])
    return buf.getvalue()


RUNNERS = {"certify": run_certify, "oracle": run_oracle, "examples": run_examples}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        code, report = RUNNERS[args.command](args)
    except InputError as exc:
        print(f"scrollcert: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = render(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for w in report.get("warnings", []):
        print(f"scrollcert: warning: {w}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
