"""
Command-line front end.

Results go to standard output (lines, CSV or a versioned JSON report);
diagnostics go to standard error through logging. Exit codes: 0 when every
check passed, 1 when a check failed, 2 on usage or precondition errors,
3 when the genus cap is exceeded.
"""

import argparse
import logging
import os
import sys

import pandas as pd

import config
from wpgap.bounds import (
    TPolicy, bound_set, exact_min_genus, genus_threshold, homma_ommori_lower_Wn, omega,
    pflaum_N, theorem_pipeline, verify_lemma,
)
from wpgap.enumeration import EnumerationFilter, enumerate_filtered
from wpgap.errors import GenusTooLarge, PreconditionViolated, WpgapError
from wpgap.hyperelliptic import LemmaClass, property_report
from wpgap.semigroup import even_gap_count, from_gaps, oliveira_check, weight
from wpgap.utils import dump_report, format_gap_line, parse_gap_line, parse_int_range, setup_logging

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_GENUS_CAP = 3

ENUMERATE_COLUMNS = ["genus", "multiplicity", "conductor", "weight", "gaps"]
THRESHOLD_COLUMNS = ["gamma", "paper_threshold", "exact_min_genus"]
BOUNDS_COLUMNS = ["g", "c1", "c2", "c3", "N", "omega1"]
PFLAUM_COLUMNS = ["g", "n", "omega_n", "W_lower", "N", "holds"]


def _interval(text: str) -> tuple[int, int]:
    try:
        return parse_int_range(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _write_csv(rows: list[dict], columns: list[str]):
    df = pd.DataFrame(rows, columns=columns)
    for column in df.columns:
        if df[column].dtype == bool:
            df[column] = df[column].map({True: "true", False: "false"})
    sys.stdout.write(df.to_csv(index=False, lineterminator="\n"))


def _emit_report(body: dict):
    sys.stdout.write(dump_report(body) + "\n")


def _cache_dir(args) -> str | None:
    return args.cache_dir or os.environ.get(config.CACHE_DIR_ENV) or None

# --- Commands ---

def cmd_enumerate(args) -> int:
    f = EnumerationFilter(min_multiplicity=args.min_mult, even_gap_count=args.even_gaps,
                          required_interval=args.require_interval, required_gap_in=args.require_gap_in)
    semigroups = enumerate_filtered(args.genus, f, jobs=args.jobs, cache_dir=_cache_dir(args), sort=args.sorted)

    if args.format == "lines":
        for S in semigroups:
            sys.stdout.write(format_gap_line(S.gaps) + "\n")
        return EXIT_OK

    records = [{"genus": S.genus, "multiplicity": S.multiplicity, "conductor": S.conductor,
                "weight": weight(S), "gaps": list(S.gaps)} for S in semigroups]
    if args.format == "json":
        _emit_report({"command": "enumerate", "genus": args.genus, "filter": f.canonical(),
                      "count": len(records), "semigroups": records})
    else:
        for record in records:
            record["gaps"] = ";".join(str(x) for x in record["gaps"])
        _write_csv(records, ENUMERATE_COLUMNS)
    return EXIT_OK


def cmd_weight(args) -> int:
    S = from_gaps(parse_gap_line(args.gaps))
    try:
        oliveira = oliveira_check(S)
    except PreconditionViolated:
        oliveira = None
    _emit_report({"command": "weight", "gaps": list(S.gaps), "genus": S.genus, "multiplicity": S.multiplicity,
                  "conductor": S.conductor, "weight": weight(S), "even_gaps": even_gap_count(S),
                  "oliveira": oliveira})
    return EXIT_OK


def cmd_verify_lemma(args) -> int:
    lemma_class = LemmaClass(args.lemma_class)
    start, end = args.genus_range
    verdicts = [verify_lemma(g, args.gamma, lemma_class, jobs=args.jobs, cache_dir=_cache_dir(args))
                for g in range(start, end + 1)]
    all_hold = all(v.holds for v in verdicts)
    _emit_report({"command": "verify lemma", "gamma": args.gamma, "class": lemma_class.value,
                  "all_hold": all_hold, "results": [v.to_dict() for v in verdicts]})
    return EXIT_OK if all_hold else EXIT_CHECK_FAILED


def cmd_verify_theorem(args) -> int:
    start, end = (args.genus, args.genus) if args.genus is not None else args.genus_range
    policy = TPolicy(args.t_policy)
    reports = [theorem_pipeline(g, args.gamma, policy) for g in range(start, end + 1)]
    all_hold = all(r.holds for r in reports)
    _emit_report({"command": "verify theorem", "gamma": args.gamma, "t_policy": policy.value,
                  "all_hold": all_hold, "results": [r.to_dict() for r in reports]})
    return EXIT_OK if all_hold else EXIT_CHECK_FAILED


def cmd_verify_properties(args) -> int:
    findings = property_report(args.genus_range, args.gamma_range, jobs=args.jobs, cache_dir=_cache_dir(args))
    _emit_report({"command": "verify properties", "genus_range": list(args.genus_range),
                  "gamma_range": list(args.gamma_range), "all_hold": not findings,
                  "findings": [finding.to_dict() for finding in findings]})
    return EXIT_CHECK_FAILED if findings else EXIT_OK


def cmd_table_thresholds(args) -> int:
    start, end = args.gamma_range
    rows = [{"gamma": gamma, "paper_threshold": genus_threshold(gamma),
             "exact_min_genus": exact_min_genus(gamma, args.g_max)} for gamma in range(start, end + 1)]
    # Keep integers integral when a scan finds nothing.
    for row in rows:
        if row["exact_min_genus"] is None:
            row["exact_min_genus"] = ""
    _write_csv(rows, THRESHOLD_COLUMNS)
    return EXIT_OK


def cmd_table_bounds(args) -> int:
    start, end = args.genus_range
    rows = []
    for g in range(start, end + 1):
        bounds = bound_set(g, args.gamma, 1)
        rows.append({"g": g, "c1": bounds.c1, "c2": bounds.c2, "c3": bounds.c3, "N": bounds.N_g_n,
                     "omega1": bounds.omega_n})
    _write_csv(rows, BOUNDS_COLUMNS)
    return EXIT_OK


def cmd_table_pflaum(args) -> int:
    start, end = args.genus_range
    rows = []
    for g in range(start, end + 1):
        W_lower = homma_ommori_lower_Wn(g, args.n)
        N = pflaum_N(g, args.n)
        rows.append({"g": g, "n": args.n, "omega_n": omega(g, args.n), "W_lower": W_lower, "N": N,
                     "holds": W_lower > N})
    _write_csv(rows, PFLAUM_COLUMNS)
    return EXIT_OK

# --- Parser ---

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=None,
                        help=f"Worker processes for subtree enumeration (default: {config.DEFAULT_JOBS})")
    common.add_argument("--cache-dir", type=str, default=None,
                        help=f"Result cache directory (default: ${config.CACHE_DIR_ENV}, else no cache)")
    common.add_argument("--log-level", type=str, default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help=f"Logging level on standard error (default: {config.LOG_LEVEL})")
    common.add_argument("--profile", type=str, default=None, choices=sorted(config.PROFILES),
                        help="Apply a predefined configuration profile")

    parser = argparse.ArgumentParser(prog="wpgap", description="Weierstrass gap semigroup toolkit.")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("enumerate", parents=[common], help="List the semigroups of one genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--min-mult", type=int, default=None)
    p.add_argument("--even-gaps", type=int, default=None)
    p.add_argument("--require-interval", type=_interval, default=None, metavar="A:B",
                   help="Interval that must lie inside the semigroup")
    p.add_argument("--require-gap-in", type=_interval, default=None, metavar="A:B",
                   help="Interval that must contain at least one gap")
    p.add_argument("--format", choices=["csv", "json", "lines"], default="lines")
    p.add_argument("--sorted", action="store_true", help="Emit in lexicographic gap order")
    p.set_defaults(handler=cmd_enumerate)

    p = commands.add_parser("weight", parents=[common], help="Describe one gap set")
    p.add_argument("--gaps", type=str, required=True, help="Comma-separated ascending gaps")
    p.set_defaults(handler=cmd_weight)

    verify = commands.add_parser("verify", help="Run a verification").add_subparsers(dest="target", required=True)

    p = verify.add_parser("lemma", parents=[common], help="Exhaustive weight bound check for one class")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--genus-range", type=_interval, required=True, metavar="A:B")
    p.add_argument("--class", dest="lemma_class", choices=[c.value for c in LemmaClass], required=True)
    p.set_defaults(handler=cmd_verify_lemma)

    p = verify.add_parser("theorem", parents=[common], help="Counting criterion W1 > N(g, 1)")
    p.add_argument("--gamma", type=int, required=True)
    genus = p.add_mutually_exclusive_group(required=True)
    genus.add_argument("--genus", type=int)
    genus.add_argument("--genus-range", type=_interval, metavar="A:B")
    p.add_argument("--t-policy", choices=[t.value for t in TPolicy], default=TPolicy.MIN.value)
    p.set_defaults(handler=cmd_verify_theorem)

    p = verify.add_parser("properties", parents=[common], help="Structural checks over even-gap candidates")
    p.add_argument("--gamma-range", type=_interval, required=True, metavar="A:B")
    p.add_argument("--genus-range", type=_interval, required=True, metavar="A:B")
    p.set_defaults(handler=cmd_verify_properties)

    table = commands.add_parser("table", help="Emit a CSV table").add_subparsers(dest="table", required=True)

    p = table.add_parser("thresholds", parents=[common], help="Genus thresholds per gamma")
    p.add_argument("--gamma-range", type=_interval, required=True, metavar="A:B")
    p.add_argument("--g-max", type=int, default=500, help="Upper end of the exact scan (default: 500)")
    p.set_defaults(handler=cmd_table_thresholds)

    p = table.add_parser("bounds", parents=[common], help="Weight bounds per genus")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--genus-range", type=_interval, required=True, metavar="A:B")
    p.set_defaults(handler=cmd_table_bounds)

    p = table.add_parser("pflaum-n2", parents=[common], help="n-Weierstrass point counts for n >= 2")
    p.add_argument("--genus-range", type=_interval, required=True, metavar="A:B")
    p.add_argument("--n", type=int, default=2)
    p.set_defaults(handler=cmd_table_pflaum)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.profile:
        config.apply_config(args.profile)
    setup_logging(args.log_level)

    try:
        return args.handler(args)
    except GenusTooLarge as e:
        log.error(f"Genus cap exceeded: {e}")
        return EXIT_GENUS_CAP
    except WpgapError as e:
        log.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except OSError as e:
        log.error(f"Cannot use the cache directory: {e}")
        return EXIT_USAGE
