"""
Acceptance run for the command-line tool.

Runs each acceptance command through main.py as a subprocess, records exit
code, wall time and output digest, repeats the determinism-sensitive ones at
a second worker count, and aggregates everything into a CSV summary.
"""

import argparse
import hashlib
import logging
import os
import subprocess
import sys
import time

import pandas as pd

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
MAIN_SCRIPT = os.path.join(ROOT_DIR, "main.py")

log = logging.getLogger(__name__)

# (name, arguments, expected exit code, compare across worker counts)
ACCEPTANCE_CHECKS = [
    ("enumerate_genus_3", ["enumerate", "--genus", "3", "--sorted"], 0, True),
    ("enumerate_genus_10", ["enumerate", "--genus", "10", "--sorted", "--format", "csv"], 0, True),
    ("bounds_table", ["table", "bounds", "--gamma", "3", "--genus-range", "16:30"], 0, False),
    ("pflaum_n2", ["table", "pflaum-n2", "--genus-range", "3:10", "--n", "2"], 0, False),
    ("pflaum_n3", ["table", "pflaum-n2", "--genus-range", "3:10", "--n", "3"], 0, False),
    ("lemma_type1", ["verify", "lemma", "--gamma", "3", "--genus-range", "12:18", "--class", "I"], 0, True),
    ("lemma_type2", ["verify", "lemma", "--gamma", "3", "--genus-range", "12:18", "--class", "II"], 0, True),
    ("lemma_type3", ["verify", "lemma", "--gamma", "3", "--genus-range", "12:18", "--class", "III"], 0, True),
    ("lemma_case_b", ["verify", "lemma", "--gamma", "3", "--genus-range", "17:19", "--class", "b"], 0, True),
    ("theorem_16", ["verify", "theorem", "--gamma", "3", "--genus", "16", "--t-policy", "paper"], 0, False),
    ("theorem_12", ["verify", "theorem", "--gamma", "3", "--genus", "12"], 1, False),
    ("theorem_scan", ["verify", "theorem", "--gamma", "3", "--genus-range", "16:500"], 0, True),
    ("thresholds", ["table", "thresholds", "--gamma-range", "3:6"], 0, True),
    ("properties", ["verify", "properties", "--gamma-range", "0:4", "--genus-range", "2:16"], 0, True),
    ("genus_cap", ["enumerate", "--genus", "99"], 3, False),
]


def run_command(args: list[str], jobs: int) -> dict:
    """Runs main.py with the given arguments and worker count."""
    cmd = [sys.executable, MAIN_SCRIPT] + args + ["--jobs", str(jobs)]
    log.info(f"Running: {' '.join(cmd)}")
    start = time.perf_counter()
    result = subprocess.run(cmd, capture_output=True, text=True, cwd=ROOT_DIR)
    elapsed = time.perf_counter() - start
    if result.returncode not in (0, 1):
        log.debug(f"STDERR: {result.stderr}")
    return {
        "exit_code": result.returncode,
        "seconds": round(elapsed, 3),
        "stdout_sha256": hashlib.sha256(result.stdout.encode('utf-8')).hexdigest(),
    }


def run_acceptance(jobs: int, parallel_jobs: int) -> pd.DataFrame:
    rows = []
    for name, args, expected_exit, compare_jobs in ACCEPTANCE_CHECKS:
        outcome = run_command(args, jobs)
        row = {"check": name, "expected_exit": expected_exit, **outcome, "deterministic": None}
        if compare_jobs:
            parallel = run_command(args, parallel_jobs)
            row["deterministic"] = parallel["stdout_sha256"] == outcome["stdout_sha256"] \
                and parallel["exit_code"] == outcome["exit_code"]
        row["passed"] = row["exit_code"] == expected_exit and row["deterministic"] is not False
        if row["passed"]:
            log.info(f"Check {name} passed in {row['seconds']}s")
        else:
            log.error(f"Check {name} failed: exit {row['exit_code']} (expected {expected_exit}), "
                      f"deterministic={row['deterministic']}")
        rows.append(row)
    return pd.DataFrame(rows)


def main():
    parser = argparse.ArgumentParser(description="Run the acceptance checks and write a CSV summary.")
    parser.add_argument("--jobs", type=int, default=1, help="Worker count for the reference run (default: 1)")
    parser.add_argument("--parallel-jobs", type=int, default=8,
                        help="Worker count for the determinism comparison (default: 8)")
    parser.add_argument("--output", type=str, default="acceptance_summary.csv", help="Summary CSV path")
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')

    summary = run_acceptance(args.jobs, args.parallel_jobs)
    summary.to_csv(args.output, index=False, lineterminator="\n")
    log.info(f"Summary written to {args.output}")

    failed = summary[~summary["passed"]]
    if not failed.empty:
        log.error(f"{len(failed)} of {len(summary)} checks failed: {', '.join(failed['check'])}")
        sys.exit(1)
    log.info(f"All {len(summary)} checks passed in {summary['seconds'].sum():.1f}s")


if __name__ == "__main__":
    main()
