#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure interpreted fallback.

Runs each workload in two child processes (PERFCOAL_NO_NUMBA unset / set),
times steady state after a warmup inside the child, and prints a table.

    python benchmarks/bench_kernels.py [--reps N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = [
    ("prc_solve path:10", "prc_solve(path_graph(10))", 3),
    ("prc_solve cycle:10", "prc_solve(cycle_graph(10))", 3),
    ("prc_bruteforce path:8", "prc_bruteforce(path_graph(8))", 3),
    ("coalition_number path:8", "coalition_number_bruteforce(path_graph(8))", 3),
    ("sweep all n=4 graphs", "_kernels.batch_prc_over_masks(4, _kernels.FILTER_ALL)", 3),
]

CHILD = r"""
import json, time
from perfcoal import _kernels
from perfcoal.families import cycle_graph, path_graph
from perfcoal.solver import coalition_number_bruteforce, prc_bruteforce, prc_solve

workloads = json.loads({payload!r})
out = {{"mode": "numba" if _kernels.USE_NUMBA else "pure"}}
times = {{}}
for name, expr, reps in workloads:
    fn = eval("lambda: " + expr)
    fn()  # warmup (JIT compile / cache load)
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    times[name] = best
out["times"] = times
print(json.dumps(out))
"""


def run_mode(disable_numba: bool, workloads) -> dict:
    env = dict(os.environ)
    env["PERFCOAL_NO_NUMBA"] = "1" if disable_numba else "0"
    code = CHILD.format(payload=json.dumps(workloads))
    proc = subprocess.run([sys.executable, "-c", code], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--reps", type=int, default=None, help="override repetitions per workload")
    args = ap.parse_args()
    workloads = [(n, e, args.reps or r) for n, e, r in WORKLOADS]

    jit = run_mode(False, workloads)
    pure = run_mode(True, workloads)
    assert jit["mode"] == "numba" and pure["mode"] == "pure", (jit["mode"], pure["mode"])

    w = max(len(n) for n, _, _ in workloads)
    print(f"{'workload':<{w}}  {'numba':>10}  {'pure':>10}  {'speedup':>8}")
    for name, _, _ in workloads:
        a, b = jit["times"][name], pure["times"][name]
        print(f"{name:<{w}}  {a * 1e3:>8.2f}ms  {b * 1e3:>8.2f}ms  {b / a:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
