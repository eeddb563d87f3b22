#!/usr/bin/env python3
"""Compare the compiled and pure-Python search kernels on fixed workloads.

Runs the identical enumeration through both kernel twins, insists the
results (visited graphs, node counts, completion flag, witness) match
exactly, and reports wall times. Exits nonzero on any mismatch, so this
doubles as a parity smoke test.

Usage:
    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --repeat 5 --heavy
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional

import potgraph._kernels_py as kernel_py
from potgraph.graphs import _embedding_order, pattern_k6_c5

try:
    import potgraph._kernels_c as kernel_c
except ImportError:
    kernel_c = None

PATTERN_ROWS = pattern_k6_c5().graph.rows
PATTERN_ORDER = _embedding_order(PATTERN_ROWS)

# (label, degree vector, use the wheel pattern sink)
WORKLOADS: list[tuple[str, tuple[int, ...], bool]] = [
    ("enumerate (5,3^5)", (5, 3, 3, 3, 3, 3), False),
    ("enumerate (6,3^6,2)", (6, 3, 3, 3, 3, 3, 3, 2), False),
    ("enumerate (6^2,3^4,2^2)", (6, 6, 3, 3, 3, 3, 2, 2), False),
    ("enumerate 3-regular n=8", (3,) * 8, False),
    ("wheel sink (6,3^6,2^2)", (6, 3, 3, 3, 3, 3, 3, 2, 2), True),
    ("wheel sink (8^3,3^6)", (8, 8, 8, 3, 3, 3, 3, 3, 3), True),
]

HEAVY_WORKLOADS: list[tuple[str, tuple[int, ...], bool]] = [
    ("enumerate 3-regular n=10", (3,) * 10, False),
    ("wheel sink (4^2,3^8)", (4, 4, 3, 3, 3, 3, 3, 3, 3, 3), True),
]


def run_kernel(kernel, terms, with_pattern, budget):
    rows = PATTERN_ROWS if with_pattern else None
    order = PATTERN_ORDER if with_pattern else None
    return kernel.search(terms, None, budget, None, rows, order, False)


def best_time(kernel, terms, with_pattern, budget, repeat):
    result: Optional[tuple] = None
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        got = run_kernel(kernel, terms, with_pattern, budget)
        best = min(best, time.perf_counter() - start)
        if result is None:
            result = got
        elif got != result:
            raise RuntimeError(f"kernel is not deterministic on {terms}")
    return result, best


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    parser.add_argument(
        "--heavy",
        action="store_true",
        help="include the long workloads (minutes on the pure kernel)",
    )
    parser.add_argument("--budget", type=int, default=10**9)
    args = parser.parse_args(argv)

    if kernel_c is None:
        print(
            "compiled kernel not built (POTGRAPH_NO_EXTENSION?); nothing to compare",
            file=sys.stderr,
        )
        return 1

    workloads = WORKLOADS + (HEAVY_WORKLOADS if args.heavy else [])
    width = max(len(name) for name, _, _ in workloads)
    print(
        f"{'workload':<{width}}  {'visited':>9} {'nodes':>11} "
        f"{'c [s]':>8} {'py [s]':>8} {'speedup':>7}"
    )
    mismatches = 0
    for name, terms, with_pattern in workloads:
        got_c, sec_c = best_time(kernel_c, terms, with_pattern, args.budget, args.repeat)
        got_py, sec_py = best_time(
            kernel_py, terms, with_pattern, args.budget, max(1, args.repeat // 3)
        )
        ok = got_c == got_py
        mismatches += not ok
        visited, nodes, complete, witness = got_c
        flag = "" if ok else "  MISMATCH"
        if witness is not None:
            flag += "  (halted on witness)"
        elif not complete:
            flag += "  (budget hit)"
        print(
            f"{name:<{width}}  {visited:>9} {nodes:>11} "
            f"{sec_c:>8.3f} {sec_py:>8.3f} {sec_py / max(sec_c, 1e-9):>6.1f}x{flag}"
        )
    if mismatches:
        print(f"{mismatches} workload(s) disagreed between kernels", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
