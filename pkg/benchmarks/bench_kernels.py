"""Benchmark the pure-Python kernels against the compiled extension.

Runs the same enumeration workloads through idemfree._pykernels and
idemfree._ckernels (when built) and prints wall times plus speedup.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from idemfree import _pykernels
from idemfree.semigroup import SemigroupParams

try:
    from idemfree import _ckernels
except ImportError:
    _ckernels = None

BUDGET = 10**9


def scan_workload(k: int, n: int, free_mode: int, minimal_mode: int):
    p = SemigroupParams(k, n)
    cap = p.threshold + n
    args = (p.size, n, p.threshold, cap, 1, p.size, free_mode, minimal_mode, BUDGET)
    return lambda mod: mod.scan(*args)


def verify_workload(k: int, n: int, max_len: int):
    from idemfree.search import structure_bound

    p = SemigroupParams(k, n)
    args = (p.size, n, p.threshold, k > n, structure_bound(p), max_len, 1, p.size,
            BUDGET)
    return lambda mod: mod.verify_window(*args)


WORKLOADS = [
    ("scan minimal-smooth C_{13;13}", scan_workload(13, 13, 0, 2)),
    ("scan free-smooth C_{12;12}", scan_workload(12, 12, 2, 0)),
    ("scan both C_{17;2}", scan_workload(17, 2, 1, 1)),
    ("scan index C_{1;12}", scan_workload(1, 12, 0, 3)),
    ("verify window C_{8;5} len<=12", verify_workload(8, 5, 12)),
    ("verify window C_{7;4} len<=11", verify_workload(7, 4, 11)),
]


def best_time(fn, mod, repeat: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(mod)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=1)
    opts = parser.parse_args()

    if _ckernels is None:
        print("compiled extension not built; timing pure backend only")
    header = f"{'workload':<34} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in WORKLOADS:
        t_py, r_py = best_time(fn, _pykernels, opts.repeat)
        if _ckernels is None:
            print(f"{name:<34} {t_py:>9.3f}s {'-':>10} {'-':>8}")
            continue
        t_c, r_c = best_time(fn, _ckernels, opts.repeat)
        agree = "" if r_py == r_c else "  RESULTS DIFFER"
        print(f"{name:<34} {t_py:>9.3f}s {t_c:>9.3f}s {t_py / t_c:>7.1f}x{agree}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
