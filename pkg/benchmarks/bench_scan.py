"""Benchmark the compiled scan kernel against the numpy fallback.

Both kernels are run on the identical workload: counting the F_p points of
the eliminated quadric system of a bundled twist over all four sweep charts
of P^4 (p^4 + p^3 + p^2 + p candidate vectors).  Usage:

    python benchmarks/bench_scan.py [--p 97] [--repeat 3]

The process runs single-threaded here so the numbers compare raw kernel
throughput; thread scaling is a property of the dispatcher, not the kernels.
"""

import argparse
import time

from g2desc import _scan_py, scan
from g2desc.cli import load_fixture
from g2desc.descent import genus5_model
from g2desc.kummer import Twist
from g2desc.locsolve import eliminated_system

try:
    from g2desc import _scan
except ImportError:
    _scan = None


def workload():
    fs = load_fixture("6982.a.13964.1")
    curve = fs.record.curve
    model = genus5_model(curve, Twist(curve, fs.twists[2].delta))
    return eliminated_system(model.Q[:3], model.gamma)


def run(kernel, p, nq, nl, repeat):
    best = None
    count = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        n = 0
        for chart in range(4):
            n += kernel.count_range(p, nq, nl, chart, 0, p ** max(2 - chart, 0))
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
        if count is None:
            count = n
        elif count != n:
            raise AssertionError(f"count changed between repeats: {count} vs {n}")
    return count, best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=97, help="prime to scan (default 97)")
    ap.add_argument("--repeat", type=int, default=3, help="repeats, best-of (default 3)")
    args = ap.parse_args()
    p = args.p

    quads, lins = workload()
    nq, nl = scan._normalize(p, quads, lins)
    points = sum(p ** (4 - c) for c in range(4))
    print(f"p = {p}: {points} candidate vectors, 3 quadrics + 1 linear each")

    rows = []
    for name, kernel in (("compiled", _scan), ("python/numpy", _scan_py)):
        if kernel is None:
            print(f"{name:>12}: not built (pip install -e . rebuilds it)")
            continue
        count, best = run(kernel, p, nq, nl, args.repeat)
        rows.append((name, count, best))
        print(f"{name:>12}: count = {count}, best of {args.repeat}: "
              f"{best:.3f} s  ({points / best / 1e6:.1f} M pts/s)")
    if len(rows) == 2:
        if rows[0][1] != rows[1][1]:
            raise AssertionError(f"kernels disagree: {rows[0][1]} vs {rows[1][1]}")
        print(f"{'speedup':>12}: {rows[1][2] / rows[0][2]:.1f}x")


if __name__ == "__main__":
    main()
