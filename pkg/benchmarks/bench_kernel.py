"""Compare the compiled and numpy fixed-point kernels.

    python benchmarks/bench_kernel.py [--sizes 8 10 12] [--repeat 3]

Each size n builds a ring theory with n core sentences, so the search covers
3^n hypotheses.  Both kernels must return identical fixed-point arrays.
"""

import argparse
import statistics
import time

import numpy as np

from truthsem.graph import closure
from truthsem.program import available_backends, compile_program, find_fixed_points
from truthsem.theoryfile import parse_theory


def ring_theory(n):
    lines = []
    for i in range(n):
        j = (i + 1) % n
        lines.append(f"let X{i} := T(X{i}) & ~T(X{j})" if i % 2 == 0 else f"let X{i} := T(X{j}) | ~T(X{i})")
    return parse_theory("\n".join(lines))


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return out, min(times), statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[6, 8, 10, 12])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    names = sorted(backends)
    print(f"{'n':>3} {'hypotheses':>11} " + " ".join(f"{b + ' (s)':>14}" for b in names) + "  speedup")
    for n in args.sizes:
        th = ring_theory(n)
        prog = compile_program(closure((), th), th)
        results, best = {}, {}
        for b in names:
            results[b], best[b], _ = best_of(lambda b=b: find_fixed_points(prog, backends[b]), args.repeat)
        if len(names) > 1:
            assert all(np.array_equal(results[names[0]], r) for r in results.values()), "kernels disagree"
        speedup = best["python"] / best["compiled"] if "compiled" in best else float("nan")
        row = " ".join(f"{best[b]:>14.4f}" for b in names)
        print(f"{n:>3} {3 ** n:>11} {row}  {speedup:6.1f}x")


if __name__ == "__main__":
    main()
