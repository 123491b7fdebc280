"""Compare the pure-Python and compiled canonical-form kernels.

Run with ``python benchmarks/bench_kernels.py [--loops N] [--repeat R]``.
"""
import argparse
import random
import timeit

from toricsect import kernels
from toricsect.enumeration import enumerate_definite
from toricsect.sampling import random_loop


def workload(n_loops: int, seed: int = 0):
    rng = random.Random(seed)
    reps = []
    while len(reps) < n_loops:
        d = random_loop(rng, max_n=12)
        if not d.degenerate and len(d) >= 3:
            reps.append(d.reps)
    reps += [d.reps for d in enumerate_definite(11).loops]
    return reps


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--loops", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    reps = workload(args.loops)
    print(f"{len(reps)} loops, dihedral canonical forms, best of {args.repeat}")
    results = {}
    for backend in kernels.available_backends():
        def run(backend=backend):
            for r in reps:
                kernels.canonical_key(r, True, backend)
        results[backend] = min(timeit.repeat(run, number=1, repeat=args.repeat))
        print(f"  {backend:7s} {results[backend] * 1e3:9.1f} ms")
    if len(results) == 2:
        print(f"  speedup {results['python'] / results['cython']:.1f}x")
    else:
        print("  compiled kernel not built; only the Python fallback was timed")


if __name__ == "__main__":
    main()
