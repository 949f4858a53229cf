"""Benchmark the compiled search kernel against the pure-Python twin.

Runs identical homomorphism-search workloads through both kernels and
reports wall-clock times and the speedup.  Usage:

    python3 benchmarks/bench_kernels.py [--repeat K]
"""

import argparse
import itertools
import time

from borrays import _homsearch_py
from borrays.diagrams import builtin, concat
from borrays.homcount import _compiled
from borrays.presentations import presentation

try:
    from borrays import _homsearch
except ImportError:
    _homsearch = None


def workloads():
    a = builtin("A")
    yield "A into Sym(4)", presentation(a), 4
    yield "A into Sym(5)", presentation(a), 5
    yield "AA into Sym(4)", presentation(concat(a, a)), 4


def run(kernel, p, n, repeat):
    gens, _, relators, order = _compiled(p)
    candidates = sorted(itertools.permutations(range(n)))
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = kernel.search_homs(
            n, len(gens), relators, order, candidates, [], 10**12, False
        )
        best = min(best, time.perf_counter() - t0)
    return result, best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions per workload (default 3)")
    args = parser.parse_args()

    if _homsearch is None:
        print("compiled kernel not available; build with "
              "'python3 setup.py build_ext --inplace'")
        return

    print(f"{'workload':<18} {'homs':>8} {'nodes':>10} "
          f"{'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, p, n in workloads():
        (count_p, _, nodes_p), t_pure = run(_homsearch_py, p, n, args.repeat)
        (count_c, _, nodes_c), t_fast = run(_homsearch, p, n, args.repeat)
        assert (count_p, nodes_p) == (count_c, nodes_c), (
            f"kernel disagreement on {name}")
        print(f"{name:<18} {count_p:>8} {nodes_p:>10} "
              f"{t_pure:>10.3f} {t_fast:>13.3f} {t_pure / t_fast:>7.1f}x")


if __name__ == "__main__":
    main()
