"""Benchmark the compiled kernels against the pure-Python fallback.

Workloads mirror what the verification sweeps actually do: all-pairs BFS on
trees, canonical labeling of tree cubes, and maximal-clique enumeration of
tree cubes.

Usage:
    python benchmarks/bench_kernels.py [--max-order N] [--repeat R]
"""

from __future__ import annotations

import argparse
import time

from treecube._kernels import _ckern, pykern
from treecube.graphs import power
from treecube.trees import enumerate_trees


def build_workloads(max_order: int):
    trees = []
    cubes = []
    for p in range(2, max_order + 1):
        for T in enumerate_trees(p):
            trees.append((T.p, T.graph._adj))
            C = power(T.graph, 3)
            cubes.append((C.p, C._adj))
    return {
        "all_pairs_distances / trees": ("all_pairs_distances", trees),
        "canonical_labeling / cubes": ("canonical_labeling", cubes),
        "canonical_labeling / trees": ("canonical_labeling", trees),
        "maximal_cliques / cubes": ("maximal_cliques", cubes),
    }


def run(backend, fn_name: str, inputs, repeat: int) -> float:
    fn = getattr(backend, fn_name)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for p, adj in inputs:
            fn(p, adj)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=10)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _ckern is None:
        print("compiled kernels not available; build with "
              "'pip install -e . --no-build-isolation' first")
        return

    workloads = build_workloads(args.max_order)
    print(f"tree orders up to {args.max_order}, best of {args.repeat} runs\n")
    print(f"{'workload':<34} {'python':>10} {'cython':>10} {'speedup':>9}")
    print("-" * 67)
    for label, (fn_name, inputs) in workloads.items():
        t_py = run(pykern, fn_name, inputs, args.repeat)
        t_cy = run(_ckern, fn_name, inputs, args.repeat)
        print(f"{label:<34} {t_py * 1e3:>8.1f}ms {t_cy * 1e3:>8.1f}ms "
              f"{t_py / t_cy:>8.1f}x")


if __name__ == "__main__":
    main()
