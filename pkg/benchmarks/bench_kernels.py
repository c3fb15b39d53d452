"""Compare the pure-Python and compiled kernel backends.

Times the bitset kernels and two library entry points that lean on
them, on seeded random graphs, under each backend in turn.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 16,32,64 --repeat 5
"""

from __future__ import annotations

import argparse
import random
import statistics
import timeit

from raagsplit import kernels
from raagsplit.graphs import Graph
from raagsplit.splitting import splitting_spectrum


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    labels = [f"v{i}" for i in range(n)]
    edges = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(labels, edges)


def bench(fn, repeat: int) -> float:
    # best-of median: one warmup call, then time single calls
    fn()
    times = timeit.repeat(fn, number=1, repeat=repeat)
    return statistics.median(times)


def workloads(g: Graph):
    adj = g.adjacency_masks
    full = (1 << g.n) - 1
    # graph methods memoize on the instance, so those rows rebuild the
    # graph each call; construction cost is identical for both backends
    labels = g.labels
    edges = [(labels[i], labels[j]) for i, j in g.edges()]
    return [
        ("components", lambda: kernels.components_bits(adj, full)),
        ("max cliques", lambda: kernels.maximal_cliques_bits(adj, full)),
        ("clique size", lambda: kernels.max_clique_size_bits(adj, full)),
        ("separators", lambda: Graph(labels, edges).minimal_clique_separators()),
        ("spectrum", lambda: splitting_spectrum(Graph(labels, edges))),
    ]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    # 48+ takes minutes on the pure backend; opt in via --sizes
    ap.add_argument("--sizes", default="16,32", help="comma-separated vertex counts")
    ap.add_argument("--edge-probability", type=float, default=0.35)
    ap.add_argument("--repeat", type=int, default=5, help="timed runs per cell")
    ap.add_argument("--seed", type=int, default=2718)
    args = ap.parse_args()

    if not kernels.have_compiled():
        print("compiled backend is not available; nothing to compare")
        return 1

    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(args.seed)
    graphs = [random_graph(rng, n, args.edge_probability) for n in sizes]

    print(f"seed {args.seed}, edge probability {args.edge_probability}, "
          f"median of {args.repeat} runs")
    header = f"{'workload':<14}{'n':>4}{'pure (ms)':>12}{'compiled (ms)':>15}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for g in graphs:
        for label, fn in workloads(g):
            results = {}
            for backend in ("pure", "compiled"):
                kernels.use_backend(backend)
                results[backend] = bench(fn, args.repeat)
            kernels.use_backend("compiled")
            ratio = results["pure"] / results["compiled"]
            print(
                f"{label:<14}{g.n:>4}"
                f"{results['pure'] * 1e3:>12.3f}"
                f"{results['compiled'] * 1e3:>15.3f}"
                f"{ratio:>8.1f}x"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
