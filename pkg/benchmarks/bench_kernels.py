"""Time the numba kernels against the pure-numpy fallback.

Runs each hot kernel on iterate graphs at a few sizes and prints per-kernel
timings plus the speedup. The numba column includes a warmup call so JIT
compilation is not billed to the measurement.

    python3 benchmarks/bench_kernels.py [--sizes 256,512,1024] [--repeat 5]
"""

import argparse
import time

import numpy as np

from ilmgraphs import bitset
from ilmgraphs.graph import cycle_graph
from ilmgraphs.kernels import _numba, _numpy
from ilmgraphs.model import generate_series
from ilmgraphs.sequence import resolve_sequence


def build_graph(n_target: int):
    seq = resolve_sequence("alt10")
    steps = 0
    n = 4
    while n * 2 <= n_target:
        n *= 2
        steps += 1
    series, _ = generate_series(cycle_graph(4), seq, steps)
    return series[-1]


def timeit(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_graph(g, repeat: int):
    adj = g.words
    closed = g.closed_rows()
    n = g.n
    rng = np.random.default_rng(7)
    sel = np.flatnonzero(rng.random(n) < 0.5).tolist()
    xmask = bitset.from_indices(n, sel)
    ymask = bitset.complement(xmask, n)

    cases = [
        ("degrees", lambda m: m.degrees(adj, n)),
        ("neighbor_edge_counts", lambda m: m.neighbor_edge_counts(adj, n)),
        ("bfs_distances", lambda m: m.bfs_distances(adj, n, 0)),
        ("eccentricities", lambda m: m.eccentricities(adj, n)),
        ("edges_between", lambda m: m.edges_between(adj, n, xmask, ymask)),
        ("dominating_pair", lambda m: m.dominating_pair(closed, n)),
        ("dominating_triple", lambda m: m.dominating_triple(closed, n)),
        ("greedy_cycle", lambda m: m.greedy_cycle(adj, n, 200_000)),
    ]
    rows = []
    for name, call in cases:
        ref = call(_numpy)
        jit = call(_numba)  # warmup, and an equivalence spot check
        if isinstance(ref, np.ndarray):
            assert np.array_equal(ref, jit), name
        else:
            assert ref == jit, name
        t_np = timeit(lambda: call(_numpy), repeat)
        t_nb = timeit(lambda: call(_numba), repeat)
        rows.append((name, t_np, t_nb))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="256,512,1024")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    for target in sizes:
        g = build_graph(target)
        print(f"\nn = {g.n}, e = {g.edge_count}")
        print(f"{'kernel':24s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
        for name, t_np, t_nb in bench_graph(g, args.repeat):
            ratio = t_np / t_nb if t_nb > 0 else float("inf")
            print(f"{name:24s} {t_np*1e3:9.3f}ms {t_nb*1e3:9.3f}ms {ratio:7.1f}x")


if __name__ == "__main__":
    main()
